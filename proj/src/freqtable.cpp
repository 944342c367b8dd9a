#include "rankfreq/freqtable.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace rankfreq {

namespace {

FrequencyTable rank_counts(std::unordered_map<std::string, std::uint64_t>&& counts,
                           std::uint64_t corpus_size) {
  if (corpus_size == 0) throw EmptyCorpusError("empty corpus");
  FrequencyTable table;
  table.corpus_size = corpus_size;
  table.entries.reserve(counts.size());
  for (auto& [word, count] : counts) {
    RankEntry e;
    e.word = word;
    e.count = count;
    table.entries.push_back(std::move(e));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.word < b.word;  // byte order == code-point order
            });
  std::uint64_t rank = 0;
  for (auto& e : table.entries) {
    e.rank = ++rank;
    e.freq = static_cast<double>(e.count) / static_cast<double>(corpus_size);
  }
  return table;
}

}  // namespace

FrequencyTable build_table(std::span<const Token> tokens) {
  std::unordered_map<std::string, std::uint64_t> counts;
  counts.reserve(tokens.size() / 4 + 16);
  for (const Token& t : tokens) ++counts[t];
  return rank_counts(std::move(counts), tokens.size());
}

std::vector<RankEntry> top_k(const FrequencyTable& table, std::size_t k) {
  k = std::min(k, table.entries.size());
  return {table.entries.begin(), table.entries.begin() + static_cast<std::ptrdiff_t>(k)};
}

FrequencyTable merge_tables(std::span<const FrequencyTable> tables) {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t corpus_size = 0;
  for (const FrequencyTable& t : tables) {
    corpus_size += t.corpus_size;
    for (const RankEntry& e : t.entries) counts[e.word] += e.count;
  }
  return rank_counts(std::move(counts), corpus_size);
}

std::uint64_t plateau_cap(const FrequencyTable& table, std::uint64_t min_count) {
  std::uint64_t cap = 0;
  for (const RankEntry& e : table.entries) {
    if (e.count < min_count) break;
    cap = e.rank;
  }
  return cap;
}

void write_tsv(const FrequencyTable& table, std::ostream& out) {
  out << "rank\tword\tcount\tfreq\n";
  char buf[64];
  for (const RankEntry& e : table.entries) {
    std::snprintf(buf, sizeof(buf), "%" PRIu64 "\t", e.rank);
    out << buf << e.word;
    std::snprintf(buf, sizeof(buf), "\t%" PRIu64 "\t%.6g\n", e.count, e.freq);
    out << buf;
  }
}

FrequencyTable read_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("rank\tword\tcount", 0) != 0)
    throw std::runtime_error("frequency table: missing header");
  FrequencyTable table;
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    std::size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
    if (t3 == std::string::npos)
      throw std::runtime_error("frequency table: bad row at line " + std::to_string(line_no));
    RankEntry e;
    try {
      e.rank = std::stoull(line.substr(0, t1));
      e.word = line.substr(t1 + 1, t2 - t1 - 1);
      e.count = std::stoull(line.substr(t2 + 1, t3 - t2 - 1));
    } catch (const std::exception&) {
      throw std::runtime_error("frequency table: bad row at line " + std::to_string(line_no));
    }
    if (e.rank != table.entries.size() + 1 || e.word.empty() || e.count == 0)
      throw std::runtime_error("frequency table: bad row at line " + std::to_string(line_no));
    if (!table.entries.empty() && e.count > table.entries.back().count)
      throw std::runtime_error("frequency table: counts increase at line " + std::to_string(line_no));
    table.corpus_size += e.count;
    table.entries.push_back(std::move(e));
  }
  if (table.entries.empty()) throw EmptyCorpusError("frequency table: no rows");
  for (auto& e : table.entries)
    e.freq = static_cast<double>(e.count) / static_cast<double>(table.corpus_size);
  return table;
}

}  // namespace rankfreq
