#ifndef RANKFREQ_FREQTABLE_HPP
#define RANKFREQ_FREQTABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankfreq/tokenizer.hpp"

namespace rankfreq {

class EmptyCorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankEntry {
  std::uint64_t rank = 0;  // 1-based, no gaps
  std::string word;
  std::uint64_t count = 0;
  double freq = 0.0;  // count / corpus_size

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct FrequencyTable {
  std::vector<RankEntry> entries;  // sorted by count desc, then word asc
  std::uint64_t corpus_size = 0;

  std::uint64_t vocabulary_size() const { return entries.size(); }
};

// Counts tokens and ranks them; ties broken by byte-lexicographic word
// order (equals code-point order for UTF-8). Throws EmptyCorpusError on an
// empty stream.
FrequencyTable build_table(std::span<const Token> tokens);

std::vector<RankEntry> top_k(const FrequencyTable& table, std::size_t k);

// Sums counts per word across tables and re-ranks. Associative and
// commutative; merge_tables(build_table(a), build_table(b)) equals
// build_table(a+b).
FrequencyTable merge_tables(std::span<const FrequencyTable> tables);

// Last rank whose count is at least min_count (0 if none). Fits beyond this
// rank sit on quantized count plateaus.
std::uint64_t plateau_cap(const FrequencyTable& table, std::uint64_t min_count = 5);

// TSV with header rank\tword\tcount\tfreq, freq to 6 significant digits.
void write_tsv(const FrequencyTable& table, std::ostream& out);
FrequencyTable read_tsv(std::istream& in);

}  // namespace rankfreq

#endif
