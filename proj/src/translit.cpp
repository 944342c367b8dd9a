#include "rankfreq/translit.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include "rankfreq/unicode.hpp"

namespace rankfreq {

namespace detail {
extern const char* const kBuiltinTranslitTsv;
}

namespace {

constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

std::uint64_t pack(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

std::size_t utf8_len(char32_t cp) {
  return cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
}

// Code points plus the byte offset where each starts (with one extra
// entry for the end), so matches can be taken as byte substrings.
struct Decoded {
  std::u32string cps;
  std::vector<std::size_t> off;
};

Decoded decode_all(const std::string& text) {
  Decoded d;
  d.cps = decode_utf8(text);
  d.off.resize(d.cps.size() + 1);
  std::size_t b = 0;
  for (std::size_t i = 0; i < d.cps.size(); ++i) {
    d.off[i] = b;
    b += utf8_len(d.cps[i]);
  }
  d.off.back() = b;
  return d;
}

std::string char_repr(char32_t cp) {
  std::string s = "'";
  append_utf8(s, cp);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "' (U+%04X)", static_cast<unsigned>(cp));
  return s + buf;
}

// Longest-match lookup at code point i; returns the row and how many code
// points it consumed.
std::size_t match(const std::unordered_map<std::string, std::size_t>& sources,
                  std::size_t max_cp, const std::string& text, const Decoded& d,
                  std::size_t i, std::size_t& consumed) {
  std::size_t avail = d.cps.size() - i;
  for (std::size_t k = std::min(max_cp, avail); k >= 1; --k) {
    auto it = sources.find(text.substr(d.off[i], d.off[i + k] - d.off[i]));
    if (it != sources.end()) {
      consumed = k;
      return it->second;
    }
  }
  return kNoRow;
}

}  // namespace

TranslitTable TranslitTable::from_rows(std::vector<TranslitRow> rows) {
  TranslitTable t;
  t.rows_ = std::move(rows);
  if (t.rows_.empty()) throw std::runtime_error("translit table: no rows");
  for (std::size_t i = 0; i < t.rows_.size(); ++i) {
    const TranslitRow& row = t.rows_[i];
    std::u32string cyr = decode_utf8(row.cyr);
    std::u32string lat = decode_utf8(row.lat);
    if (cyr.empty() || lat.empty())
      throw std::runtime_error("translit table: empty side in row " + std::to_string(i + 1));
    for (char32_t cp : cyr)
      if (cp == kSeparator)
        throw std::runtime_error("translit table: separator U+00B7 cannot be a source");
    for (char32_t cp : lat)
      if (cp == kSeparator)
        throw std::runtime_error("translit table: separator U+00B7 cannot be a target");
    if (!t.by_cyr_.emplace(row.cyr, i).second)
      throw std::runtime_error("translit table: duplicate source \"" + row.cyr + "\"");
    if (!t.by_lat_.emplace(row.lat, i).second)
      throw std::runtime_error("translit table: duplicate target \"" + row.lat +
                               "\" breaks invertibility");
    t.max_cyr_cp_ = std::max(t.max_cyr_cp_, cyr.size());
    t.max_lat_cp_ = std::max(t.max_lat_cp_, lat.size());
  }

  for (const TranslitRow& row : t.rows_)
    if (t.from_latin(row.lat) != row.cyr)
      throw std::runtime_error("translit table: \"" + row.lat +
                               "\" does not decode back to \"" + row.cyr + "\"");

  // Mark every adjacent image pair whose plain concatenation reads back
  // wrong; to_latin will separate them.
  for (std::size_t i = 0; i < t.rows_.size(); ++i) {
    for (std::size_t j = 0; j < t.rows_.size(); ++j) {
      bool clean;
      try {
        clean = t.from_latin(t.rows_[i].lat + t.rows_[j].lat) ==
                t.rows_[i].cyr + t.rows_[j].cyr;
      } catch (const TranslitError&) {
        clean = false;
      }
      if (!clean) t.hazard_pairs_.insert(pack(i, j));
    }
  }
  return t;
}

TranslitTable TranslitTable::from_tsv(std::istream& in) {
  std::vector<TranslitRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw std::runtime_error("translit table: bad line " + std::to_string(line_no));
    rows.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return from_rows(std::move(rows));
}

const TranslitTable& TranslitTable::builtin() {
  static const TranslitTable table = [] {
    std::istringstream in(detail::kBuiltinTranslitTsv);
    return from_tsv(in);
  }();
  return table;
}

std::string TranslitTable::to_latin(const std::string& text) const {
  Decoded d = decode_all(text);
  std::string out;
  out.reserve(text.size() * 2);
  std::size_t prev = kNoRow;
  for (std::size_t i = 0; i < d.cps.size();) {
    std::size_t consumed = 0;
    std::size_t row = match(by_cyr_, max_cyr_cp_, text, d, i, consumed);
    if (row == kNoRow)
      throw TranslitError("to_latin: unsupported character " + char_repr(d.cps[i]) +
                              " at byte " + std::to_string(d.off[i]),
                          d.off[i]);
    if (prev != kNoRow && hazard_pairs_.contains(pack(prev, row)))
      append_utf8(out, kSeparator);
    out += rows_[row].lat;
    prev = row;
    i += consumed;
  }
  return out;
}

std::string TranslitTable::from_latin(const std::string& text) const {
  Decoded d = decode_all(text);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < d.cps.size();) {
    if (d.cps[i] == kSeparator) {
      ++i;
      continue;
    }
    std::size_t consumed = 0;
    std::size_t row = match(by_lat_, max_lat_cp_, text, d, i, consumed);
    if (row == kNoRow)
      throw TranslitError("from_latin: unsupported sequence at " + char_repr(d.cps[i]) +
                              ", byte " + std::to_string(d.off[i]),
                          d.off[i]);
    out += rows_[row].cyr;
    i += consumed;
  }
  return out;
}

std::string to_latin(const std::string& text) { return TranslitTable::builtin().to_latin(text); }

std::string from_latin(const std::string& text) {
  return TranslitTable::builtin().from_latin(text);
}

}  // namespace rankfreq
