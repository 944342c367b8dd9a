#ifndef RANKFREQ_TRANSLIT_HPP
#define RANKFREQ_TRANSLIT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rankfreq {

class TranslitError : public std::runtime_error {
 public:
  TranslitError(const std::string& msg, std::size_t byte_offset)
      : std::runtime_error(msg), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

struct TranslitRow {
  std::string cyr;
  std::string lat;
};

// Substitution table, longest match on either side. Both directions must be
// injective or the constructor refuses the table.
//
// Naive concatenation of per-letter images is not decodable: šč reads back
// as щ whether it came from щ or from ш+ч, and ja as я or й+а. Every such
// colliding pair is found when the table loads, and to_latin drops a middle
// dot (U+00B7) between the two images; from_latin skips the dot. That makes
// from_latin(to_latin(s)) = s for every supported string. The collision
// scan checks adjacent pairs, which is exhaustive while no Latin source is
// longer than two code points (true of the shipped table).
class TranslitTable {
 public:
  static TranslitTable from_rows(std::vector<TranslitRow> rows);
  // TSV `cyrillic\tlatin`; # comments and blank lines ignored.
  static TranslitTable from_tsv(std::istream& in);
  static const TranslitTable& builtin();

  std::string to_latin(const std::string& text) const;
  std::string from_latin(const std::string& text) const;

  const std::vector<TranslitRow>& rows() const { return rows_; }

  static constexpr char32_t kSeparator = U'·';

 private:
  TranslitTable() = default;

  std::vector<TranslitRow> rows_;
  std::unordered_map<std::string, std::size_t> by_cyr_;
  std::unordered_map<std::string, std::size_t> by_lat_;
  std::size_t max_cyr_cp_ = 0;  // longest source, in code points
  std::size_t max_lat_cp_ = 0;
  std::unordered_set<std::uint64_t> hazard_pairs_;  // (row_i << 32) | row_j
};

// Builtin-table shorthands.
std::string to_latin(const std::string& text);
std::string from_latin(const std::string& text);

}  // namespace rankfreq

#endif
