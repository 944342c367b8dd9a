#ifndef RANKFREQ_TOKENIZER_HPP
#define RANKFREQ_TOKENIZER_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankfreq {

using Token = std::string;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScriptFilter {
  kUkrainianCyrillic,  // letters must be in the 33-letter Ukrainian alphabet
  kCyrillic,           // any Cyrillic-block letter
  kNone,               // any letter
};

// One euphony group: every variant is replaced by the canonical form.
struct VariantGroup {
  std::string canonical;
  std::vector<std::string> variants;  // includes the canonical form
};

struct CleanConfig {
  bool lowercase = true;
  bool keep_internal_hyphen = true;
  bool keep_apostrophe = true;
  ScriptFilter script_filter = ScriptFilter::kUkrainianCyrillic;
  std::vector<VariantGroup> variant_merge_groups;

  // Throws ConfigError if groups overlap or a canonical form is missing
  // from its own group.
  void validate() const;
};

// What happened to every whitespace/dash-delimited candidate item.
struct CleanReport {
  std::uint64_t tokens_kept = 0;
  std::uint64_t removed_numbers = 0;
  std::uint64_t removed_number_words = 0;
  std::uint64_t removed_foreign_script = 0;
  std::uint64_t removed_punctuation_only = 0;
  std::uint64_t dashes_removed = 0;

  std::uint64_t candidates_examined() const {
    return tokens_kept + removed_numbers + removed_number_words +
           removed_foreign_script + removed_punctuation_only + dashes_removed;
  }
  CleanReport& operator+=(const CleanReport& other);
  friend bool operator==(const CleanReport&, const CleanReport&) = default;
};

struct TokenizeResult {
  std::vector<Token> tokens;
  CleanReport report;
};

// Splits text into candidate items (whitespace-delimited; dash runs form
// separate items), applies the removal rules and normalization, and
// accounts for every item in the report.
TokenizeResult tokenize(std::string_view text, const CleanConfig& config);

std::vector<Token> apply_variant_merge(std::vector<Token> tokens,
                                       const CleanConfig& config);

// For corpora that are already token streams (one token per whitespace
// run), e.g. synth output: no cleaning, no removal rules.
std::vector<Token> split_pretokenized(std::string_view text);

ScriptFilter script_filter_from_name(std::string_view name);
std::string_view script_filter_name(ScriptFilter filter);

}  // namespace rankfreq

#endif
