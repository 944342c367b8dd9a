#include "rankfreq/tokenizer.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "rankfreq/unicode.hpp"

namespace rankfreq {

CleanReport& CleanReport::operator+=(const CleanReport& other) {
  tokens_kept += other.tokens_kept;
  removed_numbers += other.removed_numbers;
  removed_number_words += other.removed_number_words;
  removed_foreign_script += other.removed_foreign_script;
  removed_punctuation_only += other.removed_punctuation_only;
  dashes_removed += other.dashes_removed;
  return *this;
}

void CleanConfig::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& group : variant_merge_groups) {
    if (group.canonical.empty())
      throw ConfigError("variant group has an empty canonical form");
    if (std::find(group.variants.begin(), group.variants.end(), group.canonical) ==
        group.variants.end())
      throw ConfigError("canonical form \"" + group.canonical +
                        "\" is not a member of its own group");
    for (const auto& v : group.variants) {
      if (v.empty()) throw ConfigError("variant group contains an empty word");
      if (!seen.insert(v).second)
        throw ConfigError("variant \"" + v + "\" appears in more than one group");
    }
  }
}

namespace {

bool letter_in_script(char32_t cp, ScriptFilter filter) {
  switch (filter) {
    case ScriptFilter::kUkrainianCyrillic:
      return is_ukrainian_letter(cp);
    case ScriptFilter::kCyrillic:
      return is_cyrillic_letter(cp);
    case ScriptFilter::kNone:
      return true;
  }
  return false;
}

// One whitespace-delimited chunk split at dash runs: a maximal run of
// en/em-dash-like characters, or of two and more hyphen-minus characters,
// separates words and is itself a candidate (counted in dashes_removed).
// A chunk consisting solely of hyphen-minus is a dash item too.
struct Candidate {
  std::u32string text;
  bool is_dash_run = false;
};

void split_chunk(const std::u32string& chunk, std::vector<Candidate>& out) {
  if (std::all_of(chunk.begin(), chunk.end(),
                  [](char32_t c) { return is_dash(c) || c == U'-'; })) {
    out.push_back({chunk, true});
    return;
  }
  std::size_t i = 0;
  std::u32string word;
  auto flush_word = [&] {
    if (!word.empty()) {
      out.push_back({word, false});
      word.clear();
    }
  };
  while (i < chunk.size()) {
    if (is_dash(chunk[i]) || (chunk[i] == U'-' && i + 1 < chunk.size() && chunk[i + 1] == U'-')) {
      std::size_t j = i;
      while (j < chunk.size() && (is_dash(chunk[j]) || chunk[j] == U'-')) ++j;
      flush_word();
      out.push_back({chunk.substr(i, j - i), true});
      i = j;
    } else {
      word.push_back(chunk[i]);
      ++i;
    }
  }
  flush_word();
}

enum class Outcome { kKept, kNumber, kNumberWord, kForeignScript, kPunctuationOnly };

// Classifies one candidate and produces the normalized surface for kept ones.
Outcome classify(const std::u32string& raw, const CleanConfig& config,
                 std::u32string& surface) {
  // trim: strip everything that is not a letter or digit from both ends
  std::size_t lo = 0, hi = raw.size();
  while (lo < hi && !is_letter(raw[lo]) && !is_ascii_digit(raw[lo])) ++lo;
  while (hi > lo && !is_letter(raw[hi - 1]) && !is_ascii_digit(raw[hi - 1])) --hi;
  if (lo == hi) return Outcome::kPunctuationOnly;

  bool has_digit = false, has_letter = false;
  for (std::size_t i = lo; i < hi; ++i) {
    has_digit |= is_ascii_digit(raw[i]);
    has_letter |= is_letter(raw[i]);
  }
  if (has_digit) return has_letter ? Outcome::kNumberWord : Outcome::kNumber;

  surface.clear();
  for (std::size_t i = lo; i < hi; ++i) {
    const char32_t cp = raw[i];
    if (is_letter(cp)) {
      if (!letter_in_script(cp, config.script_filter)) return Outcome::kForeignScript;
      surface.push_back(config.lowercase ? to_lower(cp) : cp);
    } else if (is_apostrophe(cp)) {
      // kept (normalized to U+0027) only as a single mark between letters
      if (config.keep_apostrophe && i > lo && i + 1 < hi && is_letter(raw[i - 1]) &&
          is_letter(raw[i + 1]))
        surface.push_back(U'\'');
    } else if (cp == U'-') {
      if (config.keep_internal_hyphen && i > lo && i + 1 < hi && is_letter(raw[i - 1]) &&
          is_letter(raw[i + 1]))
        surface.push_back(U'-');
    }
    // all other interior characters (stray punctuation, combining marks) are dropped
  }
  return Outcome::kKept;
}

}  // namespace

TokenizeResult tokenize(std::string_view text, const CleanConfig& config) {
  config.validate();
  const std::u32string cps = decode_utf8(text);

  TokenizeResult result;
  std::vector<Candidate> candidates;
  std::u32string chunk;
  std::size_t i = 0;
  auto flush_chunk = [&] {
    if (!chunk.empty()) {
      split_chunk(chunk, candidates);
      chunk.clear();
    }
  };
  while (i <= cps.size()) {
    if (i == cps.size() || is_whitespace(cps[i])) {
      flush_chunk();
      ++i;
    } else {
      chunk.push_back(cps[i]);
      ++i;
    }
  }

  std::u32string surface;
  for (const auto& cand : candidates) {
    if (cand.is_dash_run) {
      ++result.report.dashes_removed;
      continue;
    }
    switch (classify(cand.text, config, surface)) {
      case Outcome::kKept:
        ++result.report.tokens_kept;
        result.tokens.push_back(encode_utf8(surface));
        break;
      case Outcome::kNumber:
        ++result.report.removed_numbers;
        break;
      case Outcome::kNumberWord:
        ++result.report.removed_number_words;
        break;
      case Outcome::kForeignScript:
        ++result.report.removed_foreign_script;
        break;
      case Outcome::kPunctuationOnly:
        ++result.report.removed_punctuation_only;
        break;
    }
  }
  return result;
}

std::vector<Token> apply_variant_merge(std::vector<Token> tokens,
                                       const CleanConfig& config) {
  config.validate();
  if (config.variant_merge_groups.empty()) return tokens;
  std::unordered_map<std::string, const std::string*> canonical_of;
  for (const auto& group : config.variant_merge_groups)
    for (const auto& v : group.variants) canonical_of.emplace(v, &group.canonical);
  for (auto& tok : tokens) {
    auto it = canonical_of.find(tok);
    if (it != canonical_of.end()) tok = *it->second;
  }
  return tokens;
}

std::vector<Token> split_pretokenized(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  std::vector<Token> tokens;
  std::string current;
  for (char32_t cp : cps) {
    if (is_whitespace(cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      append_utf8(current, cp);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

ScriptFilter script_filter_from_name(std::string_view name) {
  if (name == "ukrainian-cyrillic") return ScriptFilter::kUkrainianCyrillic;
  if (name == "cyrillic") return ScriptFilter::kCyrillic;
  if (name == "none") return ScriptFilter::kNone;
  throw ConfigError("unknown script_filter \"" + std::string(name) +
                    "\" (expected ukrainian-cyrillic, cyrillic, or none)");
}

std::string_view script_filter_name(ScriptFilter filter) {
  switch (filter) {
    case ScriptFilter::kUkrainianCyrillic:
      return "ukrainian-cyrillic";
    case ScriptFilter::kCyrillic:
      return "cyrillic";
    case ScriptFilter::kNone:
      return "none";
  }
  return "none";
}

}  // namespace rankfreq
