#ifndef RANKFREQ_UNICODE_HPP
#define RANKFREQ_UNICODE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankfreq {

// Malformed UTF-8; byte_offset points at the first offending byte.
class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(const std::string& msg, std::size_t byte_offset)
      : std::runtime_error(msg), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

std::u32string decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

bool is_ascii_digit(char32_t cp);
// ASCII whitespace plus NBSP, general-punctuation spaces, line/paragraph
// separators and the ideographic space.
bool is_whitespace(char32_t cp);
// Letter classification over the scripts this toolkit handles
// (Latin incl. extended blocks, Greek, Cyrillic, plus a few common
// non-European blocks so script_filter=none behaves sanely).
bool is_letter(char32_t cp);
bool is_cyrillic_letter(char32_t cp);
bool is_ukrainian_letter(char32_t cp);
// Apostrophe forms accepted inside words (U+0027, U+2019, U+02BC).
bool is_apostrophe(char32_t cp);
// En/em dash, horizontal bar, figure dash, minus sign. Hyphen-minus is not
// included; it is handled separately as a potential word-internal character.
bool is_dash(char32_t cp);
bool is_combining_mark(char32_t cp);
char32_t to_lower(char32_t cp);

}  // namespace rankfreq

#endif
