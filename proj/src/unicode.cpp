#include "rankfreq/unicode.hpp"

namespace rankfreq {

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw Utf8Error("invalid UTF-8 lead byte at offset " + std::to_string(i), i);
    }
    if (i + len > text.size())
      throw Utf8Error("truncated UTF-8 sequence at offset " + std::to_string(i), i);
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80)
        throw Utf8Error("invalid UTF-8 continuation byte at offset " + std::to_string(i + k),
                        i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong encodings and surrogates
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw Utf8Error("invalid UTF-8 code point at offset " + std::to_string(i), i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_whitespace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v' || cp == 0x0085 || cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

namespace {

struct Range {
  char32_t lo, hi;
};

// Letter ranges, ascending.
constexpr Range kLetterRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A},                    // ASCII
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x00FF},  // Latin-1
    {0x0100, 0x024F},                                      // Latin Extended-A/B
    {0x0386, 0x0386}, {0x0388, 0x03A1}, {0x03A3, 0x03CE},  // Greek
    {0x0400, 0x04FF}, {0x0500, 0x052F},                    // Cyrillic
    {0x05D0, 0x05EA},                                      // Hebrew
    {0x0620, 0x064A}, {0x066E, 0x06D3},                    // Arabic letters
    {0x1E00, 0x1EFF},                                      // Latin Ext. Additional
    {0x3040, 0x309F}, {0x30A0, 0x30FF},                    // Kana
    {0x4E00, 0x9FFF},                                      // CJK
    {0xAC00, 0xD7AF},                                      // Hangul
};

bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (cp < ranges[i].lo) return false;
    if (cp <= ranges[i].hi) return true;
  }
  return false;
}

}  // namespace

bool is_letter(char32_t cp) {
  return in_ranges(cp, kLetterRanges, std::size(kLetterRanges));
}

bool is_cyrillic_letter(char32_t cp) {
  return (cp >= 0x0400 && cp <= 0x04FF) || (cp >= 0x0500 && cp <= 0x052F);
}

bool is_ukrainian_letter(char32_t cp) {
  // 33-letter alphabet, both cases.
  if (cp >= 0x0430 && cp <= 0x0449) return true;  // а..щ
  if (cp >= 0x0410 && cp <= 0x0429) return true;  // А..Щ
  switch (cp) {
    case 0x044C: case 0x044E: case 0x044F:            // ь ю я
    case 0x042C: case 0x042E: case 0x042F:            // Ь Ю Я
    case 0x0454: case 0x0456: case 0x0457: case 0x0491:  // є і ї ґ
    case 0x0404: case 0x0406: case 0x0407: case 0x0490:  // Є І Ї Ґ
      return true;
    default:
      return false;
  }
}

bool is_apostrophe(char32_t cp) {
  return cp == 0x0027 || cp == 0x2019 || cp == 0x02BC;
}

bool is_dash(char32_t cp) {
  return cp == 0x2012 || cp == 0x2013 || cp == 0x2014 || cp == 0x2015 || cp == 0x2212;
}

bool is_combining_mark(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;  // Latin-1
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;                  // А..Я
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;                  // Ѐ..Џ incl. Є І Ї
  if (cp >= 0x0460 && cp <= 0x04FF) {                                  // paired rows incl. Ґ
    if (cp >= 0x04C1 && cp <= 0x04CE) return (cp % 2 == 1) ? cp + 1 : cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek
  // Latin Extended-A: alternating pairs with three irregular runs.
  if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x0178) return 0x00FF;  // Ÿ
  if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
  return cp;
}

}  // namespace rankfreq
