#pragma once

// UTF-8 decoding and pragmatic accent folding. Covers Latin-1 Supplement and
// Latin Extended-A, which is where virtually all accented characters in the
// source corpora live. Anything non-ASCII without a mapping becomes a space;
// downstream cleaning treats non-letters as separators anyway.

#include <cstdint>
#include <string>
#include <string_view>

namespace sentinel {

// Decodes one UTF-8 codepoint starting at i; advances i past it. Malformed
// bytes decode as U+FFFD and advance by one byte.
inline uint32_t decode_utf8(std::string_view s, size_t& i) {
  auto byte = [&](size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) { ++i; return b0; }
  auto cont = [&](size_t k) { return k < s.size() && (byte(k) & 0xC0) == 0x80; };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    uint32_t cp = (uint32_t(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    uint32_t cp = (uint32_t(b0 & 0x0F) << 12) | (uint32_t(byte(i + 1) & 0x3F) << 6) |
                  (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    uint32_t cp = (uint32_t(b0 & 0x07) << 18) | (uint32_t(byte(i + 1) & 0x3F) << 12) |
                  (uint32_t(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  ++i;
  return 0xFFFD;
}

// ASCII replacement for one codepoint, or empty when there is no letter
// mapping. ASCII passes through unchanged.
inline std::string fold_codepoint(uint32_t cp) {
  if (cp < 0x80) return std::string(1, static_cast<char>(cp));

  // Latin-1 Supplement letters, folded straight to lowercase ASCII.
  // Index 0 = U+00C0. '.' marks non-letters and multi-char specials.
  static constexpr char latin1[0x40 + 1] =
      "aaaaaa.ceeeeiiiidnooooo.ouuuuy.."
      "aaaaaa.ceeeeiiiidnooooo.ouuuuy.y";
  // Latin Extended-A. Index 0 = U+0100.
  static constexpr char latin_ext_a[0x80 + 1] =
      "aaaaaaccccccccddddeeeeeeeeeegggg"
      "gggghhhhiiiiiiiiii..jjkkkllllll"
      "llllnnnnnnnnnoooooo..rrrrrrssss"
      "ssssttttttuuuuuuuuuuuuwwyyyzzzzzzs";

  switch (cp) {
    case 0xC6: case 0xE6: return "ae";   // Æ æ
    case 0xDE: case 0xFE: return "th";   // Þ þ
    case 0xDF: return "ss";              // ß
    case 0x132: case 0x133: return "ij"; // Ĳ ĳ
    case 0x152: case 0x153: return "oe"; // Œ œ
    default: break;
  }
  if (cp >= 0xC0 && cp <= 0xFF) {
    char c = latin1[cp - 0xC0];
    if (c != '.') return std::string(1, c);
    return {};
  }
  if (cp >= 0x100 && cp <= 0x17F) {
    char c = latin_ext_a[cp - 0x100];
    if (c != '.') return std::string(1, c);
    return {};
  }
  return {};
}

// Folds a UTF-8 string to pure ASCII. Unmappable codepoints become spaces.
inline std::string fold_to_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    uint32_t cp = decode_utf8(s, i);
    std::string folded = fold_codepoint(cp);
    if (folded.empty() && cp >= 0x80) folded = " ";
    out += folded;
  }
  return out;
}

}  // namespace sentinel
