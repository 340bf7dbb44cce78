/**
 * Copyright 2026, the hatescan authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "hatescan/unicode.hpp"

namespace hatescan::uni {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(s.data());
  while (i < s.size()) {
    unsigned char b = bytes[i];
    if (b < 0x80) {
      out.push_back(b);
      ++i;
      continue;
    }
    int extra;
    char32_t cp;
    if ((b & 0xE0) == 0xC0) {
      extra = 1;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      extra = 2;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      extra = 3;
      cp = b & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + extra >= s.size()) {
      // truncated sequence at end of input
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    char32_t acc = cp;
    for (int j = 1; j <= extra; ++j) {
      unsigned char c = bytes[i + j];
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      acc = (acc << 6) | (c & 0x3F);
    }
    if (!ok || acc > 0x10FFFF || (acc >= 0xD800 && acc <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    // reject overlong encodings
    if ((extra == 1 && acc < 0x80) || (extra == 2 && acc < 0x800) ||
        (extra == 3 && acc < 0x10000)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(acc);
    i += extra + 1;
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

std::string encode_utf8(const char32_t* cps, std::size_t n) {
  std::string out;
  out.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) append_utf8(out, cps[i]);
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  return encode_utf8(cps.data(), cps.size());
}

std::size_t length(std::string_view s) { return decode_utf8(s).size(); }

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  if (cp >= 0xA1 && cp <= 0xBF) return cp != 0xAA && cp != 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2010 && cp <= 0x206F) return true;  // general punctuation
  if (cp >= 0x20A0 && cp <= 0x20BF) return true;  // currency signs
  if (cp >= 0x3001 && cp <= 0x303F) return true;  // CJK punctuation
  return false;
}

bool is_emoji(char32_t cp) {
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return true;  // pictographs, emoticons, ...
  if (cp >= 0x2600 && cp <= 0x27BF) return true;    // misc symbols, dingbats
  if (cp >= 0x2B00 && cp <= 0x2BFF) return true;    // stars, geometric shapes
  return false;
}

bool is_ignorable(char32_t cp) {
  return cp == 0x200D || (cp >= 0xFE00 && cp <= 0xFE0F) || cp == 0x20E3;
}

bool is_word_char(char32_t cp) {
  if (cp == '_' || is_ascii_digit(cp)) return true;
  return !is_space(cp) && !is_punct(cp) && !is_emoji(cp) && !is_ignorable(cp) &&
         cp >= 0x30;
}

char32_t fold_cp(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 0x20;  // Latin-1, skip ×
  if (cp >= 0x100 && cp <= 0x177) {
    // Latin Extended-A: alternating upper/lower pairs with lone lowers at
    // 0x130/0x131 (dotted/dotless i), 0x138 (kra) and 0x149.
    if (cp == 0x130 || cp == 0x131 || cp == 0x138) return cp;
    if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
  if (cp == 0x17F) return 0x73;  // long s
  if (cp >= 0x1E00 && cp <= 0x1E95) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x1E9E) return 0xDF;  // capital sharp s
  if (cp >= 0x1EA0 && cp <= 0x1EFF) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9) return cp == 0x3A2 ? cp : cp + 0x20;  // Greek
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;  // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

bool is_upper(char32_t cp) { return fold_cp(cp) != cp; }

std::string fold_case(std::string_view s) {
  auto cps = decode_utf8(s);
  for (auto& cp : cps) cp = fold_cp(cp);
  return encode_utf8(cps);
}

}  // namespace hatescan::uni
