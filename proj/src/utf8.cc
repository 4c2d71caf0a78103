// Copyright 2026 The Nefnir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nefnir/utf8.h"

#include <algorithm>

namespace nefnir::utf8 {
namespace {

inline bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Decodes the code point starting at text[pos] and advances pos. Assumes
// valid input.
char32_t next(std::string_view text, size_t &pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 0x80) {
    ++pos;
    return c;
  }
  int extra = c >= 0xF0 ? 3 : c >= 0xE0 ? 2 : 1;
  char32_t cp = c & (0x3F >> extra);
  ++pos;
  for (; extra > 0; --extra, ++pos) {
    cp = (cp << 6) | (static_cast<unsigned char>(text[pos]) & 0x3F);
  }
  return cp;
}

}  // namespace

bool is_valid(std::string_view text) {
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int extra;
    char32_t min;
    if (c >= 0xC2 && c <= 0xDF) {
      extra = 1;
      min = 0x80;
    } else if (c >= 0xE0 && c <= 0xEF) {
      extra = 2;
      min = 0x800;
    } else if (c >= 0xF0 && c <= 0xF4) {
      extra = 3;
      min = 0x10000;
    } else {
      return false;
    }
    if (i + extra >= n) return false;
    char32_t cp = c & (0x3F >> extra);
    for (int k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if (!is_continuation(cc)) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

size_t length(std::string_view text) {
  size_t count = 0;
  for (char c : text) {
    if (!is_continuation(static_cast<unsigned char>(c))) ++count;
  }
  return count;
}

std::vector<size_t> offsets(std::string_view text) {
  std::vector<size_t> result;
  result.reserve(text.size() + 1);
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(text[i]))) {
      result.push_back(i);
    }
  }
  result.push_back(text.size());
  return result;
}

size_t byte_offset(std::string_view text, size_t index) {
  size_t seen = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(text[i]))) {
      if (seen == index) return i;
      ++seen;
    }
  }
  return text.size();
}

std::string_view suffix(std::string_view text, size_t n) {
  size_t pos = text.size();
  while (n > 0 && pos > 0) {
    --pos;
    if (!is_continuation(static_cast<unsigned char>(text[pos]))) --n;
  }
  return text.substr(pos);
}

size_t common_prefix_bytes(std::string_view a, std::string_view b) {
  size_t i = 0;
  const size_t n = std::min(a.size(), b.size());
  while (i < n && a[i] == b[i]) ++i;
  // Back off to the start of a partially shared code point.
  if (i < a.size() || i < b.size()) {
    while (
        i > 0 &&
        ((i < a.size() && is_continuation(static_cast<unsigned char>(a[i]))) ||
         (i < b.size() && is_continuation(static_cast<unsigned char>(b[i]))))) {
      --i;
    }
  }
  return i;
}

std::u32string decode(std::string_view text) {
  std::u32string result;
  result.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) result.push_back(next(text, pos));
  return result;
}

void append(std::string &out, char32_t cp) {
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

std::string encode(std::u32string_view text) {
  std::string result;
  result.reserve(text.size());
  for (char32_t cp : text) append(result, cp);
  return result;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp < 0xC0) return cp;
  // Latin-1 supplement: À..Þ except ×.
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 32;
  // Latin Extended-A: mostly even upper / odd lower pairs.
  if (cp >= 0x100 && cp <= 0x137) return cp | 1;
  if (cp >= 0x139 && cp <= 0x148) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return cp | 1;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp & 1) ? cp + 1 : cp;
  // Greek.
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 63;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;
  // Cyrillic.
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  return cp;
}

std::string lower_first(std::string_view text) {
  if (text.empty()) return std::string();
  size_t pos = 0;
  const char32_t first = next(text, pos);
  std::string result;
  result.reserve(text.size());
  append(result, to_lower(first));
  result.append(text.substr(pos));
  return result;
}

std::string lower(std::string_view text) {
  std::string result;
  result.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) append(result, to_lower(next(text, pos)));
  return result;
}

}  // namespace nefnir::utf8
