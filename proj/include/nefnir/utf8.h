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

// UTF-8 helpers. All lengths and indices exposed by the library are counted
// in Unicode scalar values (code points); strings are stored as UTF-8.

#ifndef NEFNIR_UTF8_H_
#define NEFNIR_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nefnir::utf8 {

// True if text is well-formed UTF-8 (no overlongs, surrogates or values
// above U+10FFFF).
bool is_valid(std::string_view text);

// Number of code points. Assumes valid UTF-8.
size_t length(std::string_view text);

// Byte offsets of every code point start, followed by text.size().
// The result has length(text) + 1 elements.
std::vector<size_t> offsets(std::string_view text);

// Byte offset of the code point with the given index (index <= length).
size_t byte_offset(std::string_view text, size_t index);

// The last n code points of text (n <= length(text)).
std::string_view suffix(std::string_view text, size_t n);

// Longest common prefix of a and b, in bytes, never splitting a code point.
size_t common_prefix_bytes(std::string_view a, std::string_view b);

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string &out, char32_t cp);

// Simple (one-to-one) lowercase mapping for Latin, Greek and Cyrillic.
char32_t to_lower(char32_t cp);

// text with its first code point lowercased.
std::string lower_first(std::string_view text);

// Lowercases every code point with to_lower.
std::string lower(std::string_view text);

}  // namespace nefnir::utf8

#endif  // NEFNIR_UTF8_H_
