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
#ifndef HATESCAN_UNICODE_HPP
#define HATESCAN_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hatescan::uni {

// Decodes UTF-8 into codepoints. Malformed bytes become U+FFFD and the
// decoder resynchronizes at the next lead byte.
std::vector<char32_t> decode_utf8(std::string_view s);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(const char32_t* cps, std::size_t n);
std::string encode_utf8(const std::vector<char32_t>& cps);

std::size_t length(std::string_view s);  // codepoint count

bool is_space(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_punct(char32_t cp);
bool is_emoji(char32_t cp);
// Variation selectors, zero-width joiner: dropped during tokenization.
bool is_ignorable(char32_t cp);
// Letters, digits, underscore; what mention/hashtag bodies are made of.
bool is_word_char(char32_t cp);

// One-to-one simple case fold covering ASCII, Latin-1, Latin Extended-A,
// Latin Extended Additional, Greek and Cyrillic. Enough for European text;
// codepoints outside these ranges fold to themselves.
char32_t fold_cp(char32_t cp);
bool is_upper(char32_t cp);
std::string fold_case(std::string_view s);

}  // namespace hatescan::uni

#endif
