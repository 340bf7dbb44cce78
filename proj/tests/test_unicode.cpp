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
#include "doctest.h"

#include "hatescan/unicode.hpp"

using namespace hatescan;

TEST_CASE("utf8 round trip") {
  for (const char* s : {"", "abc", "Flüchtling", "ÄÖÜß", "👊🤬", "⚡⚡", "a👊b"}) {
    auto cps = uni::decode_utf8(s);
    CHECK(uni::encode_utf8(cps) == s);
  }
  CHECK(uni::length("Flüchtling") == 10);
  CHECK(uni::length("👊") == 1);
}

TEST_CASE("invalid utf8 becomes replacement characters") {
  std::string bad = "a\xFFz";
  auto cps = uni::decode_utf8(bad);
  REQUIRE(cps.size() == 3);
  CHECK(cps[1] == 0xFFFD);
  // truncated two-byte sequence at end
  std::string trunc = "a\xC3";
  CHECK(uni::decode_utf8(trunc).back() == 0xFFFD);
}

TEST_CASE("case folding") {
  CHECK(uni::fold_case("HALLO") == "hallo");
  CHECK(uni::fold_case("Flüchtling") == "flüchtling");
  CHECK(uni::fold_case("ÄÖÜ") == "äöü");
  CHECK(uni::fold_case("GRÜSSE") == "grüsse");
  CHECK(uni::fold_case("ẞ") == "ß");   // capital sharp s
  CHECK(uni::fold_case("Š") == "š");
  CHECK(uni::fold_case("Ÿ") == "ÿ");
  CHECK(uni::fold_case("schon klein") == "schon klein");
  CHECK(uni::fold_case("volk") == uni::fold_case("Volk"));
}

TEST_CASE("folding is idempotent") {
  for (char32_t cp = 0x20; cp < 0x600; ++cp)
    CHECK(uni::fold_cp(uni::fold_cp(cp)) == uni::fold_cp(cp));
  for (char32_t cp = 0x1E00; cp < 0x1F00; ++cp)
    CHECK(uni::fold_cp(uni::fold_cp(cp)) == uni::fold_cp(cp));
}

TEST_CASE("codepoint classes") {
  CHECK(uni::is_emoji(0x1F44A));  // 👊
  CHECK(uni::is_emoji(0x26A1));   // ⚡
  CHECK(!uni::is_emoji(U'a'));
  CHECK(uni::is_punct(U'.'));
  CHECK(uni::is_punct(U'„'));
  CHECK(uni::is_punct(U'«'));
  CHECK(!uni::is_punct(U'ü'));
  CHECK(uni::is_space(U' '));
  CHECK(uni::is_space(0xA0));
  CHECK(uni::is_word_char(U'ü'));
  CHECK(uni::is_word_char(U'_'));
  CHECK(!uni::is_word_char(U'@'));
}
