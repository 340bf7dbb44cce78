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
#ifndef HATESCAN_CUES_HPP
#define HATESCAN_CUES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hatescan {

// Patterns screened for in usernames and profile descriptions. Hits are
// advisory metadata; they never feed the classifier.
struct CueLexicon {
  std::map<std::string, std::string> cipher_suffixes;  // e.g. "88" -> "HH"
  std::map<std::string, std::string> prefixes;         // e.g. "IB" -> expansion
  std::map<std::string, std::string> emoji_ciphers;    // e.g. "⚡⚡" -> "SS"
  std::map<std::string, std::set<std::string>> keyword_categories;
};

// Built-in starter lexicon; fully replaceable via a JSON file.
CueLexicon default_cue_lexicon();

// JSON shape: {"ciphers": {...}, "prefixes": [...], "emoji": {...},
// "keywords": {"category": [...]}}. Prefix entries may be plain strings or
// {"prefix": ..., "expansion": ...} objects.
CueLexicon load_cue_lexicon(const std::string& path);
void save_cue_lexicon(const CueLexicon& lexicon, const std::string& path);

enum class CueCategory { cipher, prefix, emoji_cipher, keyword };

const char* to_string(CueCategory category);

struct CueHit {
  CueCategory category = CueCategory::keyword;
  std::string matched;  // substring of the scanned input
  std::string expansion_or_keyword;
};

// Cipher hits only when the digit pattern ends the username, prefix hits
// only at position 0, keyword hits by case-folded substring match. Results
// ordered by match position, then category.
std::vector<CueHit> scan_handle(const std::string& username, const CueLexicon& lexicon);

// Keyword and emoji-cipher matches anywhere in the text, deduplicated by
// (category, matched).
std::vector<CueHit> scan_profile(const std::string& description,
                                 const CueLexicon& lexicon);

}  // namespace hatescan

#endif
