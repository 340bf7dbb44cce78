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
#include "hatescan/cues.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "json.hpp"

#include "hatescan/error.hpp"
#include "hatescan/unicode.hpp"

namespace hatescan {

const char* to_string(CueCategory category) {
  switch (category) {
    case CueCategory::cipher:
      return "cipher";
    case CueCategory::prefix:
      return "prefix";
    case CueCategory::emoji_cipher:
      return "emoji_cipher";
    default:
      return "keyword";
  }
}

CueLexicon default_cue_lexicon() {
  CueLexicon lex;
  lex.cipher_suffixes = {{"88", "HH"}, {"18", "AH"}, {"59", "EI"}};
  lex.prefixes = {{"IB", "Identitäre Bewegung"}};
  lex.emoji_ciphers = {{"⚡⚡", "SS"}};
  lex.keyword_categories = {
      {"occult", {"thule", "gral"}},
      {"mythology", {"thor", "freya", "hrimthursen"}},
      {"slur", {}},  // intentionally empty; supply your own list
      {"grandiose",
       {"hüter deutschlands", "verteidiger des abendlandes", "guardian of germany",
        "defender of the west"}},
      {"movement", {"white power", "reconquista", "identitäre bewegung"}},
  };
  return lex;
}

namespace {

void check_lexicon(const CueLexicon& lex, const std::string& context) {
  auto non_empty = [&](const std::string& pattern, const char* what) {
    if (pattern.empty())
      throw input_error(std::string("empty ") + what + " pattern in cue lexicon" + context);
  };
  for (const auto& [pattern, _] : lex.cipher_suffixes) non_empty(pattern, "cipher");
  for (const auto& [pattern, _] : lex.prefixes) non_empty(pattern, "prefix");
  for (const auto& [pattern, _] : lex.emoji_ciphers) non_empty(pattern, "emoji");
  for (const auto& [category, keywords] : lex.keyword_categories) {
    if (category.empty()) throw input_error("unnamed keyword category in cue lexicon" + context);
    for (const auto& keyword : keywords) non_empty(keyword, "keyword");
  }
}

}  // namespace

CueLexicon load_cue_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open cue lexicon: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw input_error("cue lexicon is not a JSON object: " + path);

  CueLexicon lex;
  try {
    if (doc.contains("ciphers"))
      for (const auto& [pattern, expansion] : doc["ciphers"].items())
        lex.cipher_suffixes[pattern] = expansion.get<std::string>();
    if (doc.contains("prefixes"))
      for (const auto& entry : doc["prefixes"]) {
        if (entry.is_string()) {
          std::string p = entry.get<std::string>();
          lex.prefixes[p] = p;
        } else {
          lex.prefixes[entry.at("prefix").get<std::string>()] =
              entry.at("expansion").get<std::string>();
        }
      }
    if (doc.contains("emoji"))
      for (const auto& [pattern, expansion] : doc["emoji"].items())
        lex.emoji_ciphers[pattern] = expansion.get<std::string>();
    if (doc.contains("keywords"))
      for (const auto& [category, keywords] : doc["keywords"].items()) {
        auto& set = lex.keyword_categories[category];
        for (const auto& kw : keywords) set.insert(uni::fold_case(kw.get<std::string>()));
      }
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed cue lexicon: " + std::string(e.what()) + ": " + path);
  }
  check_lexicon(lex, " file " + path);
  return lex;
}

void save_cue_lexicon(const CueLexicon& lexicon, const std::string& path) {
  nlohmann::json doc;
  doc["ciphers"] = lexicon.cipher_suffixes;
  doc["prefixes"] = nlohmann::json::array();
  for (const auto& [prefix, expansion] : lexicon.prefixes)
    doc["prefixes"].push_back({{"prefix", prefix}, {"expansion", expansion}});
  doc["emoji"] = lexicon.emoji_ciphers;
  doc["keywords"] = lexicon.keyword_categories;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write cue lexicon: " + path);
  out << doc.dump(2) << '\n';
}

namespace {

struct PositionedHit {
  std::size_t position;
  CueHit hit;
};

void sort_hits(std::vector<PositionedHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const PositionedHit& a, const PositionedHit& b) {
    return std::tie(a.position, a.hit.category, a.hit.matched) <
           std::tie(b.position, b.hit.category, b.hit.matched);
  });
}

std::vector<CueHit> strip_positions(std::vector<PositionedHit> hits) {
  std::vector<CueHit> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(std::move(h.hit));
  return out;
}

// Case-folded keyword search over all occurrences; the reported match is
// the original-case substring, deduplicated by (category, matched).
void scan_keywords(const std::string& input, const CueLexicon& lexicon,
                   std::vector<PositionedHit>& hits) {
  auto cps = uni::decode_utf8(input);
  std::vector<char32_t> folded(cps);
  for (auto& cp : folded) cp = uni::fold_cp(cp);

  std::set<std::pair<CueCategory, std::string>> seen;
  for (const auto& [category, keywords] : lexicon.keyword_categories) {
    (void)category;
    for (const auto& keyword : keywords) {
      auto kw = uni::decode_utf8(uni::fold_case(keyword));
      if (kw.empty() || kw.size() > folded.size()) continue;
      auto from = folded.begin();
      while (true) {
        auto it = std::search(from, folded.end(), kw.begin(), kw.end());
        if (it == folded.end()) break;
        std::size_t pos = static_cast<std::size_t>(it - folded.begin());
        std::string matched = uni::encode_utf8(cps.data() + pos, kw.size());
        if (seen.emplace(CueCategory::keyword, matched).second)
          hits.push_back({pos, {CueCategory::keyword, matched, keyword}});
        from = it + 1;
      }
    }
  }
}

}  // namespace

std::vector<CueHit> scan_handle(const std::string& username, const CueLexicon& lexicon) {
  std::vector<PositionedHit> hits;
  for (const auto& [pattern, expansion] : lexicon.cipher_suffixes) {
    if (username.size() >= pattern.size() && username.ends_with(pattern))
      hits.push_back({uni::length(username) - uni::length(pattern),
                      {CueCategory::cipher, pattern, expansion}});
  }
  for (const auto& [prefix, expansion] : lexicon.prefixes) {
    if (username.starts_with(prefix))
      hits.push_back({0, {CueCategory::prefix, prefix, expansion}});
  }
  scan_keywords(username, lexicon, hits);
  sort_hits(hits);
  return strip_positions(hits);
}

std::vector<CueHit> scan_profile(const std::string& description,
                                 const CueLexicon& lexicon) {
  std::vector<PositionedHit> hits;
  for (const auto& [pattern, expansion] : lexicon.emoji_ciphers) {
    std::size_t byte_pos = description.find(pattern);
    if (byte_pos == std::string::npos) continue;
    std::size_t pos = uni::length(std::string_view(description).substr(0, byte_pos));
    hits.push_back({pos, {CueCategory::emoji_cipher, pattern, expansion}});
  }
  scan_keywords(description, lexicon, hits);
  sort_hits(hits);
  return strip_positions(hits);
}

}  // namespace hatescan
