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
#include "hatescan/sentiment.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"

#include "hatescan/error.hpp"
#include "hatescan/unicode.hpp"

namespace hatescan {

namespace {

void insert_surface(SentimentLexicon& lexicon, const std::string& surface, double score) {
  std::string folded = uni::fold_case(surface);
  auto [it, inserted] = lexicon.entries.emplace(folded, score);
  if (!inserted && std::abs(score) > std::abs(it->second)) it->second = score;
}

void load_lexicon_file(SentimentLexicon& lexicon, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open sentiment lexicon: " + path);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    auto fail = [&](const std::string& why) {
      return input_error("malformed lexicon line " + std::to_string(line_no) + " in " +
                         path + ": " + why);
    };

    std::size_t tab1 = line.find('\t');
    if (tab1 == std::string::npos) throw fail("missing score field");
    std::size_t tab2 = line.find('\t', tab1 + 1);
    std::string head = line.substr(0, tab1);
    std::string score_str = tab2 == std::string::npos
                                ? line.substr(tab1 + 1)
                                : line.substr(tab1 + 1, tab2 - tab1 - 1);

    std::size_t pipe = head.find('|');
    if (pipe == std::string::npos || pipe == 0) throw fail("expected Lemma|POS");
    std::string lemma = head.substr(0, pipe);

    double score = 0.0;
    auto [end, ec] =
        std::from_chars(score_str.data(), score_str.data() + score_str.size(), score);
    if (ec != std::errc{} || end != score_str.data() + score_str.size())
      throw fail("unparseable score '" + score_str + "'");
    if (score < -1.0 || score > 1.0)
      throw fail("score " + score_str + " outside [-1, 1]");

    insert_surface(lexicon, lemma, score);
    if (tab2 != std::string::npos) {
      std::string rest = line.substr(tab2 + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        std::string form = comma == std::string::npos ? rest.substr(start)
                                                      : rest.substr(start, comma - start);
        if (!form.empty()) insert_surface(lexicon, form, score);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
}

}  // namespace

SentimentLexicon load_lexicon(const std::string& positive_path,
                              const std::string& negative_path) {
  SentimentLexicon lexicon;
  load_lexicon_file(lexicon, positive_path);
  load_lexicon_file(lexicon, negative_path);
  return lexicon;
}

SentimentScore score_text(const std::vector<Token>& tokens,
                          const SentimentLexicon& lexicon) {
  double sum = 0.0;
  int matched = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::word) continue;
    auto it = lexicon.entries.find(uni::fold_case(t.surface));
    if (it == lexicon.entries.end()) continue;
    sum += it->second;
    ++matched;
  }
  if (matched == 0) return {0.0, 0};
  return {sum / matched, matched};
}

std::map<Label, PolarityBreakdown> polarity_distribution(
    const Corpus& corpus, const SentimentLexicon& lexicon, double neg_threshold) {
  const double t = std::abs(neg_threshold);
  std::map<Label, PolarityBreakdown> result;
  std::map<Label, std::array<int64_t, 3>> counts;  // neg, neutral, pos
  for (const Document& doc : corpus) {
    double polarity = score_text(tokenize(doc.text), lexicon).polarity;
    auto& c = counts[doc.label];
    if (polarity < -t)
      ++c[0];
    else if (polarity > t)
      ++c[2];
    else
      ++c[1];
  }
  for (const auto& [label, c] : counts) {
    PolarityBreakdown breakdown;
    breakdown.documents = c[0] + c[1] + c[2];
    breakdown.negative = static_cast<double>(c[0]) / breakdown.documents;
    breakdown.neutral = static_cast<double>(c[1]) / breakdown.documents;
    breakdown.positive = static_cast<double>(c[2]) / breakdown.documents;
    result[label] = breakdown;
  }
  return result;
}

ReferenceGroups load_reference_groups(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open reference groups file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw input_error("reference groups file is not a JSON object: " + path);

  ReferenceGroups groups;
  for (const auto& [name, keywords] : doc.items()) {
    if (!keywords.is_array())
      throw input_error("group '" + name + "' must be an array of keywords: " + path);
    auto& set = groups.groups[name];
    for (const auto& kw : keywords) {
      if (!kw.is_string())
        throw input_error("group '" + name + "' contains a non-string keyword: " + path);
      set.insert(uni::fold_case(kw.get<std::string>()));
    }
    if (set.empty())
      throw input_error("group '" + name + "' has no keywords: " + path);
  }
  if (groups.groups.empty()) throw input_error("no reference groups defined: " + path);
  return groups;
}

std::map<std::string, ReferenceCount> count_references(
    const Corpus& corpus, const ReferenceGroups& groups,
    const SentimentLexicon& lexicon) {
  if (groups.groups.empty()) throw compute_error("reference groups must be non-empty");

  std::map<std::string, ReferenceCount> result;
  for (const auto& [name, _] : groups.groups) result[name] = {};

  for (const Document& doc : corpus) {
    auto tokens = tokenize(doc.text);
    std::set<std::string> words;
    for (const Token& t : tokens)
      if (t.kind == TokenKind::word) words.insert(uni::fold_case(t.surface));

    bool negative = score_text(tokens, lexicon).polarity < 0.0;
    for (const auto& [name, keywords] : groups.groups) {
      bool mentioned = false;
      for (const auto& kw : keywords)
        if (words.contains(kw)) {
          mentioned = true;
          break;
        }
      if (mentioned) {
        auto& count = result[name];
        ++count.mentions;
        if (negative) ++count.negative_mentions;
      }
    }
  }
  return result;
}

}  // namespace hatescan
