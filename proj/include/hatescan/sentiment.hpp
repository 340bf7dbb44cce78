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
#ifndef HATESCAN_SENTIMENT_HPP
#define HATESCAN_SENTIMENT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hatescan/corpus.hpp"

namespace hatescan {

// Case-folded surface form (lemmas plus expanded inflections) -> score.
struct SentimentLexicon {
  std::map<std::string, double> entries;
};

// Lexicon text format, one entry per line:
//   Lemma|POS<TAB>score<TAB>inflection,inflection,...
// with the third field optional and scores in [-1, 1]. Duplicate surfaces
// keep the score of larger magnitude.
SentimentLexicon load_lexicon(const std::string& positive_path,
                              const std::string& negative_path);

struct SentimentScore {
  double polarity = 0.0;  // mean score of matched word tokens; 0 if none
  int matched = 0;
};

SentimentScore score_text(const std::vector<Token>& tokens,
                          const SentimentLexicon& lexicon);

struct PolarityBreakdown {
  int64_t documents = 0;
  double negative = 0.0;  // fraction with polarity < -t
  double neutral = 0.0;
  double positive = 0.0;  // fraction with polarity > +t
};

// Per-label document fractions with t = |neg_threshold|.
std::map<Label, PolarityBreakdown> polarity_distribution(
    const Corpus& corpus, const SentimentLexicon& lexicon, double neg_threshold);

// Named keyword groups (case-folded single-token keywords).
struct ReferenceGroups {
  std::map<std::string, std::set<std::string>> groups;
};

ReferenceGroups load_reference_groups(const std::string& path);

struct ReferenceCount {
  int64_t mentions = 0;           // documents containing >= 1 group keyword
  int64_t negative_mentions = 0;  // of those, documents with polarity < 0
};

std::map<std::string, ReferenceCount> count_references(
    const Corpus& corpus, const ReferenceGroups& groups,
    const SentimentLexicon& lexicon);

}  // namespace hatescan

#endif
