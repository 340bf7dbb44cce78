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
#ifndef HATESCAN_LEXSTATS_HPP
#define HATESCAN_LEXSTATS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hatescan/corpus.hpp"

namespace hatescan {

struct BiasEntry {
  std::string word;  // case-folded
  int64_t hate_count = 0;
  int64_t safe_count = 0;
  double chi2 = 0.0;
  bool p_significant = false;
  double hate_likelihood = 0.0;  // smoothed P(hate | word occurrence)
};

enum class TargetCategory { race, gender, religion, ideology };

const char* to_string(TargetCategory category);

struct PairEntry {
  std::string adjective;  // case-folded
  std::string noun;       // surface form of the first occurrence
  int64_t hate_count = 0;
  int64_t safe_count = 0;
  std::set<TargetCategory> targets;
};

struct WordTree {
  std::string target;
  int window = 0;
  std::map<std::string, int64_t> before;
  std::map<std::string, int64_t> after;
};

// Case-folded counts over the content tokens (word/hashtag/emoji kinds) of
// all documents carrying the given label.
std::map<std::string, int64_t> word_counts(const Corpus& corpus, Label label);

// Pearson chi-square of the 2x2 table
//   [hate_count, safe_count; hate_total-hate_count, safe_total-safe_count]
// without continuity correction. Throws if any marginal is zero.
double chi_square(int64_t hate_count, int64_t safe_count, int64_t hate_total,
                  int64_t safe_total);

// df=1 critical value; the conventional published constant for alpha=0.05,
// solved from the survival function otherwise.
double chi_square_critical(double alpha);

// One entry per word with total count >= min_count, sorted by descending
// hate likelihood, then descending total count, then word.
std::vector<BiasEntry> biased_words(const Corpus& corpus, double alpha,
                                    int64_t min_count);

struct PairMiningOptions {
  // Optional case-folded lexica; either set extends the capitalization /
  // suffix heuristics. Empty means heuristics only.
  std::set<std::string> adjective_lexicon;
  std::set<std::string> noun_lexicon;
  // Pairs are tagged with a category when a keyword is contained in either
  // folded member.
  std::map<TargetCategory, std::set<std::string>> target_keywords;
};

// Adjacent (adjective-like, noun-like) word-token pairs whose members are
// both significantly hate-biased, counted per label; sorted by adjective,
// then noun.
std::vector<PairEntry> mine_pairs(const Corpus& corpus,
                                  const std::vector<BiasEntry>& bias,
                                  const PairMiningOptions& options = {});

// Content-token counts within `window` positions of each case-folded
// occurrence of the target.
WordTree word_tree(const Corpus& corpus, const std::string& target, int window);

}  // namespace hatescan

#endif
