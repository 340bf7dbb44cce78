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
#ifndef HATESCAN_FEATURES_HPP
#define HATESCAN_FEATURES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hatescan/corpus.hpp"

namespace hatescan {

enum class Weighting { count, binary };

const char* to_string(Weighting w);

// Feature families: character trigrams/bigrams over word-like tokens,
// character unigrams over punctuation and emoji, word unigrams/bigrams.
struct FeatureConfig {
  bool use_ch3 = true;
  bool use_ch2 = true;
  bool use_ch1 = true;
  bool use_w1 = true;
  bool use_w2 = true;
  bool include_mentions = false;
  Weighting weighting = Weighting::count;

  void validate() const;  // throws unless at least one family is enabled

  bool operator==(const FeatureConfig&) const = default;
};

// Sparse vector keyed by namespaced feature strings ("ch3:...", "w1:...").
// Zero-weight entries are never stored. Ordered map so that dot products
// and serialization are reproducible.
using FeatureVector = std::map<std::string, double>;

// All length-n codepoint windows of the surface, in order, no padding.
std::vector<std::string> char_ngrams(std::string_view surface, int n);

// Case-folded grams over the text-bearing tokens (word, hashtag, emoji and,
// when present, mention); punct/url/number tokens are skipped and bigrams
// join adjacent survivors. n must be 1 or 2.
std::vector<std::string> word_ngrams(const std::vector<Token>& tokens, int n);

FeatureVector vectorize_tokens(const std::vector<Token>& tokens,
                               const FeatureConfig& config);
FeatureVector vectorize(const Document& doc, const FeatureConfig& config);

}  // namespace hatescan

#endif
