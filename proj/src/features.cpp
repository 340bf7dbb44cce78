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
#include "hatescan/features.hpp"

#include "hatescan/error.hpp"
#include "hatescan/unicode.hpp"

namespace hatescan {

namespace {

// Joiner between the two members of a word bigram.
constexpr const char* kBigramJoiner = "▸";

bool gram_bearing(const Token& t) {
  switch (t.kind) {
    case TokenKind::word:
    case TokenKind::hashtag:
    case TokenKind::emoji:
    case TokenKind::mention:
      return true;
    default:
      return false;
  }
}

bool char_gram_bearing(const Token& t) {
  switch (t.kind) {
    case TokenKind::word:
    case TokenKind::hashtag:
    case TokenKind::mention:
      return true;
    default:
      return false;
  }
}

void add(FeatureVector& vec, const std::string& key, Weighting weighting) {
  if (weighting == Weighting::binary)
    vec[key] = 1.0;
  else
    vec[key] += 1.0;
}

}  // namespace

const char* to_string(Weighting w) {
  return w == Weighting::count ? "count" : "binary";
}

void FeatureConfig::validate() const {
  if (!use_ch3 && !use_ch2 && !use_ch1 && !use_w1 && !use_w2)
    throw config_error("feature config enables no feature family");
}

std::vector<std::string> char_ngrams(std::string_view surface, int n) {
  if (n < 1) throw compute_error("char n-gram size must be positive, got " + std::to_string(n));
  auto cps = uni::decode_utf8(surface);
  std::vector<std::string> grams;
  if (cps.size() < static_cast<std::size_t>(n)) return grams;
  grams.reserve(cps.size() - n + 1);
  for (std::size_t i = 0; i + n <= cps.size(); ++i)
    grams.push_back(uni::encode_utf8(cps.data() + i, n));
  return grams;
}

std::vector<std::string> word_ngrams(const std::vector<Token>& tokens, int n) {
  if (n != 1 && n != 2)
    throw compute_error("word n-gram size must be 1 or 2, got " + std::to_string(n));
  std::vector<std::string> surfaces;
  for (const Token& t : tokens)
    if (gram_bearing(t)) surfaces.push_back(uni::fold_case(t.surface));

  std::vector<std::string> grams;
  if (n == 1) {
    grams = std::move(surfaces);
  } else {
    for (std::size_t i = 0; i + 1 < surfaces.size(); ++i)
      grams.push_back(surfaces[i] + kBigramJoiner + surfaces[i + 1]);
  }
  return grams;
}

FeatureVector vectorize_tokens(const std::vector<Token>& tokens,
                               const FeatureConfig& config) {
  config.validate();
  const std::vector<Token>* used = &tokens;
  std::vector<Token> stripped;
  if (!config.include_mentions) {
    stripped = strip_mentions(tokens);
    used = &stripped;
  }

  FeatureVector vec;
  if (config.use_ch3 || config.use_ch2) {
    for (const Token& t : *used) {
      if (!char_gram_bearing(t)) continue;
      std::string folded = uni::fold_case(t.surface);
      if (config.use_ch3)
        for (const auto& g : char_ngrams(folded, 3)) add(vec, "ch3:" + g, config.weighting);
      if (config.use_ch2)
        for (const auto& g : char_ngrams(folded, 2)) add(vec, "ch2:" + g, config.weighting);
    }
  }
  if (config.use_ch1) {
    for (const Token& t : *used)
      if (t.kind == TokenKind::punct || t.kind == TokenKind::emoji)
        add(vec, "ch1:" + t.surface, config.weighting);
  }
  if (config.use_w1)
    for (const auto& g : word_ngrams(*used, 1)) add(vec, "w1:" + g, config.weighting);
  if (config.use_w2)
    for (const auto& g : word_ngrams(*used, 2)) add(vec, "w2:" + g, config.weighting);
  return vec;
}

FeatureVector vectorize(const Document& doc, const FeatureConfig& config) {
  return vectorize_tokens(tokenize(doc.text), config);
}

}  // namespace hatescan
