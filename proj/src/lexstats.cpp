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
#include "hatescan/lexstats.hpp"

#include <algorithm>
#include <cmath>

#include "hatescan/error.hpp"
#include "hatescan/unicode.hpp"

namespace hatescan {

const char* to_string(TargetCategory category) {
  switch (category) {
    case TargetCategory::race:
      return "race";
    case TargetCategory::gender:
      return "gender";
    case TargetCategory::religion:
      return "religion";
    default:
      return "ideology";
  }
}

namespace {

bool content_token(const Token& t) {
  return t.kind == TokenKind::word || t.kind == TokenKind::hashtag ||
         t.kind == TokenKind::emoji;
}

std::vector<std::string> folded_content_tokens(const Document& doc) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(doc.text))
    if (content_token(t)) out.push_back(uni::fold_case(t.surface));
  return out;
}

}  // namespace

std::map<std::string, int64_t> word_counts(const Corpus& corpus, Label label) {
  std::map<std::string, int64_t> counts;
  for (const Document& doc : corpus) {
    if (doc.label != label) continue;
    for (const auto& word : folded_content_tokens(doc)) ++counts[word];
  }
  return counts;
}

double chi_square(int64_t hate_count, int64_t safe_count, int64_t hate_total,
                  int64_t safe_total) {
  if (hate_count < 0 || safe_count < 0)
    throw compute_error("chi-square counts must be non-negative");
  if (hate_count > hate_total || safe_count > safe_total)
    throw compute_error("chi-square counts exceed their totals");
  const double a = static_cast<double>(hate_count);
  const double b = static_cast<double>(safe_count);
  const double c = static_cast<double>(hate_total - hate_count);
  const double d = static_cast<double>(safe_total - safe_count);
  const double row1 = a + b, row2 = c + d;
  const double col1 = a + c, col2 = b + d;
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0)
    throw compute_error("chi-square is undefined for a table with a zero marginal");
  const double n = row1 + row2;
  const double det = a * d - b * c;
  return n * det * det / (row1 * row2 * col1 * col2);
}

double chi_square_critical(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw compute_error("alpha must lie in (0, 1)");
  if (std::abs(alpha - 0.05) < 1e-12) return 3.841459;
  // Survival function at df=1 is erfc(sqrt(x/2)), strictly decreasing in x.
  double lo = 0.0, hi = 400.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (std::erfc(std::sqrt(mid / 2.0)) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<BiasEntry> biased_words(const Corpus& corpus, double alpha,
                                    int64_t min_count) {
  auto hate_counts = word_counts(corpus, Label::hate);
  auto safe_counts = word_counts(corpus, Label::safe);
  int64_t hate_total = 0, safe_total = 0;
  for (const auto& [_, c] : hate_counts) hate_total += c;
  for (const auto& [_, c] : safe_counts) safe_total += c;
  if (hate_total == 0 || safe_total == 0)
    throw compute_error("bias mining needs documents of both labels");

  const double critical = chi_square_critical(alpha);
  std::vector<BiasEntry> entries;
  auto hate_it = hate_counts.begin();
  auto safe_it = safe_counts.begin();
  // merged walk over both sorted maps
  while (hate_it != hate_counts.end() || safe_it != safe_counts.end()) {
    std::string word;
    int64_t hc = 0, sc = 0;
    if (safe_it == safe_counts.end() ||
        (hate_it != hate_counts.end() && hate_it->first < safe_it->first)) {
      word = hate_it->first;
      hc = hate_it->second;
      ++hate_it;
    } else if (hate_it == hate_counts.end() || safe_it->first < hate_it->first) {
      word = safe_it->first;
      sc = safe_it->second;
      ++safe_it;
    } else {
      word = hate_it->first;
      hc = hate_it->second;
      sc = safe_it->second;
      ++hate_it;
      ++safe_it;
    }
    if (hc + sc < min_count) continue;

    BiasEntry entry;
    entry.word = std::move(word);
    entry.hate_count = hc;
    entry.safe_count = sc;
    // A word that exhausts both corpora leaves an empty second row; its rate
    // is then identical in both classes.
    if ((hate_total - hc) + (safe_total - sc) == 0)
      entry.chi2 = 0.0;
    else
      entry.chi2 = chi_square(hc, sc, hate_total, safe_total);
    entry.p_significant = entry.chi2 > critical;
    entry.hate_likelihood =
        (static_cast<double>(hc) + 0.5) / (static_cast<double>(hc + sc) + 1.0);
    entries.push_back(std::move(entry));
  }

  std::sort(entries.begin(), entries.end(), [](const BiasEntry& x, const BiasEntry& y) {
    if (x.hate_likelihood != y.hate_likelihood)
      return x.hate_likelihood > y.hate_likelihood;
    const int64_t xt = x.hate_count + x.safe_count;
    const int64_t yt = y.hate_count + y.safe_count;
    if (xt != yt) return xt > yt;
    return x.word < y.word;
  });
  return entries;
}

namespace {

bool has_adjective_suffix(const std::vector<char32_t>& cps) {
  const std::size_t n = cps.size();
  if (n >= 2 && cps[n - 1] == 'e') return true;
  if (n < 3) return false;
  char32_t a = cps[n - 2], b = cps[n - 1];
  return a == 'e' && (b == 'n' || b == 'r' || b == 's' || b == 'm');
}

bool all_lowercase(const std::vector<char32_t>& cps) {
  for (char32_t cp : cps)
    if (uni::is_upper(cp)) return false;
  return true;
}

bool sentence_final(const Token& t) {
  return t.kind == TokenKind::punct &&
         (t.surface == "." || t.surface == "!" || t.surface == "?" ||
          t.surface == "…");
}

}  // namespace

std::vector<PairEntry> mine_pairs(const Corpus& corpus,
                                  const std::vector<BiasEntry>& bias,
                                  const PairMiningOptions& options) {
  std::set<std::string> hate_biased;
  for (const BiasEntry& entry : bias)
    if (entry.p_significant && entry.hate_likelihood > 0.5)
      hate_biased.insert(entry.word);

  // keyed by (folded adjective, folded noun); noun surface kept for display
  std::map<std::pair<std::string, std::string>, PairEntry> pairs;

  for (const Document& doc : corpus) {
    if (doc.label == Label::unlabeled) continue;

    // word tokens only; adjacency is over this sequence, so punctuation and
    // emoji do not split a pair, but a sentence boundary marks the next word
    // as utterance-initial
    struct WordAt {
      const Token* token;
      bool utterance_start;
    };
    std::vector<WordAt> words;
    auto tokens = tokenize(doc.text);
    bool at_utterance_start = true;
    for (const Token& t : tokens) {
      if (sentence_final(t)) {
        at_utterance_start = true;
        continue;
      }
      if (t.kind != TokenKind::word) continue;
      words.push_back({&t, at_utterance_start});
      at_utterance_start = false;
    }

    for (std::size_t i = 1; i < words.size(); ++i) {
      const bool noun_position_start = words[i].utterance_start;
      const Token& adj = *words[i - 1].token;
      const Token& noun = *words[i].token;

      auto adj_cps = uni::decode_utf8(adj.surface);
      std::string adj_folded = uni::fold_case(adj.surface);
      bool adjective_like =
          options.adjective_lexicon.contains(adj_folded) ||
          (all_lowercase(adj_cps) && has_adjective_suffix(adj_cps));
      if (!adjective_like) continue;

      auto noun_cps = uni::decode_utf8(noun.surface);
      std::string noun_folded = uni::fold_case(noun.surface);
      bool noun_like = options.noun_lexicon.contains(noun_folded) ||
                       (!noun_position_start && !noun_cps.empty() &&
                        uni::is_upper(noun_cps.front()));
      if (!noun_like) continue;

      if (!hate_biased.contains(adj_folded) || !hate_biased.contains(noun_folded))
        continue;

      auto [it, inserted] =
          pairs.try_emplace({adj_folded, noun_folded}, PairEntry{});
      PairEntry& entry = it->second;
      if (inserted) {
        entry.adjective = adj_folded;
        entry.noun = noun.surface;
        for (const auto& [category, keywords] : options.target_keywords)
          for (const auto& keyword : keywords)
            if (adj_folded.find(keyword) != std::string::npos ||
                noun_folded.find(keyword) != std::string::npos)
              entry.targets.insert(category);
      }
      if (doc.label == Label::hate)
        ++entry.hate_count;
      else
        ++entry.safe_count;
    }
  }

  std::vector<PairEntry> out;
  out.reserve(pairs.size());
  for (auto& [_, entry] : pairs) out.push_back(std::move(entry));
  return out;
}

WordTree word_tree(const Corpus& corpus, const std::string& target, int window) {
  if (target.empty()) throw compute_error("word tree target must be non-empty");
  if (window < 1) throw compute_error("word tree window must be positive");

  WordTree tree;
  tree.target = uni::fold_case(target);
  tree.window = window;
  for (const Document& doc : corpus) {
    auto words = folded_content_tokens(doc);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i] != tree.target) continue;
      const std::size_t lo = i >= static_cast<std::size_t>(window) ? i - window : 0;
      for (std::size_t j = lo; j < i; ++j) ++tree.before[words[j]];
      const std::size_t hi = std::min(words.size(), i + 1 + window);
      for (std::size_t j = i + 1; j < hi; ++j) ++tree.after[words[j]];
    }
  }
  return tree;
}

}  // namespace hatescan
