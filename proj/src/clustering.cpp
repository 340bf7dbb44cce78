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
#include "hatescan/clustering.hpp"

#include <algorithm>
#include <cmath>

#include "hatescan/error.hpp"
#include "hatescan/rng.hpp"
#include "hatescan/unicode.hpp"

namespace hatescan {

namespace {

bool content_token(const Token& t) {
  return t.kind == TokenKind::word || t.kind == TokenKind::hashtag ||
         t.kind == TokenKind::emoji;
}

using Sparse = std::map<std::string, double>;

double dot(const Sparse& x, const Sparse& y) {
  const Sparse& small = x.size() <= y.size() ? x : y;
  const Sparse& large = x.size() <= y.size() ? y : x;
  double sum = 0.0;
  for (const auto& [key, value] : small) {
    auto it = large.find(key);
    if (it != large.end()) sum += value * it->second;
  }
  return sum;
}

void normalize(Sparse& v) {
  double norm2 = 0.0;
  for (const auto& [_, value] : v) norm2 += value * value;
  const double norm = std::sqrt(norm2);
  for (auto& [_, value] : v) value /= norm;
}

}  // namespace

ContextVectorResult context_vectors(const Corpus& corpus,
                                    const std::set<std::string>& words, int window) {
  if (words.empty()) throw compute_error("context_vectors needs a non-empty word set");
  if (window < 1) throw compute_error("context window must be positive");

  std::set<std::string> targets;
  for (const auto& w : words) targets.insert(uni::fold_case(w));

  std::map<std::string, Sparse> counts;
  for (const Document& doc : corpus) {
    std::vector<std::string> seq;
    for (const Token& t : tokenize(doc.text))
      if (content_token(t)) seq.push_back(uni::fold_case(t.surface));
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!targets.contains(seq[i])) continue;
      const std::size_t lo = i >= static_cast<std::size_t>(window) ? i - window : 0;
      const std::size_t hi = std::min(seq.size(), i + 1 + window);
      for (std::size_t j = lo; j < hi; ++j) {
        if (j == i || seq[j] == seq[i]) continue;  // the word itself is not context
        counts[seq[i]][seq[j]] += 1.0;
      }
    }
  }

  ContextVectorResult result;
  for (const auto& target : targets) {
    auto it = counts.find(target);
    if (it == counts.end() || it->second.empty()) {
      result.dropped.push_back(target);
      continue;
    }
    ContextVector vec;
    vec.word = target;
    vec.components = it->second;
    normalize(vec.components);
    result.vectors.push_back(std::move(vec));
  }
  return result;
}

namespace {

// Greedy k-means++-style seeding with cosine distance. Candidates are
// visited in word order, so the outcome is independent of input order.
std::vector<Sparse> seed_centroids(const std::vector<const ContextVector*>& sorted,
                                   int k, rng::Engine& eng) {
  const std::size_t n = sorted.size();
  std::vector<Sparse> centroids;
  std::vector<bool> chosen(n, false);
  std::vector<double> weight(n, 0.0);

  std::size_t first = static_cast<std::size_t>(rng::bounded(eng, n));
  centroids.push_back(sorted[first]->components);
  chosen[first] = true;

  while (centroids.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) {
        weight[i] = 0.0;
        continue;
      }
      double best = -1.0;
      for (const Sparse& c : centroids)
        best = std::max(best, dot(sorted[i]->components, c));
      weight[i] = std::max(0.0, 1.0 - best);
      total += weight[i];
    }
    std::size_t pick = n;
    if (total > 0.0) {
      double u = rng::uniform01(eng) * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += weight[i];
        if (!chosen[i] && u < acc) {
          pick = i;
          break;
        }
      }
    }
    if (pick == n) {
      // all remaining candidates coincide with a centroid; take the first free
      for (std::size_t i = 0; i < n; ++i)
        if (!chosen[i]) {
          pick = i;
          break;
        }
    }
    chosen[pick] = true;
    centroids.push_back(sorted[pick]->components);
  }
  return centroids;
}

}  // namespace

ClusterModel spherical_kmeans(const std::vector<ContextVector>& vectors, int k,
                              uint64_t seed, int max_iter, double tol) {
  if (k < 1) throw compute_error("cluster count must be positive");
  if (static_cast<std::size_t>(k) > vectors.size())
    throw compute_error("cluster count " + std::to_string(k) + " exceeds the " +
                        std::to_string(vectors.size()) + " available vectors");

  std::vector<const ContextVector*> sorted;
  sorted.reserve(vectors.size());
  for (const auto& v : vectors) sorted.push_back(&v);
  std::sort(sorted.begin(), sorted.end(),
            [](const ContextVector* a, const ContextVector* b) { return a->word < b->word; });

  const std::size_t n = sorted.size();
  rng::Engine eng(seed);

  ClusterModel model;
  model.k = k;
  model.centroids = seed_centroids(sorted, k, eng);

  std::vector<int> assign(n, 0);
  std::vector<double> sim(n, 0.0);
  double prev_objective = -1.0;

  for (int iter = 0; iter < max_iter; ++iter) {
    // assignment: highest cosine, first centroid wins ties
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_sim = dot(sorted[i]->components, model.centroids[0]);
      for (int c = 1; c < k; ++c) {
        double s = dot(sorted[i]->components, model.centroids[c]);
        if (s > best_sim) {
          best_sim = s;
          best = c;
        }
      }
      assign[i] = best;
    }

    // recenter: normalized member sums
    std::vector<Sparse> sums(k);
    std::vector<int> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++sizes[assign[i]];
      for (const auto& [key, value] : sorted[i]->components)
        sums[assign[i]][key] += value;
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      normalize(sums[c]);
      model.centroids[c] = std::move(sums[c]);
    }

    for (std::size_t i = 0; i < n; ++i)
      sim[i] = dot(sorted[i]->components, model.centroids[assign[i]]);

    // empty-cluster repair: reseed with the worst-fitting vector from a
    // cluster that can spare one
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      std::size_t worst = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[assign[i]] <= 1) continue;
        if (worst == n || sim[i] < sim[worst]) worst = i;
      }
      if (worst == n) continue;
      --sizes[assign[worst]];
      model.centroids[c] = sorted[worst]->components;
      assign[worst] = c;
      sizes[c] = 1;
      sim[worst] = dot(sorted[worst]->components, model.centroids[c]);
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) objective += sim[i];
    if (!model.objective_trace.empty() && objective < prev_objective - 1e-9)
      throw compute_error("spherical k-means objective decreased; numeric invariant broken");
    model.objective_trace.push_back(objective);

    const bool converged =
        iter > 0 && objective - prev_objective < tol;
    prev_objective = objective;
    if (converged) break;
  }

  model.objective = prev_objective;
  for (std::size_t i = 0; i < n; ++i) model.assignment[sorted[i]->word] = assign[i];
  return model;
}

std::vector<std::vector<std::pair<std::string, int64_t>>> cluster_summary(
    const ClusterModel& model, const std::map<std::string, int64_t>& frequencies,
    int top_n) {
  std::vector<std::vector<std::pair<std::string, int64_t>>> clusters(model.k);
  for (const auto& [word, cluster] : model.assignment) {
    auto it = frequencies.find(word);
    clusters[cluster].emplace_back(word, it == frequencies.end() ? 0 : it->second);
  }
  for (auto& members : clusters) {
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (top_n >= 0 && members.size() > static_cast<std::size_t>(top_n))
      members.resize(top_n);
  }
  return clusters;
}

}  // namespace hatescan
