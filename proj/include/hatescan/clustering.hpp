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
#ifndef HATESCAN_CLUSTERING_HPP
#define HATESCAN_CLUSTERING_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hatescan/corpus.hpp"

namespace hatescan {

// L2-normalized bag of the words appearing within a window around every
// occurrence of `word`.
struct ContextVector {
  std::string word;
  std::map<std::string, double> components;
};

struct ContextVectorResult {
  std::vector<ContextVector> vectors;  // sorted by word
  std::vector<std::string> dropped;    // targets with no context
};

ContextVectorResult context_vectors(const Corpus& corpus,
                                    const std::set<std::string>& words, int window);

struct ClusterModel {
  int k = 0;
  std::vector<std::map<std::string, double>> centroids;  // unit norm
  std::map<std::string, int> assignment;                 // word -> cluster
  double objective = 0.0;  // sum of cosines to assigned centroids
  std::vector<double> objective_trace;  // per iteration, non-decreasing
};

// Cosine k-means on the unit sphere: seeded greedy spreading initialization
// over vectors ordered by word (input order is irrelevant), alternating
// max-cosine assignment and normalized-mean recentering until the objective
// improves by less than tol or max_iter is reached.
ClusterModel spherical_kmeans(const std::vector<ContextVector>& vectors, int k,
                              uint64_t seed, int max_iter = 100, double tol = 1e-6);

// Per cluster: member words with their corpus frequencies, most frequent
// first (ties alphabetical), truncated to top_n.
std::vector<std::vector<std::pair<std::string, int64_t>>> cluster_summary(
    const ClusterModel& model, const std::map<std::string, int64_t>& frequencies,
    int top_n);

}  // namespace hatescan

#endif
