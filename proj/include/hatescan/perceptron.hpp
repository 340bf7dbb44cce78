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
#ifndef HATESCAN_PERCEPTRON_HPP
#define HATESCAN_PERCEPTRON_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hatescan/features.hpp"

namespace hatescan {

// Single-layer averaged perceptron for binary hate/safe decisions.
// Prediction uses the averaged weights: the mean of the live weight vector
// over every training presentation, mistake or not.
struct PerceptronModel {
  std::unordered_map<std::string, double> weights;  // live
  double bias = 0.0;
  std::unordered_map<std::string, double> averaged_weights;
  double averaged_bias = 0.0;
  int64_t update_count = 0;
  int epochs = 0;
  uint64_t seed = 0;
  FeatureConfig feature_config;
};

struct Prediction {
  Label label = Label::safe;
  double score = 0.0;
};

// labels: +1 hate, -1 safe. Examples are visited in a seeded shuffle per
// epoch; mistake-driven updates w += y*x, bias += y. Deterministic for a
// fixed (vectors, labels, epochs, seed).
PerceptronModel train(const std::vector<FeatureVector>& vectors,
                      const std::vector<int>& labels, int epochs, uint64_t seed,
                      const FeatureConfig& config = {});

// score = <averaged_weights, vector> + averaged_bias; hate iff score > 0
// (ties go to safe). Unseen features contribute zero.
Prediction predict(const PerceptronModel& model, const FeatureVector& vector);

// Same decision rule over the live (non-averaged) weights.
double live_score(const PerceptronModel& model, const FeatureVector& vector);

// Versioned JSON model file; round-trips scores bit-exactly.
void save_model(const PerceptronModel& model, const std::string& path);
PerceptronModel load_model(const std::string& path);

}  // namespace hatescan

#endif
