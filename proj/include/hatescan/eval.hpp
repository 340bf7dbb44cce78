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
#ifndef HATESCAN_EVAL_HPP
#define HATESCAN_EVAL_HPP

#include <cstdint>
#include <vector>

#include "hatescan/corpus.hpp"
#include "hatescan/features.hpp"
#include "hatescan/perceptron.hpp"

namespace hatescan {

// Hate is the positive class throughout.
struct ConfusionMatrix {
  int64_t tp = 0, fp = 0, fn = 0, tn = 0;

  int64_t total() const { return tp + fp + fn + tn; }
  ConfusionMatrix& operator+=(const ConfusionMatrix& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    tn += other.tn;
    return *this;
  }
};

struct Metrics {
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 their harmonic mean;
// every 0/0 ratio is reported as 0.
Metrics metrics(const ConfusionMatrix& cm);

// Mean of the hate-class F1 and the safe-class F1 (the matrix with the
// classes swapped).
double macro_f1(const ConfusionMatrix& cm);

struct EvaluationReport {
  std::vector<ConfusionMatrix> folds;
  ConfusionMatrix aggregate;  // element-wise sum of folds
  double precision = 0.0, recall = 0.0, f1_hate = 0.0, f1_macro = 0.0;
  FeatureConfig feature_config;
  uint64_t seed = 0;
  int k = 0;
  int epochs = 0;
};

// Stratified k-fold cross-validation over the labeled documents;
// deterministic for a fixed seed.
EvaluationReport cross_validate(const Corpus& corpus, const FeatureConfig& config,
                                int k, int epochs, uint64_t seed);

// Same but with a caller-provided fold plan, so ablation rows share folds.
EvaluationReport cross_validate_with_plan(const Corpus& corpus,
                                          const FeatureConfig& config,
                                          const FoldPlan& plan, int epochs,
                                          uint64_t seed);

struct AblationRow {
  FeatureConfig config;
  double precision = 0.0, recall = 0.0, f1_hate = 0.0, f1_macro = 0.0;
};

// One cross-validation per config over a single shared fold plan.
std::vector<AblationRow> ablation(const Corpus& corpus,
                                  const std::vector<FeatureConfig>& configs, int k,
                                  int epochs, uint64_t seed);

// The standard ablation ladder: char trigrams alone, then each further
// family, and finally mentions retained.
std::vector<FeatureConfig> default_ablation_configs();

// Fraction of documents the model predicts as hate.
double evaluate_domain(const PerceptronModel& model, const Corpus& corpus);

}  // namespace hatescan

#endif
