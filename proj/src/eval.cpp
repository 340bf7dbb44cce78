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
#include "hatescan/eval.hpp"

#include "hatescan/error.hpp"
#include "hatescan/rng.hpp"

namespace hatescan {

namespace {

double ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double f1_of(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

uint64_t fold_seed(uint64_t seed, int fold) {
  return rng::splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<uint64_t>(fold) + 1)));
}

}  // namespace

Metrics metrics(const ConfusionMatrix& cm) {
  Metrics m;
  m.precision = ratio(cm.tp, cm.tp + cm.fp);
  m.recall = ratio(cm.tp, cm.tp + cm.fn);
  m.f1 = f1_of(m.precision, m.recall);
  return m;
}

double macro_f1(const ConfusionMatrix& cm) {
  const ConfusionMatrix swapped{cm.tn, cm.fn, cm.fp, cm.tp};
  return 0.5 * (metrics(cm).f1 + metrics(swapped).f1);
}

EvaluationReport cross_validate_with_plan(const Corpus& corpus,
                                          const FeatureConfig& config,
                                          const FoldPlan& plan, int epochs,
                                          uint64_t seed) {
  config.validate();
  if (plan.k < 2) throw compute_error("cross-validation needs k >= 2");

  struct Example {
    FeatureVector vector;
    int label;  // +1 hate, -1 safe
    int fold;
  };
  std::vector<Example> examples;
  for (const Document& doc : corpus) {
    if (doc.label == Label::unlabeled) continue;
    auto it = plan.assignments.find(doc.id);
    if (it == plan.assignments.end())
      throw compute_error("document '" + doc.id + "' missing from fold plan");
    examples.push_back(
        {vectorize(doc, config), doc.label == Label::hate ? 1 : -1, it->second});
  }

  EvaluationReport report;
  report.feature_config = config;
  report.seed = seed;
  report.k = plan.k;
  report.epochs = epochs;

  for (int fold = 0; fold < plan.k; ++fold) {
    std::vector<FeatureVector> train_vectors;
    std::vector<int> train_labels;
    for (const Example& ex : examples) {
      if (ex.fold == fold) continue;
      train_vectors.push_back(ex.vector);
      train_labels.push_back(ex.label);
    }
    PerceptronModel model =
        train(train_vectors, train_labels, epochs, fold_seed(seed, fold), config);

    ConfusionMatrix cm;
    for (const Example& ex : examples) {
      if (ex.fold != fold) continue;
      const bool predicted_hate = predict(model, ex.vector).label == Label::hate;
      if (ex.label == 1)
        predicted_hate ? ++cm.tp : ++cm.fn;
      else
        predicted_hate ? ++cm.fp : ++cm.tn;
    }
    report.folds.push_back(cm);
    report.aggregate += cm;
  }

  Metrics m = metrics(report.aggregate);
  report.precision = m.precision;
  report.recall = m.recall;
  report.f1_hate = m.f1;
  report.f1_macro = macro_f1(report.aggregate);
  return report;
}

EvaluationReport cross_validate(const Corpus& corpus, const FeatureConfig& config,
                                int k, int epochs, uint64_t seed) {
  return cross_validate_with_plan(corpus, config, make_folds(corpus, k, seed), epochs,
                                  seed);
}

std::vector<AblationRow> ablation(const Corpus& corpus,
                                  const std::vector<FeatureConfig>& configs, int k,
                                  int epochs, uint64_t seed) {
  if (configs.empty()) throw compute_error("ablation needs at least one feature config");
  const FoldPlan plan = make_folds(corpus, k, seed);

  std::vector<AblationRow> rows;
  rows.reserve(configs.size());
  for (const FeatureConfig& config : configs) {
    EvaluationReport report = cross_validate_with_plan(corpus, config, plan, epochs, seed);
    rows.push_back(
        {config, report.precision, report.recall, report.f1_hate, report.f1_macro});
  }
  return rows;
}

std::vector<FeatureConfig> default_ablation_configs() {
  std::vector<FeatureConfig> configs;
  FeatureConfig c;
  c.use_ch3 = true;
  c.use_ch2 = c.use_ch1 = c.use_w1 = c.use_w2 = false;
  c.include_mentions = false;
  configs.push_back(c);  // CH3
  c.use_ch2 = true;
  configs.push_back(c);  // + CH2
  c.use_ch1 = true;
  configs.push_back(c);  // + CH1
  c.use_w1 = true;
  configs.push_back(c);  // + W1
  c.use_w2 = true;
  configs.push_back(c);  // + W2
  c.include_mentions = true;
  configs.push_back(c);  // + mentions
  return configs;
}

double evaluate_domain(const PerceptronModel& model, const Corpus& corpus) {
  if (corpus.empty()) throw compute_error("cannot evaluate an empty corpus");
  int64_t hate = 0;
  for (const Document& doc : corpus)
    if (predict(model, vectorize(doc, model.feature_config)).label == Label::hate)
      ++hate;
  return static_cast<double>(hate) / static_cast<double>(corpus.size());
}

}  // namespace hatescan
