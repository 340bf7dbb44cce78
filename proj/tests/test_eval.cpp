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
#include "doctest.h"

#include <string>
#include <vector>

#include "hatescan/error.hpp"
#include "hatescan/eval.hpp"
#include "hatescan/exports.hpp"

using namespace hatescan;

namespace {

// Disjoint per-class vocabularies make the classes trivially separable.
Corpus separable_corpus(int per_class) {
  Corpus corpus;
  const char* hate_words[] = {"knurrig", "zornig", "brummig", "grimmig"};
  const char* safe_words[] = {"sonnig", "freundlich", "gemütlich", "heiter"};
  for (int i = 0; i < per_class; ++i) {
    std::string h = std::string(hate_words[i % 4]) + " " + hate_words[(i + 1) % 4] +
                    " wetter" + std::to_string(i % 7);
    std::string s = std::string(safe_words[i % 4]) + " " + safe_words[(i + 2) % 4] +
                    " wetter" + std::to_string(i % 7);
    corpus.push_back({"h" + std::to_string(i), h, Label::hate, "", {}});
    corpus.push_back({"s" + std::to_string(i), s, Label::safe, "", {}});
  }
  return corpus;
}

}  // namespace

TEST_CASE("metrics of a perfect matrix are all one") {
  Metrics m = metrics({1, 0, 0, 1});
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 1.0);
  CHECK(m.f1 == 1.0);
}

TEST_CASE("metrics zero-over-zero ratios collapse to zero") {
  Metrics m = metrics({0, 0, 5, 5});
  CHECK(m.precision == 0.0);
  CHECK(m.recall == 0.0);
  CHECK(m.f1 == 0.0);
}

TEST_CASE("f1 is the harmonic mean of precision and recall") {
  // tp/(tp+fp) = 8421/10000 and tp/(tp+fn) = 8397/10000 exactly
  ConfusionMatrix cm;
  cm.tp = 8421LL * 8397LL;
  cm.fp = 10000LL * 8397LL - cm.tp;
  cm.fn = 10000LL * 8421LL - cm.tp;
  cm.tn = 0;
  Metrics m = metrics(cm);
  CHECK(m.precision == 0.8421);
  CHECK(m.recall == 0.8397);
  CHECK(m.f1 == 2.0 * m.precision * m.recall / (m.precision + m.recall));
  CHECK(m.f1 == doctest::Approx(0.8408982875490546).epsilon(1e-12));
}

TEST_CASE("f1 is zero exactly when precision times recall is zero") {
  CHECK(metrics({0, 5, 5, 5}).f1 == 0.0);
  Metrics m = metrics({3, 2, 4, 1});
  CHECK(m.f1 > 0.0);
  CHECK(m.f1 <= (m.precision + m.recall) / 2.0);
}

TEST_CASE("macro f1 averages both one-vs-rest scores") {
  // symmetric matrix: both classes score the same
  double macro = macro_f1({10, 2, 2, 10});
  Metrics hate = metrics({10, 2, 2, 10});
  CHECK(macro == doctest::Approx(hate.f1));

  // degenerate: everything predicted safe
  ConfusionMatrix all_safe{0, 0, 5, 5};
  Metrics safe_side = metrics({5, 5, 0, 0});
  CHECK(macro_f1(all_safe) == doctest::Approx(0.5 * safe_side.f1));
}

TEST_CASE("cross_validate on a separable corpus is near perfect") {
  Corpus corpus = separable_corpus(50);
  FeatureConfig config;
  EvaluationReport report = cross_validate(corpus, config, 5, 5, 42);
  CHECK(report.f1_macro >= 0.99);
  CHECK(report.folds.size() == 5);

  // aggregate equals the element-wise fold sum and covers every document
  ConfusionMatrix sum;
  for (const auto& cm : report.folds) sum += cm;
  CHECK(sum.tp == report.aggregate.tp);
  CHECK(sum.fp == report.aggregate.fp);
  CHECK(sum.fn == report.aggregate.fn);
  CHECK(sum.tn == report.aggregate.tn);
  CHECK(report.aggregate.total() == static_cast<int64_t>(corpus.size()));
}

TEST_CASE("cross_validate is deterministic") {
  Corpus corpus = separable_corpus(20);
  FeatureConfig config;
  EvaluationReport a = cross_validate(corpus, config, 4, 3, 9);
  EvaluationReport b = cross_validate(corpus, config, 4, 3, 9);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(report_to_tsv(a) == report_to_tsv(b));
}

TEST_CASE("cross_validate propagates fold-plan errors") {
  Corpus corpus = separable_corpus(3);
  FeatureConfig config;
  CHECK_THROWS_AS(cross_validate(corpus, config, 10, 3, 0), Error);  // too few docs
  CHECK_THROWS_AS(cross_validate(corpus, config, 1, 3, 0), Error);   // k too small
}

TEST_CASE("ablation reuses folds so identical configs give identical rows") {
  Corpus corpus = separable_corpus(20);
  FeatureConfig config;
  auto rows = ablation(corpus, {config, config}, 4, 3, 5);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].precision == rows[1].precision);
  CHECK(rows[0].recall == rows[1].recall);
  CHECK(rows[0].f1_macro == rows[1].f1_macro);
}

TEST_CASE("a single-config ablation equals cross_validate") {
  Corpus corpus = separable_corpus(20);
  FeatureConfig config;
  auto rows = ablation(corpus, {config}, 4, 3, 17);
  EvaluationReport report = cross_validate(corpus, config, 4, 3, 17);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].precision == report.precision);
  CHECK(rows[0].recall == report.recall);
  CHECK(rows[0].f1_hate == report.f1_hate);
}

TEST_CASE("the default ablation ladder has six rows ending with mentions") {
  auto configs = default_ablation_configs();
  REQUIRE(configs.size() == 6);
  CHECK(configs[0].use_ch3);
  CHECK_FALSE(configs[0].use_ch2);
  CHECK_FALSE(configs[0].include_mentions);
  CHECK(configs[4].use_w2);
  CHECK_FALSE(configs[4].include_mentions);
  CHECK(configs[5].include_mentions);
  for (const auto& c : configs) CHECK_NOTHROW(c.validate());

  // every config containing w1 separates the synthetic corpus
  Corpus corpus = separable_corpus(20);
  auto rows = ablation(corpus, configs, 4, 5, 3);
  for (const auto& row : rows)
    if (row.config.use_w1) {
      CHECK(row.precision >= 0.99);
      CHECK(row.recall >= 0.99);
    }
}

TEST_CASE("evaluate_domain returns the predicted-hate fraction") {
  Corpus corpus = separable_corpus(20);
  FeatureConfig config;
  std::vector<FeatureVector> vectors;
  std::vector<int> labels;
  for (const Document& doc : corpus) {
    vectors.push_back(vectorize(doc, config));
    labels.push_back(doc.label == Label::hate ? 1 : -1);
  }
  PerceptronModel model = train(vectors, labels, 5, 21, config);

  Corpus hate_only, safe_only;
  for (const Document& doc : corpus)
    (doc.label == Label::hate ? hate_only : safe_only).push_back(doc);

  double hate_fraction = evaluate_domain(model, hate_only);
  double safe_fraction = evaluate_domain(model, safe_only);
  CHECK(hate_fraction >= safe_fraction);  // training-set sanity
  CHECK(hate_fraction >= 0.99);
  CHECK(safe_fraction <= 0.01);

  Corpus one = {corpus[0]};
  double f = evaluate_domain(model, one);
  CHECK((f == 0.0 || f == 1.0));

  CHECK_THROWS_AS(evaluate_domain(model, {}), Error);
}
