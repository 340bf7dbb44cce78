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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "hatescan/error.hpp"
#include "hatescan/perceptron.hpp"
#include "hatescan/rng.hpp"

using namespace hatescan;

namespace {

// Reference trainer that keeps the full running sum of weight snapshots
// after every presentation. Shares only the shuffle (which defines the
// input order); scoring, updates and averaging are recomputed from scratch.
struct NaiveAveraged {
  std::map<std::string, double> averaged;
  double averaged_bias = 0.0;
};

NaiveAveraged naive_train(const std::vector<FeatureVector>& vectors,
                          const std::vector<int>& labels, int epochs, uint64_t seed) {
  std::map<std::string, double> w;
  double b = 0.0;
  std::map<std::string, double> snapshot_sum;
  double bias_sum = 0.0;

  std::vector<std::size_t> order(vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng::Engine eng(seed);

  int64_t presentations = 0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng::shuffle(order, eng);
    for (std::size_t idx : order) {
      ++presentations;
      double score = b;
      for (const auto& [key, value] : vectors[idx]) {
        auto it = w.find(key);
        if (it != w.end()) score += it->second * value;
      }
      int predicted = score > 0.0 ? 1 : -1;
      if (predicted != labels[idx]) {
        for (const auto& [key, value] : vectors[idx]) w[key] += labels[idx] * value;
        b += labels[idx];
      }
      for (const auto& [key, value] : w) snapshot_sum[key] += value;
      bias_sum += b;
    }
  }

  NaiveAveraged result;
  for (const auto& [key, sum] : snapshot_sum)
    result.averaged[key] = sum / static_cast<double>(presentations);
  result.averaged_bias = bias_sum / static_cast<double>(presentations);
  return result;
}

// Random examples with small integer counts so that all averaging sums stay
// exact in double arithmetic.
void random_examples(rng::Engine& eng, std::size_t n, int features,
                     std::vector<FeatureVector>& vectors, std::vector<int>& labels) {
  vectors.clear();
  labels.clear();
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector vec;
    for (int f = 0; f < features; ++f) {
      if (rng::bounded(eng, 2) == 0) continue;
      vec["f" + std::to_string(f)] = static_cast<double>(1 + rng::bounded(eng, 3));
    }
    vectors.push_back(std::move(vec));
    labels.push_back(i % 2 == 0 ? 1 : -1);
  }
}

}  // namespace

TEST_CASE("a single positive example is classified as hate") {
  std::vector<FeatureVector> vectors = {{{"f", 1.0}}, {{"g", 1.0}}};
  std::vector<int> labels = {1, -1};
  PerceptronModel model = train(vectors, labels, 1, 0);
  CHECK(predict(model, vectors[0]).label == Label::hate);
}

TEST_CASE("a separable pair is learned") {
  std::vector<FeatureVector> vectors = {{{"a", 1.0}}, {{"b", 1.0}}};
  std::vector<int> labels = {1, -1};
  PerceptronModel model = train(vectors, labels, 5, 42);
  CHECK(predict(model, vectors[0]).label == Label::hate);
  CHECK(predict(model, vectors[1]).label == Label::safe);
}

TEST_CASE("averaged weights equal the snapshot-averaging oracle exactly") {
  rng::Engine eng(2025);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FeatureVector> vectors;
    std::vector<int> labels;
    random_examples(eng, 8 + rng::bounded(eng, 13), 10, vectors, labels);
    const uint64_t seed = eng();
    const int epochs = 1 + static_cast<int>(rng::bounded(eng, 4));

    PerceptronModel model = train(vectors, labels, epochs, seed);
    NaiveAveraged oracle = naive_train(vectors, labels, epochs, seed);

    std::map<std::string, double> averaged(model.averaged_weights.begin(),
                                           model.averaged_weights.end());
    // the oracle never materializes untouched keys; the model must not either
    CHECK(averaged.size() == oracle.averaged.size());
    for (const auto& [key, value] : oracle.averaged) {
      REQUIRE(averaged.contains(key));
      CHECK(averaged.at(key) == value);  // bit-exact
    }
    CHECK(model.averaged_bias == oracle.averaged_bias);
  }
}

TEST_CASE("live weights converge to zero error on separable data") {
  rng::Engine eng(77);
  for (int trial = 0; trial < 5; ++trial) {
    // target hyperplane with integer weights
    std::map<std::string, double> target;
    for (int f = 0; f < 10; ++f)
      target["f" + std::to_string(f)] =
          static_cast<double>(static_cast<int64_t>(rng::bounded(eng, 7)) - 3);

    std::vector<FeatureVector> vectors;
    std::vector<int> labels;
    while (vectors.size() < 30) {
      FeatureVector vec;
      double score = 0.0;
      for (int f = 0; f < 10; ++f) {
        if (rng::bounded(eng, 2) == 0) continue;
        double value = static_cast<double>(1 + rng::bounded(eng, 3));
        vec["f" + std::to_string(f)] = value;
        score += target["f" + std::to_string(f)] * value;
      }
      if (score == 0.0) continue;  // keep a hard margin
      vectors.push_back(std::move(vec));
      labels.push_back(score > 0 ? 1 : -1);
    }
    if (std::count(labels.begin(), labels.end(), 1) == 0 ||
        std::count(labels.begin(), labels.end(), -1) == 0)
      continue;

    PerceptronModel model = train(vectors, labels, 50, eng());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      double score = live_score(model, vectors[i]);
      CHECK((score > 0 ? 1 : -1) == labels[i]);
    }
  }
}

TEST_CASE("training is deterministic for a fixed seed") {
  rng::Engine eng(5);
  std::vector<FeatureVector> vectors;
  std::vector<int> labels;
  random_examples(eng, 20, 10, vectors, labels);
  PerceptronModel a = train(vectors, labels, 3, 99);
  PerceptronModel b = train(vectors, labels, 3, 99);
  CHECK(a.weights == b.weights);
  CHECK(a.averaged_weights == b.averaged_weights);
  CHECK(a.bias == b.bias);
  CHECK(a.averaged_bias == b.averaged_bias);
  CHECK(a.update_count == b.update_count);
}

TEST_CASE("score ties resolve to safe") {
  PerceptronModel model;  // all-zero weights
  Prediction p = predict(model, {{"x", 5.0}});
  CHECK(p.score == 0.0);
  CHECK(p.label == Label::safe);
}

TEST_CASE("an empty vector scores the averaged bias") {
  std::vector<FeatureVector> vectors = {{{"a", 1.0}}, {{"b", 2.0}}};
  std::vector<int> labels = {1, -1};
  PerceptronModel model = train(vectors, labels, 3, 0);
  CHECK(predict(model, {}).score == model.averaged_bias);
}

TEST_CASE("doubling a vector doubles the linear part of the score") {
  std::vector<FeatureVector> vectors = {{{"a", 1.0}, {"c", 2.0}}, {{"b", 2.0}}};
  std::vector<int> labels = {1, -1};
  PerceptronModel model = train(vectors, labels, 4, 9);

  FeatureVector x = {{"a", 1.0}, {"b", 3.0}, {"unseen", 4.0}};
  FeatureVector x2;
  for (const auto& [key, value] : x) x2[key] = 2.0 * value;
  double linear = predict(model, x).score - model.averaged_bias;
  double linear2 = predict(model, x2).score - model.averaged_bias;
  CHECK(linear2 == 2.0 * linear);
}

TEST_CASE("on a one-example dataset the averaged and live models agree") {
  std::vector<FeatureVector> pos = {{{"f", 1.0}}};
  CHECK_THROWS_AS(train(pos, {1}, 3, 0), Error);  // single class is rejected

  // the behavioural claim survives via the separable pair: averaged and live
  // labels agree on each training vector
  std::vector<FeatureVector> vectors = {{{"f", 1.0}}, {{"g", 1.0}}};
  std::vector<int> labels = {1, -1};
  PerceptronModel model = train(vectors, labels, 3, 0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    double live = live_score(model, vectors[i]);
    CHECK((live > 0 ? Label::hate : Label::safe) == predict(model, vectors[i]).label);
  }
}

TEST_CASE("invalid training inputs are rejected") {
  std::vector<FeatureVector> vectors = {{{"a", 1.0}}, {{"b", 1.0}}};
  CHECK_THROWS_AS(train(vectors, {1, -1}, 0, 0), Error);       // zero epochs
  CHECK_THROWS_AS(train(vectors, {1}, 1, 0), Error);           // size mismatch
  CHECK_THROWS_AS(train(vectors, {1, 1}, 1, 0), Error);        // single class
  CHECK_THROWS_AS(train({}, {}, 1, 0), Error);                 // empty
  CHECK_THROWS_AS(train(vectors, {1, 0}, 1, 0), Error);        // bad label value
}

namespace {

struct TempPath {
  std::string path;
  explicit TempPath(const char* name) : path(name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("model save/load round-trips predictions bit-exactly") {
  rng::Engine eng(31337);
  std::vector<FeatureVector> vectors;
  std::vector<int> labels;
  random_examples(eng, 20, 10, vectors, labels);
  FeatureConfig config;
  config.weighting = Weighting::count;
  PerceptronModel model = train(vectors, labels, 3, 7, config);

  TempPath file("test_model_roundtrip.json");
  save_model(model, file.path);
  PerceptronModel loaded = load_model(file.path);

  CHECK(loaded.feature_config == model.feature_config);
  CHECK(loaded.update_count == model.update_count);
  CHECK(loaded.epochs == model.epochs);
  CHECK(loaded.seed == model.seed);

  for (int trial = 0; trial < 100; ++trial) {
    FeatureVector vec;
    for (int f = 0; f < 14; ++f)  // includes unseen features
      if (rng::bounded(eng, 2) == 0)
        vec["f" + std::to_string(f)] = static_cast<double>(1 + rng::bounded(eng, 5));
    Prediction a = predict(model, vec);
    Prediction b = predict(loaded, vec);
    CHECK(a.score == b.score);
    CHECK(a.label == b.label);
  }
}

TEST_CASE("loading a truncated model file fails") {
  TempPath file("test_model_truncated.json");
  {
    std::ofstream out(file.path);
    out << "{\"version\": 1, \"bias\": 0.5, ";
  }
  CHECK_THROWS_AS(load_model(file.path), Error);
}

TEST_CASE("loading an unknown model version names the version") {
  TempPath file("test_model_badversion.json");
  {
    std::ofstream out(file.path);
    out << "{\"version\": 99}";
  }
  CHECK_THROWS_WITH_AS(load_model(file.path), doctest::Contains("version"), Error);
}

TEST_CASE("loading a model with a missing field names the field") {
  TempPath file("test_model_missing.json");
  {
    std::ofstream out(file.path);
    out << "{\"version\": 1}";
  }
  CHECK_THROWS_WITH_AS(load_model(file.path), doctest::Contains("feature_config"), Error);
}
