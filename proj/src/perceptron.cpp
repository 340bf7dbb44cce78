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
#include "hatescan/perceptron.hpp"

#include <fstream>

#include "json.hpp"

#include "hatescan/error.hpp"
#include "hatescan/exports.hpp"
#include "hatescan/rng.hpp"

namespace hatescan {

namespace {

constexpr int kModelFileVersion = 1;

double dot(const std::unordered_map<std::string, double>& weights,
           const FeatureVector& vector) {
  double score = 0.0;
  for (const auto& [key, value] : vector) {
    auto it = weights.find(key);
    if (it != weights.end()) score += it->second * value;
  }
  return score;
}

}  // namespace

PerceptronModel train(const std::vector<FeatureVector>& vectors,
                      const std::vector<int>& labels, int epochs, uint64_t seed,
                      const FeatureConfig& config) {
  if (vectors.size() != labels.size())
    throw compute_error("training vectors and labels differ in length");
  if (vectors.empty()) throw compute_error("cannot train on an empty set");
  if (epochs < 1) throw compute_error("epoch count must be positive, got " +
                                      std::to_string(epochs));
  bool has_pos = false, has_neg = false;
  for (int y : labels) {
    if (y == 1)
      has_pos = true;
    else if (y == -1)
      has_neg = true;
    else
      throw compute_error("labels must be +1 or -1");
  }
  if (!has_pos || !has_neg)
    throw compute_error("training set contains a single class; both hate and safe "
                        "examples are required");

  PerceptronModel model;
  model.epochs = epochs;
  model.seed = seed;
  model.feature_config = config;

  // Lazy averaging: cum[f] holds the sum of this weight over all presentations
  // up to (excluding) the one recorded in last[f].
  std::unordered_map<std::string, double> cum;
  std::unordered_map<std::string, int64_t> last;
  double cum_bias = 0.0;
  int64_t last_bias = 1;

  const std::size_t n = vectors.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng::Engine eng(seed);

  int64_t t = 0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng::shuffle(order, eng);
    for (std::size_t idx : order) {
      ++t;
      const FeatureVector& x = vectors[idx];
      const int y = labels[idx];
      double score = dot(model.weights, x) + model.bias;
      int predicted = score > 0.0 ? 1 : -1;
      if (predicted != y) {
        ++model.update_count;
        for (const auto& [key, value] : x) {
          auto [it, inserted] = model.weights.emplace(key, 0.0);
          if (inserted) {
            last[key] = t;
          } else {
            auto& c = cum[key];
            c += it->second * static_cast<double>(t - last[key]);
            last[key] = t;
          }
          it->second += y * value;
        }
        cum_bias += model.bias * static_cast<double>(t - last_bias);
        last_bias = t;
        model.bias += y;
      }
    }
  }

  const auto total = static_cast<double>(t);
  for (const auto& [key, value] : model.weights) {
    double sum = cum[key] + value * static_cast<double>(t - last[key] + 1);
    model.averaged_weights[key] = sum / total;
  }
  model.averaged_bias =
      (cum_bias + model.bias * static_cast<double>(t - last_bias + 1)) / total;
  return model;
}

Prediction predict(const PerceptronModel& model, const FeatureVector& vector) {
  double score = dot(model.averaged_weights, vector) + model.averaged_bias;
  return {score > 0.0 ? Label::hate : Label::safe, score};
}

double live_score(const PerceptronModel& model, const FeatureVector& vector) {
  return dot(model.weights, vector) + model.bias;
}

void save_model(const PerceptronModel& model, const std::string& path) {
  nlohmann::json doc;
  doc["version"] = kModelFileVersion;
  doc["feature_config"] = feature_config_to_json(model.feature_config);
  doc["bias"] = model.bias;
  doc["averaged_bias"] = model.averaged_bias;
  doc["update_count"] = model.update_count;
  doc["epochs"] = model.epochs;
  doc["seed"] = model.seed;
  doc["weights"] = nlohmann::json(std::map<std::string, double>(model.weights.begin(),
                                                                model.weights.end()));
  doc["averaged_weights"] = nlohmann::json(std::map<std::string, double>(
      model.averaged_weights.begin(), model.averaged_weights.end()));

  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write model file: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw input_error("failed writing model file: " + path);
}

PerceptronModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open model file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw input_error("corrupt model file (not a JSON object): " + path);

  auto require = [&](const char* field) -> const nlohmann::json& {
    if (!doc.contains(field))
      throw input_error("model file missing field '" + std::string(field) + "': " + path);
    return doc[field];
  };

  const auto& version = require("version");
  if (!version.is_number_integer() || version.get<int>() != kModelFileVersion)
    throw input_error("unsupported model file version " + version.dump() +
                      " (expected " + std::to_string(kModelFileVersion) + "): " + path);

  PerceptronModel model;
  try {
    model.feature_config = feature_config_from_json(require("feature_config"));
    model.bias = require("bias").get<double>();
    model.averaged_bias = require("averaged_bias").get<double>();
    model.update_count = require("update_count").get<int64_t>();
    model.epochs = require("epochs").get<int>();
    model.seed = require("seed").get<uint64_t>();
    for (const auto& [key, value] : require("weights").items())
      model.weights[key] = value.get<double>();
    for (const auto& [key, value] : require("averaged_weights").items())
      model.averaged_weights[key] = value.get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw input_error("corrupt model file field: " + std::string(e.what()) + ": " + path);
  }
  return model;
}

}  // namespace hatescan
