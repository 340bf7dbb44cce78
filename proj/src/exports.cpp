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
#include "hatescan/exports.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "hatescan/error.hpp"

namespace hatescan {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

namespace {

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
  return buf;
}

}  // namespace

nlohmann::json feature_config_to_json(const FeatureConfig& config) {
  return {{"ch3", config.use_ch3},
          {"ch2", config.use_ch2},
          {"ch1", config.use_ch1},
          {"w1", config.use_w1},
          {"w2", config.use_w2},
          {"include_mentions", config.include_mentions},
          {"weighting", to_string(config.weighting)}};
}

FeatureConfig feature_config_from_json(const nlohmann::json& j) {
  FeatureConfig config;
  try {
    config.use_ch3 = j.at("ch3").get<bool>();
    config.use_ch2 = j.at("ch2").get<bool>();
    config.use_ch1 = j.at("ch1").get<bool>();
    config.use_w1 = j.at("w1").get<bool>();
    config.use_w2 = j.at("w2").get<bool>();
    config.include_mentions = j.at("include_mentions").get<bool>();
    std::string weighting = j.at("weighting").get<std::string>();
    if (weighting == "count")
      config.weighting = Weighting::count;
    else if (weighting == "binary")
      config.weighting = Weighting::binary;
    else
      throw input_error("unknown weighting '" + weighting + "'");
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed feature config: " + std::string(e.what()));
  }
  config.validate();
  return config;
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const Document& doc : corpus) {
    nlohmann::json j{{"id", doc.id},
                     {"label", to_string(doc.label)},
                     {"text", doc.text},
                     {"source", doc.source}};
    if (doc.author_handle) j["author_handle"] = *doc.author_handle;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string bias_to_tsv(const std::vector<BiasEntry>& entries) {
  std::string out = "word\thate_count\tsafe_count\tchi2\tsignificant\thate_likelihood\n";
  for (const BiasEntry& e : entries) {
    out += e.word;
    out += '\t';
    out += std::to_string(e.hate_count);
    out += '\t';
    out += std::to_string(e.safe_count);
    out += '\t';
    out += format_double(e.chi2);
    out += '\t';
    out += e.p_significant ? "yes" : "no";
    out += '\t';
    out += format_double(e.hate_likelihood);
    out += '\n';
  }
  return out;
}

nlohmann::json bias_to_json(const std::vector<BiasEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BiasEntry& e : entries)
    arr.push_back({{"word", e.word},
                   {"hate_count", e.hate_count},
                   {"safe_count", e.safe_count},
                   {"chi2", e.chi2},
                   {"significant", e.p_significant},
                   {"hate_likelihood", e.hate_likelihood}});
  return arr;
}

namespace {

const TargetCategory kAllTargets[] = {TargetCategory::race, TargetCategory::gender,
                                      TargetCategory::religion, TargetCategory::ideology};

}  // namespace

std::string pairs_to_tsv(const std::vector<PairEntry>& pairs) {
  std::string out = "adjective\tnoun\thate_count\tsafe_count\trace\tgender\treligion\tideology\n";
  for (const PairEntry& p : pairs) {
    out += p.adjective;
    out += '\t';
    out += p.noun;
    out += '\t';
    out += std::to_string(p.hate_count);
    out += '\t';
    out += std::to_string(p.safe_count);
    for (TargetCategory t : kAllTargets) {
      out += '\t';
      out += p.targets.contains(t) ? "✓" : "-";
    }
    out += '\n';
  }
  return out;
}

nlohmann::json pairs_to_json(const std::vector<PairEntry>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PairEntry& p : pairs) {
    nlohmann::json targets = nlohmann::json::array();
    for (TargetCategory t : p.targets) targets.push_back(to_string(t));
    arr.push_back({{"adjective", p.adjective},
                   {"noun", p.noun},
                   {"hate_count", p.hate_count},
                   {"safe_count", p.safe_count},
                   {"targets", targets}});
  }
  return arr;
}

namespace {

nlohmann::json count_map_to_sorted_array(const std::map<std::string, int64_t>& counts) {
  // highest count first, ties alphabetical
  std::vector<std::pair<std::string, int64_t>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [word, count] : items)
    arr.push_back({{"word", word}, {"count", count}});
  return arr;
}

}  // namespace

nlohmann::json word_tree_to_json(const WordTree& tree) {
  return {{"target", tree.target},
          {"window", tree.window},
          {"before", count_map_to_sorted_array(tree.before)},
          {"after", count_map_to_sorted_array(tree.after)}};
}

nlohmann::json clusters_to_json(
    const ClusterModel& model,
    const std::vector<std::vector<std::pair<std::string, int64_t>>>& clusters) {
  nlohmann::json cluster_arr = nlohmann::json::array();
  for (std::size_t id = 0; id < clusters.size(); ++id) {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& [word, count] : clusters[id])
      words.push_back({{"word", word}, {"count", count}});
    cluster_arr.push_back({{"id", id}, {"words", words}});
  }
  return {{"k", model.k}, {"clusters", cluster_arr}};
}

namespace {

nlohmann::json confusion_to_json(const ConfusionMatrix& cm) {
  Metrics m = metrics(cm);
  return {{"tp", cm.tp},          {"fp", cm.fp},
          {"fn", cm.fn},          {"tn", cm.tn},
          {"precision", m.precision}, {"recall", m.recall},
          {"f1_hate", m.f1},      {"f1_macro", macro_f1(cm)}};
}

}  // namespace

nlohmann::json report_to_json(const EvaluationReport& report) {
  nlohmann::json folds = nlohmann::json::array();
  for (const ConfusionMatrix& cm : report.folds) folds.push_back(confusion_to_json(cm));
  return {{"note", "zero-denominator ratios are reported as 0"},
          {"seed", report.seed},
          {"k", report.k},
          {"epochs", report.epochs},
          {"feature_config", feature_config_to_json(report.feature_config)},
          {"folds", folds},
          {"aggregate", confusion_to_json(report.aggregate)},
          {"precision", report.precision},
          {"recall", report.recall},
          {"f1_hate", report.f1_hate},
          {"f1_macro", report.f1_macro}};
}

std::string report_to_tsv(const EvaluationReport& report) {
  std::string out = "# zero-denominator ratios are reported as 0\n";
  out += "fold\ttp\tfp\tfn\ttn\tprecision\trecall\tf1_hate\tf1_macro\n";
  auto row = [&](const std::string& name, const ConfusionMatrix& cm) {
    Metrics m = metrics(cm);
    out += name + '\t' + std::to_string(cm.tp) + '\t' + std::to_string(cm.fp) + '\t' +
           std::to_string(cm.fn) + '\t' + std::to_string(cm.tn) + '\t' +
           format_double(m.precision) + '\t' + format_double(m.recall) + '\t' +
           format_double(m.f1) + '\t' + format_double(macro_f1(cm)) + '\n';
  };
  for (std::size_t i = 0; i < report.folds.size(); ++i)
    row(std::to_string(i), report.folds[i]);
  row("aggregate", report.aggregate);
  return out;
}

nlohmann::json ablation_to_json(const std::vector<AblationRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AblationRow& r : rows)
    arr.push_back({{"feature_config", feature_config_to_json(r.config)},
                   {"precision", r.precision},
                   {"recall", r.recall},
                   {"f1_hate", r.f1_hate},
                   {"f1_macro", r.f1_macro}});
  return arr;
}

std::string ablation_to_tsv(const std::vector<AblationRow>& rows) {
  std::string out = "CH3\tCH2\tCH1\tW1\tW2\t@\tP\tR\n";
  auto mark = [](bool on) { return on ? "✓" : "-"; };
  for (const AblationRow& r : rows) {
    out += mark(r.config.use_ch3);
    out += '\t';
    out += mark(r.config.use_ch2);
    out += '\t';
    out += mark(r.config.use_ch1);
    out += '\t';
    out += mark(r.config.use_w1);
    out += '\t';
    out += mark(r.config.use_w2);
    out += '\t';
    out += mark(r.config.include_mentions);
    out += '\t';
    out += percent(r.precision);
    out += '\t';
    out += percent(r.recall);
    out += '\n';
  }
  return out;
}

nlohmann::json polarity_to_json(const std::map<Label, PolarityBreakdown>& dist) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [label, b] : dist)
    obj[to_string(label)] = {{"documents", b.documents},
                             {"negative", b.negative},
                             {"neutral", b.neutral},
                             {"positive", b.positive}};
  return obj;
}

std::string polarity_to_tsv(const std::map<Label, PolarityBreakdown>& dist) {
  std::string out = "label\tdocuments\tnegative\tneutral\tpositive\n";
  for (const auto& [label, b] : dist) {
    out += std::string(to_string(label)) + '\t' + std::to_string(b.documents) + '\t' +
           format_double(b.negative) + '\t' + format_double(b.neutral) + '\t' +
           format_double(b.positive) + '\n';
  }
  return out;
}

nlohmann::json references_to_json(const std::map<std::string, ReferenceCount>& refs) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [name, c] : refs)
    obj[name] = {{"mentions", c.mentions}, {"negative_mentions", c.negative_mentions}};
  return obj;
}

std::string references_to_tsv(const std::map<std::string, ReferenceCount>& refs) {
  std::string out = "group\tmentions\tnegative_mentions\n";
  for (const auto& [name, c] : refs)
    out += name + '\t' + std::to_string(c.mentions) + '\t' +
           std::to_string(c.negative_mentions) + '\n';
  return out;
}

nlohmann::json cue_hits_to_json(const std::vector<CueHit>& hits) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CueHit& h : hits)
    arr.push_back({{"category", to_string(h.category)},
                   {"matched", h.matched},
                   {"expansion_or_keyword", h.expansion_or_keyword}});
  return arr;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
  if (!out) throw input_error("failed writing file: " + path);
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  write_file(path, doc.dump(2) + "\n");
}

}  // namespace hatescan
