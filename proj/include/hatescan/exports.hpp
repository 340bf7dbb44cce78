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
#ifndef HATESCAN_EXPORTS_HPP
#define HATESCAN_EXPORTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hatescan/clustering.hpp"
#include "hatescan/corpus.hpp"
#include "hatescan/cues.hpp"
#include "hatescan/eval.hpp"
#include "hatescan/features.hpp"
#include "hatescan/lexstats.hpp"
#include "hatescan/sentiment.hpp"

namespace hatescan {

// Shortest decimal string that round-trips the double exactly.
std::string format_double(double value);

nlohmann::json feature_config_to_json(const FeatureConfig& config);
FeatureConfig feature_config_from_json(const nlohmann::json& j);

std::string corpus_to_jsonl(const Corpus& corpus);

std::string bias_to_tsv(const std::vector<BiasEntry>& entries);
nlohmann::json bias_to_json(const std::vector<BiasEntry>& entries);

std::string pairs_to_tsv(const std::vector<PairEntry>& pairs);
nlohmann::json pairs_to_json(const std::vector<PairEntry>& pairs);

nlohmann::json word_tree_to_json(const WordTree& tree);

nlohmann::json clusters_to_json(
    const ClusterModel& model,
    const std::vector<std::vector<std::pair<std::string, int64_t>>>& clusters);

nlohmann::json report_to_json(const EvaluationReport& report);
std::string report_to_tsv(const EvaluationReport& report);

nlohmann::json ablation_to_json(const std::vector<AblationRow>& rows);
// Checkmark table shaped like the classic feature-ladder report:
// CH3 CH2 CH1 W1 W2 @ P R, with P/R as percentages.
std::string ablation_to_tsv(const std::vector<AblationRow>& rows);

nlohmann::json polarity_to_json(const std::map<Label, PolarityBreakdown>& dist);
std::string polarity_to_tsv(const std::map<Label, PolarityBreakdown>& dist);

nlohmann::json references_to_json(const std::map<std::string, ReferenceCount>& refs);
std::string references_to_tsv(const std::map<std::string, ReferenceCount>& refs);

nlohmann::json cue_hits_to_json(const std::vector<CueHit>& hits);

void write_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace hatescan

#endif
