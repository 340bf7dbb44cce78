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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hatescan/clustering.hpp"
#include "hatescan/corpus.hpp"
#include "hatescan/cues.hpp"
#include "hatescan/error.hpp"
#include "hatescan/eval.hpp"
#include "hatescan/exports.hpp"
#include "hatescan/features.hpp"
#include "hatescan/lexstats.hpp"
#include "hatescan/perceptron.hpp"
#include "hatescan/sentiment.hpp"
#include "hatescan/unicode.hpp"

namespace fs = std::filesystem;
using namespace hatescan;

namespace {

struct CorpusOptions {
  std::string path;
  std::string format = "tsv";
};

struct FeatureOptions {
  std::string families = "ch3,ch2,ch1,w1,w2";
  bool include_mentions = false;
  std::string weighting = "count";
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& opts) {
  cmd->add_option("--corpus", opts.path, "Corpus file")->required();
  cmd->add_option("--format", opts.format, "Corpus format: tsv or jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
}

void add_feature_options(CLI::App* cmd, FeatureOptions& opts) {
  cmd->add_option("--features", opts.families,
                  "Comma-separated feature families from ch3,ch2,ch1,w1,w2");
  cmd->add_flag("--include-mentions", opts.include_mentions,
                "Keep @mentions as features");
  cmd->add_option("--weighting", opts.weighting, "Feature weighting: count or binary")
      ->check(CLI::IsMember({"count", "binary"}));
}

Corpus load(const CorpusOptions& opts) {
  return load_corpus(opts.path,
                     opts.format == "tsv" ? CorpusFormat::tsv : CorpusFormat::jsonl);
}

FeatureConfig make_feature_config(const FeatureOptions& opts) {
  FeatureConfig config;
  config.use_ch3 = config.use_ch2 = config.use_ch1 = config.use_w1 = config.use_w2 = false;
  std::size_t start = 0;
  const std::string& s = opts.families;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string family =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    if (family == "ch3")
      config.use_ch3 = true;
    else if (family == "ch2")
      config.use_ch2 = true;
    else if (family == "ch1")
      config.use_ch1 = true;
    else if (family == "w1")
      config.use_w1 = true;
    else if (family == "w2")
      config.use_w2 = true;
    else if (!family.empty())
      throw config_error("unknown feature family '" + family + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  config.include_mentions = opts.include_mentions;
  config.weighting = opts.weighting == "binary" ? Weighting::binary : Weighting::count;
  config.validate();
  return config;
}

fs::path prepare_outdir(const std::string& outdir) {
  fs::path dir(outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw input_error("cannot create output directory: " + outdir);
  return dir;
}

std::set<std::string> load_word_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open word list: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) words.insert(uni::fold_case(line));
  }
  return words;
}

std::map<TargetCategory, std::set<std::string>> load_target_keywords(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open target keyword file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw input_error("target keyword file is not a JSON object: " + path);
  std::map<TargetCategory, std::set<std::string>> out;
  for (const auto& [name, keywords] : doc.items()) {
    TargetCategory category;
    if (name == "race")
      category = TargetCategory::race;
    else if (name == "gender")
      category = TargetCategory::gender;
    else if (name == "religion")
      category = TargetCategory::religion;
    else if (name == "ideology")
      category = TargetCategory::ideology;
    else
      throw input_error("unknown target category '" + name + "': " + path);
    if (!keywords.is_array())
      throw input_error("target category '" + name + "' must be an array: " + path);
    for (const auto& kw : keywords)
      out[category].insert(uni::fold_case(kw.get<std::string>()));
  }
  return out;
}

void summarize_corpus(const Corpus& corpus) {
  int64_t hate = 0, safe = 0, unlabeled = 0, tokens = 0;
  for (const Document& doc : corpus) {
    switch (doc.label) {
      case Label::hate:
        ++hate;
        break;
      case Label::safe:
        ++safe;
        break;
      default:
        ++unlabeled;
    }
    tokens += static_cast<int64_t>(tokenize(doc.text).size());
  }
  std::cout << "documents: " << corpus.size() << " (hate " << hate << ", safe " << safe
            << ", unlabeled " << unlabeled << "), tokens: " << tokens << "\n";
}

// ---------------------------------------------------------------- commands

int run_ingest(const CorpusOptions& corpus_opts, const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  fs::path dir = prepare_outdir(outdir);
  write_file((dir / "corpus.jsonl").string(), corpus_to_jsonl(corpus));
  summarize_corpus(corpus);
  std::cout << "wrote " << (dir / "corpus.jsonl").string() << "\n";
  return 0;
}

int run_train(const CorpusOptions& corpus_opts, const FeatureOptions& feature_opts,
              int epochs, uint64_t seed, const std::string& model_path) {
  Corpus corpus = load(corpus_opts);
  FeatureConfig config = make_feature_config(feature_opts);

  std::vector<FeatureVector> vectors;
  std::vector<int> labels;
  for (const Document& doc : corpus) {
    if (doc.label == Label::unlabeled) continue;
    vectors.push_back(vectorize(doc, config));
    labels.push_back(doc.label == Label::hate ? 1 : -1);
  }
  PerceptronModel model = train(vectors, labels, epochs, seed, config);
  fs::path path(model_path);
  if (path.has_parent_path()) prepare_outdir(path.parent_path().string());
  save_model(model, model_path);
  std::cout << "trained on " << vectors.size() << " documents, " << model.update_count
            << " updates, " << model.weights.size() << " features\n";
  std::cout << "wrote " << model_path << "\n";
  return 0;
}

int run_predict(const std::string& model_path, const std::string& text,
                const CorpusOptions& corpus_opts, const std::string& outdir) {
  PerceptronModel model = load_model(model_path);
  if (!text.empty()) {
    Prediction p = predict(model, vectorize_tokens(tokenize(text), model.feature_config));
    std::cout << to_string(p.label) << "\t" << format_double(p.score) << "\n";
    return 0;
  }
  if (corpus_opts.path.empty())
    throw config_error("predict needs --text or --corpus");
  Corpus corpus = load(corpus_opts);
  fs::path dir = prepare_outdir(outdir);
  std::string tsv = "id\tgold\tpredicted\tscore\n";
  int64_t hate = 0;
  for (const Document& doc : corpus) {
    Prediction p = predict(model, vectorize(doc, model.feature_config));
    if (p.label == Label::hate) ++hate;
    tsv += doc.id + '\t' + to_string(doc.label) + '\t' + to_string(p.label) + '\t' +
           format_double(p.score) + '\n';
  }
  write_file((dir / "predictions.tsv").string(), tsv);
  std::cout << "predicted hate for " << hate << "/" << corpus.size() << " documents\n";
  std::cout << "wrote " << (dir / "predictions.tsv").string() << "\n";
  return 0;
}

int run_crossval(const CorpusOptions& corpus_opts, const FeatureOptions& feature_opts,
                 int k, int epochs, uint64_t seed, const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  FeatureConfig config = make_feature_config(feature_opts);
  EvaluationReport report = cross_validate(corpus, config, k, epochs, seed);
  fs::path dir = prepare_outdir(outdir);
  write_json_file((dir / "report.json").string(), report_to_json(report));
  write_file((dir / "report.tsv").string(), report_to_tsv(report));
  std::cout << "k=" << k << " seed=" << seed << " P=" << format_double(report.precision)
            << " R=" << format_double(report.recall)
            << " F1(hate)=" << format_double(report.f1_hate)
            << " F1(macro)=" << format_double(report.f1_macro) << "\n";
  std::cout << "wrote " << (dir / "report.json").string() << ", "
            << (dir / "report.tsv").string() << "\n";
  return 0;
}

int run_ablate(const CorpusOptions& corpus_opts, int k, int epochs, uint64_t seed,
               const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  std::vector<AblationRow> rows =
      ablation(corpus, default_ablation_configs(), k, epochs, seed);
  fs::path dir = prepare_outdir(outdir);
  write_file((dir / "ablation.tsv").string(), ablation_to_tsv(rows));
  write_json_file((dir / "ablation.json").string(), ablation_to_json(rows));
  std::cout << ablation_to_tsv(rows);
  std::cout << "wrote " << (dir / "ablation.tsv").string() << ", "
            << (dir / "ablation.json").string() << "\n";
  return 0;
}

int run_bias(const CorpusOptions& corpus_opts, double alpha, int64_t min_count,
             const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  std::vector<BiasEntry> entries = biased_words(corpus, alpha, min_count);
  fs::path dir = prepare_outdir(outdir);
  write_file((dir / "bias.tsv").string(), bias_to_tsv(entries));
  write_json_file((dir / "bias.json").string(), bias_to_json(entries));
  int64_t significant = 0;
  for (const BiasEntry& e : entries)
    if (e.p_significant) ++significant;
  std::cout << entries.size() << " words with count >= " << min_count << ", "
            << significant << " significantly biased at alpha=" << alpha << "\n";
  for (std::size_t i = 0; i < entries.size() && i < 10; ++i)
    std::cout << "  " << entries[i].word << "\t" << (entries[i].hate_count + entries[i].safe_count)
              << "\t" << format_double(entries[i].hate_likelihood) << "\n";
  std::cout << "wrote " << (dir / "bias.tsv").string() << ", "
            << (dir / "bias.json").string() << "\n";
  return 0;
}

int run_pairs(const CorpusOptions& corpus_opts, double alpha, int64_t min_count,
              const std::string& adjectives_path, const std::string& nouns_path,
              const std::string& targets_path, const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  std::vector<BiasEntry> bias = biased_words(corpus, alpha, min_count);
  PairMiningOptions options;
  if (!adjectives_path.empty()) options.adjective_lexicon = load_word_set(adjectives_path);
  if (!nouns_path.empty()) options.noun_lexicon = load_word_set(nouns_path);
  if (!targets_path.empty()) options.target_keywords = load_target_keywords(targets_path);
  std::vector<PairEntry> pairs = mine_pairs(corpus, bias, options);
  fs::path dir = prepare_outdir(outdir);
  write_file((dir / "pairs.tsv").string(), pairs_to_tsv(pairs));
  write_json_file((dir / "pairs.json").string(), pairs_to_json(pairs));
  std::cout << pairs.size() << " biased adjective-noun pairs\n";
  for (std::size_t i = 0; i < pairs.size() && i < 10; ++i)
    std::cout << "  " << pairs[i].adjective << " " << pairs[i].noun << "\t"
              << pairs[i].hate_count << "/" << pairs[i].safe_count << "\n";
  std::cout << "wrote " << (dir / "pairs.tsv").string() << ", "
            << (dir / "pairs.json").string() << "\n";
  return 0;
}

int run_cluster(const CorpusOptions& corpus_opts, int k, int top_words, int window,
                uint64_t seed, double alpha, int64_t min_count, int summary_words,
                const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  std::vector<BiasEntry> bias = biased_words(corpus, alpha, min_count);

  std::set<std::string> words;
  std::map<std::string, int64_t> hate_frequency;
  for (const BiasEntry& entry : bias) {
    if (static_cast<int>(words.size()) >= top_words) break;
    words.insert(entry.word);
    hate_frequency[entry.word] = entry.hate_count;
  }
  if (words.empty()) throw compute_error("no biased words available for clustering");

  ContextVectorResult contexts = context_vectors(corpus, words, window);
  for (const auto& dropped : contexts.dropped)
    std::cerr << "warning: no context for '" << dropped << "', dropped\n";
  ClusterModel model = spherical_kmeans(contexts.vectors, k, seed);

  auto full = cluster_summary(model, hate_frequency, -1);
  fs::path dir = prepare_outdir(outdir);
  write_json_file((dir / "clusters.json").string(), clusters_to_json(model, full));

  auto summary = cluster_summary(model, hate_frequency, summary_words);
  std::cout << "k=" << k << " objective=" << format_double(model.objective) << " after "
            << model.objective_trace.size() << " iterations\n";
  for (std::size_t c = 0; c < summary.size(); ++c) {
    std::cout << "cluster " << c << ":";
    for (const auto& [word, count] : summary[c]) std::cout << " " << word << "(" << count << ")";
    std::cout << "\n";
  }
  std::cout << "wrote " << (dir / "clusters.json").string() << "\n";
  return 0;
}

int run_wordtree(const CorpusOptions& corpus_opts, const std::string& target, int window,
                 const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  WordTree tree = word_tree(corpus, target, window);
  fs::path dir = prepare_outdir(outdir);
  write_json_file((dir / "wordtree.json").string(), word_tree_to_json(tree));
  int64_t occurrences = 0;
  for (const auto& [_, c] : tree.after) occurrences += c;
  std::cout << "target '" << tree.target << "': " << tree.before.size()
            << " distinct words before, " << tree.after.size() << " after\n";
  std::cout << "wrote " << (dir / "wordtree.json").string() << "\n";
  (void)occurrences;
  return 0;
}

int run_sentiment(const CorpusOptions& corpus_opts, const std::string& positive_path,
                  const std::string& negative_path, double threshold,
                  const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  SentimentLexicon lexicon = load_lexicon(positive_path, negative_path);
  auto dist = polarity_distribution(corpus, lexicon, threshold);
  fs::path dir = prepare_outdir(outdir);
  write_file((dir / "polarity.tsv").string(), polarity_to_tsv(dist));
  write_json_file((dir / "polarity.json").string(), polarity_to_json(dist));
  for (const auto& [label, b] : dist)
    std::cout << to_string(label) << ": negative " << format_double(b.negative)
              << ", neutral " << format_double(b.neutral) << ", positive "
              << format_double(b.positive) << " (" << b.documents << " documents)\n";
  std::cout << "wrote " << (dir / "polarity.tsv").string() << ", "
            << (dir / "polarity.json").string() << "\n";
  return 0;
}

int run_refs(const CorpusOptions& corpus_opts, const std::string& groups_path,
             const std::string& positive_path, const std::string& negative_path,
             const std::string& outdir) {
  Corpus corpus = load(corpus_opts);
  ReferenceGroups groups = load_reference_groups(groups_path);
  SentimentLexicon lexicon = load_lexicon(positive_path, negative_path);
  auto refs = count_references(corpus, groups, lexicon);
  fs::path dir = prepare_outdir(outdir);
  write_file((dir / "refs.tsv").string(), references_to_tsv(refs));
  write_json_file((dir / "refs.json").string(), references_to_json(refs));
  for (const auto& [name, c] : refs)
    std::cout << name << ": " << c.mentions << " mentions, " << c.negative_mentions
              << " negative\n";
  std::cout << "wrote " << (dir / "refs.tsv").string() << ", "
            << (dir / "refs.json").string() << "\n";
  return 0;
}

int run_cues(const std::vector<std::string>& handles,
             const std::vector<std::string>& profiles, const CorpusOptions& corpus_opts,
             const std::string& lexicon_path, const std::string& outdir) {
  CueLexicon lexicon =
      lexicon_path.empty() ? default_cue_lexicon() : load_cue_lexicon(lexicon_path);

  nlohmann::json results = nlohmann::json::array();
  auto record = [&](const char* kind, const std::string& input,
                    const std::vector<CueHit>& hits) {
    if (!hits.empty())
      results.push_back(
          {{"kind", kind}, {"input", input}, {"hits", cue_hits_to_json(hits)}});
    for (const CueHit& h : hits)
      std::cout << kind << " '" << input << "': " << to_string(h.category) << " '"
                << h.matched << "' -> " << h.expansion_or_keyword << "\n";
  };

  for (const auto& handle : handles) record("handle", handle, scan_handle(handle, lexicon));
  for (const auto& profile : profiles)
    record("profile", profile, scan_profile(profile, lexicon));
  if (!corpus_opts.path.empty()) {
    Corpus corpus = load(corpus_opts);
    for (const Document& doc : corpus)
      if (doc.author_handle)
        record("handle", *doc.author_handle, scan_handle(*doc.author_handle, lexicon));
  }
  if (handles.empty() && profiles.empty() && corpus_opts.path.empty())
    throw config_error("cues needs --handle, --profile, or --corpus");

  fs::path dir = prepare_outdir(outdir);
  write_json_file((dir / "cues.json").string(), results);
  std::cout << results.size() << " inputs with hits\n";
  std::cout << "wrote " << (dir / "cues.json").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hate-speech corpus analysis and detection toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML config file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::string outdir = "out";
  app.add_option("--out", outdir, "Output directory")->capture_default_str();

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Load and normalize a corpus");
  CorpusOptions ingest_corpus;
  add_corpus_options(ingest, ingest_corpus);

  // train
  auto* train_cmd = app.add_subcommand("train", "Train an averaged perceptron");
  CorpusOptions train_corpus;
  FeatureOptions train_features;
  int train_epochs = 5;
  uint64_t train_seed = 1;
  std::string model_out = "out/model.json";
  add_corpus_options(train_cmd, train_corpus);
  add_feature_options(train_cmd, train_features);
  train_cmd->add_option("--epochs", train_epochs, "Training epochs")->capture_default_str();
  train_cmd->add_option("--seed", train_seed, "Shuffle seed")->capture_default_str();
  train_cmd->add_option("--model-out", model_out, "Model file path")->capture_default_str();

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Score text with a trained model");
  std::string predict_model, predict_text;
  CorpusOptions predict_corpus;
  predict_cmd->add_option("--model", predict_model, "Model file")->required();
  predict_cmd->add_option("--text", predict_text, "Single text to score");
  predict_cmd->add_option("--corpus", predict_corpus.path, "Corpus file to score");
  predict_cmd->add_option("--format", predict_corpus.format, "Corpus format: tsv or jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));

  // crossval
  auto* crossval = app.add_subcommand("crossval", "K-fold cross-validation");
  CorpusOptions cv_corpus;
  FeatureOptions cv_features;
  int cv_k = 10, cv_epochs = 5;
  uint64_t cv_seed = 1;
  add_corpus_options(crossval, cv_corpus);
  add_feature_options(crossval, cv_features);
  crossval->add_option("--k", cv_k, "Fold count")->capture_default_str();
  crossval->add_option("--epochs", cv_epochs, "Training epochs")->capture_default_str();
  crossval->add_option("--seed", cv_seed, "Fold/shuffle seed")->capture_default_str();

  // ablate
  auto* ablate = app.add_subcommand("ablate", "Feature-family ablation table");
  CorpusOptions ab_corpus;
  int ab_k = 10, ab_epochs = 5;
  uint64_t ab_seed = 1;
  add_corpus_options(ablate, ab_corpus);
  ablate->add_option("--k", ab_k, "Fold count")->capture_default_str();
  ablate->add_option("--epochs", ab_epochs, "Training epochs")->capture_default_str();
  ablate->add_option("--seed", ab_seed, "Fold/shuffle seed")->capture_default_str();

  // bias
  auto* bias = app.add_subcommand("bias", "Chi-square vocabulary bias table");
  CorpusOptions bias_corpus;
  double bias_alpha = 0.05;
  int64_t bias_min_count = 5;
  add_corpus_options(bias, bias_corpus);
  bias->add_option("--alpha", bias_alpha, "Significance level")->capture_default_str();
  bias->add_option("--min-count", bias_min_count, "Minimum total word count")
      ->capture_default_str();

  // pairs
  auto* pairs = app.add_subcommand("pairs", "Biased adjective-noun pairs");
  CorpusOptions pairs_corpus;
  double pairs_alpha = 0.05;
  int64_t pairs_min_count = 5;
  std::string adjectives_path, nouns_path, targets_path;
  add_corpus_options(pairs, pairs_corpus);
  pairs->add_option("--alpha", pairs_alpha, "Significance level")->capture_default_str();
  pairs->add_option("--min-count", pairs_min_count, "Minimum total word count")
      ->capture_default_str();
  pairs->add_option("--adjectives", adjectives_path, "Adjective list (one per line)");
  pairs->add_option("--nouns", nouns_path, "Noun list (one per line)");
  pairs->add_option("--targets", targets_path, "Target-category keyword JSON");

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Cluster biased words by context");
  CorpusOptions cluster_corpus;
  int cluster_k = 3, cluster_top = 250, cluster_window = 2, cluster_summary_words = 10;
  uint64_t cluster_seed = 1;
  double cluster_alpha = 0.05;
  int64_t cluster_min_count = 5;
  add_corpus_options(cluster, cluster_corpus);
  cluster->add_option("--k", cluster_k, "Cluster count")->capture_default_str();
  cluster->add_option("--top", cluster_top, "How many top biased words to cluster")
      ->capture_default_str();
  cluster->add_option("--window", cluster_window, "Context window")->capture_default_str();
  cluster->add_option("--seed", cluster_seed, "Initialization seed")->capture_default_str();
  cluster->add_option("--alpha", cluster_alpha, "Significance level")->capture_default_str();
  cluster->add_option("--min-count", cluster_min_count, "Minimum total word count")
      ->capture_default_str();
  cluster->add_option("--summary-words", cluster_summary_words,
                      "Words per cluster in the stdout summary")
      ->capture_default_str();

  // wordtree
  auto* wordtree = app.add_subcommand("wordtree", "Context counts around a target word");
  CorpusOptions wt_corpus;
  std::string wt_target;
  int wt_window = 2;
  add_corpus_options(wordtree, wt_corpus);
  wordtree->add_option("--target", wt_target, "Target word")->required();
  wordtree->add_option("--window", wt_window, "Context window")->capture_default_str();

  // sentiment
  auto* sentiment = app.add_subcommand("sentiment", "Lexicon polarity distribution");
  CorpusOptions sent_corpus;
  std::string sent_positive, sent_negative;
  double sent_threshold = 0.0;
  add_corpus_options(sentiment, sent_corpus);
  sentiment->add_option("--positive", sent_positive, "Positive lexicon file")->required();
  sentiment->add_option("--negative", sent_negative, "Negative lexicon file")->required();
  sentiment->add_option("--threshold", sent_threshold,
                        "Polarity threshold t: negative < -t, positive > +t")
      ->capture_default_str();

  // refs
  auto* refs = app.add_subcommand("refs", "Reference-group mention counts");
  CorpusOptions refs_corpus;
  std::string refs_groups, refs_positive, refs_negative;
  add_corpus_options(refs, refs_corpus);
  refs->add_option("--groups", refs_groups, "Reference groups JSON")->required();
  refs->add_option("--positive", refs_positive, "Positive lexicon file")->required();
  refs->add_option("--negative", refs_negative, "Negative lexicon file")->required();

  // cues
  auto* cues = app.add_subcommand("cues", "Screen usernames/profiles for cue patterns");
  std::vector<std::string> cue_handles, cue_profiles;
  CorpusOptions cue_corpus;
  std::string cue_lexicon_path;
  cues->add_option("--handle", cue_handles, "Username to scan (repeatable)");
  cues->add_option("--profile", cue_profiles, "Profile description to scan (repeatable)");
  cues->add_option("--corpus", cue_corpus.path, "Corpus whose author handles are scanned");
  cues->add_option("--format", cue_corpus.format, "Corpus format: tsv or jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  cues->add_option("--lexicon", cue_lexicon_path, "Cue lexicon JSON (default built-in)");

  // --out and --config may appear after the subcommand name
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*ingest) return run_ingest(ingest_corpus, outdir);
    if (*train_cmd)
      return run_train(train_corpus, train_features, train_epochs, train_seed, model_out);
    if (*predict_cmd) return run_predict(predict_model, predict_text, predict_corpus, outdir);
    if (*crossval)
      return run_crossval(cv_corpus, cv_features, cv_k, cv_epochs, cv_seed, outdir);
    if (*ablate) return run_ablate(ab_corpus, ab_k, ab_epochs, ab_seed, outdir);
    if (*bias) return run_bias(bias_corpus, bias_alpha, bias_min_count, outdir);
    if (*pairs)
      return run_pairs(pairs_corpus, pairs_alpha, pairs_min_count, adjectives_path,
                       nouns_path, targets_path, outdir);
    if (*cluster)
      return run_cluster(cluster_corpus, cluster_k, cluster_top, cluster_window,
                         cluster_seed, cluster_alpha, cluster_min_count,
                         cluster_summary_words, outdir);
    if (*wordtree) return run_wordtree(wt_corpus, wt_target, wt_window, outdir);
    if (*sentiment)
      return run_sentiment(sent_corpus, sent_positive, sent_negative, sent_threshold, outdir);
    if (*refs) return run_refs(refs_corpus, refs_groups, refs_positive, refs_negative, outdir);
    if (*cues)
      return run_cues(cue_handles, cue_profiles, cue_corpus, cue_lexicon_path, outdir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
