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
#include <cmath>
#include <cstdio>
#include <fstream>

#include "hatescan/error.hpp"
#include "hatescan/rng.hpp"
#include "hatescan/sentiment.hpp"

using namespace hatescan;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

SentimentLexicon demo_lexicon() {
  TempFile pos("test_sent_pos.txt", "gut|ADJX\t0.3716\tgute,guter\n");
  TempFile neg("test_sent_neg.txt", "schlecht|ADJX\t-0.7683\tschlechte\n");
  return load_lexicon(pos.path, neg.path);
}

std::vector<Token> words(std::initializer_list<const char*> list) {
  std::vector<Token> tokens;
  for (const char* w : list) tokens.push_back({w, TokenKind::word});
  return tokens;
}

}  // namespace

TEST_CASE("load_lexicon expands inflections onto the lemma score") {
  TempFile pos("test_lex_pos.txt", "gut|ADJX\t0.3716\tgute,guter\n");
  TempFile neg("test_lex_neg.txt", "");
  SentimentLexicon lexicon = load_lexicon(pos.path, neg.path);
  REQUIRE(lexicon.entries.size() == 3);
  CHECK(lexicon.entries.at("gut") == 0.3716);
  CHECK(lexicon.entries.at("gute") == 0.3716);
  CHECK(lexicon.entries.at("guter") == 0.3716);
}

TEST_CASE("load_lexicon accepts entries without inflections") {
  TempFile pos("test_lex_pos2.txt", "Freude|NN\t0.6502\n");
  TempFile neg("test_lex_neg2.txt", "");
  SentimentLexicon lexicon = load_lexicon(pos.path, neg.path);
  CHECK(lexicon.entries.at("freude") == 0.6502);
}

TEST_CASE("empty lexicon files produce an empty lexicon") {
  TempFile pos("test_lex_pos3.txt", "");
  TempFile neg("test_lex_neg3.txt", "");
  CHECK(load_lexicon(pos.path, neg.path).entries.empty());
}

TEST_CASE("out-of-range scores are rejected") {
  TempFile pos("test_lex_pos4.txt", "irre|ADJX\t1.5\n");
  TempFile neg("test_lex_neg4.txt", "");
  CHECK_THROWS_WITH_AS(load_lexicon(pos.path, neg.path), doctest::Contains("line 1"),
                       Error);
}

TEST_CASE("malformed lines are rejected with their line number") {
  TempFile pos("test_lex_pos5.txt", "gut|ADJX\t0.1\nkaputt 0.3\n");
  TempFile neg("test_lex_neg5.txt", "");
  CHECK_THROWS_WITH_AS(load_lexicon(pos.path, neg.path), doctest::Contains("line 2"),
                       Error);
  TempFile pos2("test_lex_pos6.txt", "ohnepos\t0.1\n");
  CHECK_THROWS_AS(load_lexicon(pos2.path, neg.path), Error);
  TempFile pos3("test_lex_pos7.txt", "wort|X\tkeinezahl\n");
  CHECK_THROWS_AS(load_lexicon(pos3.path, neg.path), Error);
}

TEST_CASE("duplicate surfaces keep the max-magnitude score") {
  TempFile pos("test_lex_pos8.txt", "gut|ADJX\t0.3\n");
  TempFile neg("test_lex_neg8.txt", "gut|NN\t-0.6\n");
  SentimentLexicon lexicon = load_lexicon(pos.path, neg.path);
  CHECK(lexicon.entries.at("gut") == -0.6);
}

TEST_CASE("score_text matches the published example values") {
  SentimentLexicon lexicon = demo_lexicon();

  SentimentScore s1 = score_text(words({"gut"}), lexicon);
  CHECK(s1.polarity == 0.3716);
  CHECK(s1.matched == 1);

  SentimentScore s2 = score_text(words({"gut", "schlecht"}), lexicon);
  CHECK(s2.matched == 2);
  CHECK(s2.polarity == (0.3716 + -0.7683) / 2.0);  // same arithmetic
  CHECK(s2.polarity == doctest::Approx(-0.19835).epsilon(1e-12));
}

TEST_CASE("score_text without hits is zero") {
  SentimentLexicon lexicon = demo_lexicon();
  SentimentScore s = score_text(words({"nichts", "bekannt"}), lexicon);
  CHECK(s.polarity == 0.0);
  CHECK(s.matched == 0);
}

TEST_CASE("score_text folds case and ignores non-word tokens") {
  SentimentLexicon lexicon = demo_lexicon();
  std::vector<Token> tokens = {{"GUT", TokenKind::word}, {"gut", TokenKind::hashtag}};
  SentimentScore s = score_text(tokens, lexicon);
  CHECK(s.matched == 1);
  CHECK(s.polarity == 0.3716);
}

TEST_CASE("polarity is permutation invariant and bounded") {
  SentimentLexicon lexicon = demo_lexicon();
  rng::Engine eng(8);
  std::vector<const char*> pool = {"gut", "gute", "schlecht", "schlechte", "anderes"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Token> tokens;
    std::size_t len = rng::bounded(eng, 8);
    for (std::size_t i = 0; i < len; ++i)
      tokens.push_back({pool[rng::bounded(eng, pool.size())], TokenKind::word});
    SentimentScore a = score_text(tokens, lexicon);
    CHECK(a.polarity >= -1.0);
    CHECK(a.polarity <= 1.0);

    rng::shuffle(tokens, eng);
    SentimentScore b = score_text(tokens, lexicon);
    CHECK(a.matched == b.matched);
    CHECK(a.polarity == doctest::Approx(b.polarity).epsilon(1e-12));

    // appending a zero-hit token changes nothing
    tokens.push_back({"unbekannt", TokenKind::word});
    SentimentScore c = score_text(tokens, lexicon);
    CHECK(c.polarity == b.polarity);
    CHECK(c.matched == b.matched);
  }
}

namespace {

Corpus polarity_corpus() {
  Corpus corpus;
  corpus.push_back({"h1", "schlecht", Label::hate, "", {}});
  corpus.push_back({"h2", "alles schlecht hier", Label::hate, "", {}});
  corpus.push_back({"h3", "neutrales zeug", Label::hate, "", {}});
  corpus.push_back({"s1", "gut", Label::safe, "", {}});
  corpus.push_back({"s2", "neutrales zeug", Label::safe, "", {}});
  return corpus;
}

}  // namespace

TEST_CASE("polarity_distribution classifies per label") {
  SentimentLexicon lexicon = demo_lexicon();

  Corpus one = {{"h1", "schlecht", Label::hate, "", {}}};
  auto dist = polarity_distribution(one, lexicon, 0.0);
  REQUIRE(dist.contains(Label::hate));
  CHECK(dist.at(Label::hate).negative == 1.0);

  auto full = polarity_distribution(polarity_corpus(), lexicon, 0.0);
  CHECK(full.at(Label::hate).negative == doctest::Approx(2.0 / 3.0));
  CHECK(full.at(Label::safe).positive == doctest::Approx(0.5));
}

TEST_CASE("corpora without lexicon hits are fully neutral") {
  SentimentLexicon lexicon = demo_lexicon();
  Corpus corpus = {{"x1", "nur unbekannte worte", Label::hate, "", {}},
                   {"x2", "wieder nichts", Label::safe, "", {}}};
  auto dist = polarity_distribution(corpus, lexicon, 0.0);
  for (const auto& [_, b] : dist) CHECK(b.neutral == 1.0);
}

TEST_CASE("polarity fractions sum to one per label") {
  SentimentLexicon lexicon = demo_lexicon();
  auto dist = polarity_distribution(polarity_corpus(), lexicon, 0.05);
  for (const auto& [_, b] : dist)
    CHECK(std::abs(b.negative + b.neutral + b.positive - 1.0) <= 1e-9);
}

TEST_CASE("a seeded negative hate class shows more negative hate documents") {
  SentimentLexicon lexicon = demo_lexicon();
  Corpus corpus;
  for (int i = 0; i < 20; ++i)
    corpus.push_back({"h" + std::to_string(i), "alles schlecht heute", Label::hate, "", {}});
  for (int i = 0; i < 20; ++i)
    corpus.push_back({"s" + std::to_string(i),
                      i % 2 == 0 ? "alles gut heute" : "nichts besonderes", Label::safe,
                      "", {}});
  auto dist = polarity_distribution(corpus, lexicon, 0.0);
  CHECK(dist.at(Label::hate).negative > dist.at(Label::safe).negative);
}

TEST_CASE("count_references counts documents per group") {
  SentimentLexicon lexicon = demo_lexicon();
  ReferenceGroups groups;
  groups.groups["female"] = {"frauen", "mädchen"};
  groups.groups["male"] = {"männer", "jungen"};

  Corpus corpus = {{"d1", "Frauen sagen etwas", Label::hate, "", {}},
                   {"d2", "die Mädchen lachen", Label::hate, "", {}},
                   {"d3", "Männer gehen heim", Label::hate, "", {}}};
  auto refs = count_references(corpus, groups, lexicon);
  CHECK(refs.at("female").mentions == 2);
  CHECK(refs.at("male").mentions == 1);
}

TEST_CASE("a document with keywords of both groups counts once per group") {
  SentimentLexicon lexicon = demo_lexicon();
  ReferenceGroups groups;
  groups.groups["female"] = {"frauen"};
  groups.groups["male"] = {"männer"};
  Corpus corpus = {{"d1", "Frauen und Männer und Frauen", Label::hate, "", {}}};
  auto refs = count_references(corpus, groups, lexicon);
  CHECK(refs.at("female").mentions == 1);
  CHECK(refs.at("male").mentions == 1);
}

TEST_CASE("negative mentions require negative polarity") {
  SentimentLexicon lexicon = demo_lexicon();
  ReferenceGroups groups;
  groups.groups["female"] = {"frauen"};
  Corpus corpus = {{"d1", "Frauen finden es schlecht", Label::hate, "", {}},
                   {"d2", "Frauen finden es gut", Label::hate, "", {}}};
  auto refs = count_references(corpus, groups, lexicon);
  CHECK(refs.at("female").mentions == 2);
  CHECK(refs.at("female").negative_mentions == 1);
}

TEST_CASE("count_references on an empty corpus is all zeros") {
  SentimentLexicon lexicon = demo_lexicon();
  ReferenceGroups groups;
  groups.groups["g"] = {"wort"};
  auto refs = count_references({}, groups, lexicon);
  CHECK(refs.at("g").mentions == 0);
  CHECK(refs.at("g").negative_mentions == 0);
}
