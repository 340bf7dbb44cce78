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
#ifndef HATESCAN_CORPUS_HPP
#define HATESCAN_CORPUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hatescan {

enum class Label { hate, safe, unlabeled };

const char* to_string(Label label);
std::optional<Label> parse_label(std::string_view s);

struct Document {
  std::string id;
  std::string text;
  Label label = Label::unlabeled;
  std::string source;
  std::optional<std::string> author_handle;
};

using Corpus = std::vector<Document>;

enum class TokenKind { word, mention, hashtag, url, emoji, punct, number };

const char* to_string(TokenKind kind);

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::word;

  bool operator==(const Token&) const = default;
};

// Stratified cross-validation assignment: fold index in [0, k) per document.
struct FoldPlan {
  int k = 0;
  std::map<std::string, int> assignments;
};

enum class CorpusFormat { tsv, jsonl };

// TSV columns: id, label, text[, source, author_handle]; no header row.
// JSON lines: one object per line with the same field names.
Corpus load_corpus(const std::string& path, CorpusFormat format);

// Whitespace-splitting tokenizer. Leading/trailing punctuation is detached
// from words, @/# runs become mention/hashtag tokens, every emoji codepoint
// is its own token, scheme:// chunks are single url tokens. Case preserved.
std::vector<Token> tokenize(std::string_view text);

std::vector<Token> strip_mentions(std::vector<Token> tokens);

// Deterministic stratified folds: per-label seeded shuffle, then round-robin
// dealing, so per-fold class counts differ by at most one document.
FoldPlan make_folds(const Corpus& corpus, int k, uint64_t seed);

}  // namespace hatescan

#endif
