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
#include "hatescan/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "json.hpp"

#include "hatescan/error.hpp"
#include "hatescan/rng.hpp"
#include "hatescan/unicode.hpp"

namespace hatescan {

const char* to_string(Label label) {
  switch (label) {
    case Label::hate:
      return "hate";
    case Label::safe:
      return "safe";
    default:
      return "unlabeled";
  }
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "hate") return Label::hate;
  if (s == "safe") return Label::safe;
  if (s == "unlabeled") return Label::unlabeled;
  return std::nullopt;
}

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word:
      return "word";
    case TokenKind::mention:
      return "mention";
    case TokenKind::hashtag:
      return "hashtag";
    case TokenKind::url:
      return "url";
    case TokenKind::emoji:
      return "emoji";
    case TokenKind::punct:
      return "punct";
    default:
      return "number";
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

void check_document(const Document& doc, std::size_t line_no) {
  if (doc.id.empty())
    throw input_error("empty document id (line " + std::to_string(line_no) + ")");
  if (doc.text.empty() && doc.label != Label::unlabeled)
    throw input_error("empty text on labeled document '" + doc.id + "' (line " +
                      std::to_string(line_no) + ")");
}

Document parse_tsv_record(const std::string& line, std::size_t line_no) {
  auto fields = split_tabs(line);
  if (fields.size() < 3 || fields.size() > 5)
    throw input_error("malformed TSV record: expected 3-5 tab-separated fields, got " +
                      std::to_string(fields.size()) + " (line " +
                      std::to_string(line_no) + ")");
  Document doc;
  doc.id = fields[0];
  auto label = parse_label(fields[1]);
  if (!label)
    throw input_error("unknown label '" + fields[1] + "' (line " +
                      std::to_string(line_no) + ")");
  doc.label = *label;
  doc.text = fields[2];
  if (fields.size() > 3) doc.source = fields[3];
  if (fields.size() > 4) doc.author_handle = fields[4];
  check_document(doc, line_no);
  return doc;
}

Document parse_jsonl_record(const std::string& line, std::size_t line_no) {
  nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
  if (record.is_discarded() || !record.is_object())
    throw input_error("malformed JSON record (line " + std::to_string(line_no) + ")");
  Document doc;
  try {
    doc.id = record.at("id").get<std::string>();
    std::string label_str = record.at("label").get<std::string>();
    auto label = parse_label(label_str);
    if (!label)
      throw input_error("unknown label '" + label_str + "' (line " +
                        std::to_string(line_no) + ")");
    doc.label = *label;
    doc.text = record.at("text").get<std::string>();
    if (record.contains("source")) doc.source = record["source"].get<std::string>();
    if (record.contains("author_handle") && !record["author_handle"].is_null())
      doc.author_handle = record["author_handle"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed JSON record: " + std::string(e.what()) + " (line " +
                      std::to_string(line_no) + ")");
  }
  check_document(doc, line_no);
  return doc;
}

}  // namespace

Corpus load_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open corpus file: " + path);

  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Document doc = format == CorpusFormat::tsv ? parse_tsv_record(line, line_no)
                                               : parse_jsonl_record(line, line_no);
    if (!seen_ids.insert(doc.id).second)
      throw input_error("duplicate document id '" + doc.id + "' (line " +
                        std::to_string(line_no) + ")");
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

namespace {

bool looks_like_url(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end) {
  // scheme:// with an alphabetic scheme
  std::size_t i = begin;
  if (i >= end || !((cps[i] >= 'a' && cps[i] <= 'z') || (cps[i] >= 'A' && cps[i] <= 'Z')))
    return false;
  while (i < end && (uni::is_word_char(cps[i]) || cps[i] == '+' || cps[i] == '-' ||
                     cps[i] == '.')) {
    if (cps[i] > 0x7F) return false;
    ++i;
  }
  return i + 2 < end && cps[i] == ':' && cps[i + 1] == '/' && cps[i + 2] == '/';
}

void emit_chunk(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end,
                std::vector<Token>& out) {
  if (looks_like_url(cps, begin, end)) {
    out.push_back({uni::encode_utf8(cps.data() + begin, end - begin), TokenKind::url});
    return;
  }
  std::size_t i = begin;
  while (i < end) {
    char32_t cp = cps[i];
    if (uni::is_ignorable(cp)) {
      ++i;
      continue;
    }
    if (uni::is_emoji(cp)) {
      out.push_back({uni::encode_utf8(&cp, 1), TokenKind::emoji});
      ++i;
      continue;
    }
    if ((cp == '@' || cp == '#') && i + 1 < end && uni::is_word_char(cps[i + 1])) {
      std::size_t j = i + 1;
      while (j < end && uni::is_word_char(cps[j])) ++j;
      out.push_back({uni::encode_utf8(cps.data() + i, j - i),
                     cp == '@' ? TokenKind::mention : TokenKind::hashtag});
      i = j;
      continue;
    }
    if (uni::is_punct(cp)) {
      out.push_back({uni::encode_utf8(&cp, 1), TokenKind::punct});
      ++i;
      continue;
    }
    // word segment: runs until emoji or an @/# that starts a handle/tag;
    // trailing punctuation is detached, interior punctuation kept
    std::size_t j = i;
    while (j < end && !uni::is_emoji(cps[j]) && !uni::is_ignorable(cps[j])) {
      if ((cps[j] == '@' || cps[j] == '#') && j + 1 < end && j > i &&
          uni::is_word_char(cps[j + 1]))
        break;
      ++j;
    }
    std::size_t word_end = j;
    while (word_end > i && uni::is_punct(cps[word_end - 1])) --word_end;
    if (word_end > i) {
      bool all_digits = true;
      for (std::size_t p = i; p < word_end; ++p)
        if (!uni::is_ascii_digit(cps[p])) {
          all_digits = false;
          break;
        }
      out.push_back({uni::encode_utf8(cps.data() + i, word_end - i),
                     all_digits ? TokenKind::number : TokenKind::word});
    }
    for (std::size_t p = word_end; p < j; ++p)
      out.push_back({uni::encode_utf8(&cps[p], 1), TokenKind::punct});
    i = j;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto cps = uni::decode_utf8(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (uni::is_space(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && !uni::is_space(cps[j])) ++j;
    emit_chunk(cps, i, j, tokens);
    i = j;
  }
  return tokens;
}

std::vector<Token> strip_mentions(std::vector<Token> tokens) {
  std::erase_if(tokens, [](const Token& t) { return t.kind == TokenKind::mention; });
  return tokens;
}

FoldPlan make_folds(const Corpus& corpus, int k, uint64_t seed) {
  if (k < 2) throw compute_error("fold count must be at least 2, got " + std::to_string(k));

  std::vector<std::size_t> strata[3];
  for (std::size_t i = 0; i < corpus.size(); ++i)
    strata[static_cast<int>(corpus[i].label)].push_back(i);

  for (Label label : {Label::hate, Label::safe}) {
    const auto& s = strata[static_cast<int>(label)];
    if (!s.empty() && s.size() < static_cast<std::size_t>(k))
      throw compute_error("insufficient documents: label '" + std::string(to_string(label)) +
                          "' has " + std::to_string(s.size()) + " documents but k=" +
                          std::to_string(k));
  }

  FoldPlan plan;
  plan.k = k;
  rng::Engine eng(seed);
  for (auto& stratum : strata) {
    rng::shuffle(stratum, eng);
    for (std::size_t pos = 0; pos < stratum.size(); ++pos) {
      const Document& doc = corpus[stratum[pos]];
      auto [it, inserted] = plan.assignments.emplace(doc.id, static_cast<int>(pos % k));
      if (!inserted) throw compute_error("duplicate document id '" + doc.id + "' in corpus");
    }
  }
  return plan;
}

}  // namespace hatescan
