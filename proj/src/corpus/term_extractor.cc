// Copyright 2026 The mapcompare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "mapcompare/corpus/term_extractor.h"

#include <fstream>
#include <span>
#include <utility>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "mapcompare/text_format.h"

namespace mapcompare::corpus {
namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool LooksLikeUrl(std::string_view chunk) {
  return chunk.find("://") != std::string_view::npos ||
         chunk.starts_with("www.") || chunk.starts_with("WWW.");
}

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

absl::StatusOr<StopwordSet> LoadStopwords(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    return absl::NotFoundError(
        StrCat("cannot open stopword file ", path.string()));
  }
  StopwordSet words;
  std::string line;
  while (std::getline(input, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(Lowercase(line));
  }
  return words;
}

absl::StatusOr<LemmaMap> LoadLemmaMap(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    return absl::NotFoundError(
        StrCat("cannot open lemma map ", path.string()));
  }
  LemmaMap lemmas;
  std::string line;
  size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(StrCat(
          "lemma map line ", line_number, ": expected term<TAB>lemma"));
    }
    lemmas[Lowercase(fields[0])] = Lowercase(fields[1]);
  }
  return lemmas;
}

const StopwordSet& DefaultStopwords() {
  static const StopwordSet* const kWords = new StopwordSet{
      "a",       "about",   "above",  "after",   "again",   "against", "all",
      "also",    "am",      "an",     "and",     "any",     "are",     "as",
      "at",      "be",      "because", "been",   "before",  "being",   "below",
      "between", "both",    "but",    "by",      "can",     "could",   "did",
      "do",      "does",    "doing",  "down",    "during",  "each",    "few",
      "for",     "from",    "further", "had",    "has",     "have",    "having",
      "he",      "her",     "here",   "hers",    "him",     "his",     "how",
      "however", "i",       "if",     "in",      "into",    "is",      "it",
      "its",     "itself",  "may",    "me",      "might",   "more",    "most",
      "must",    "my",      "no",     "nor",     "not",     "of",      "off",
      "on",      "once",    "only",   "or",      "other",   "our",     "ours",
      "out",     "over",    "own",    "same",    "she",     "should",  "so",
      "some",    "such",    "than",   "that",    "the",     "their",   "theirs",
      "them",    "then",    "there",  "these",   "they",    "this",    "those",
      "through", "to",      "too",    "under",   "until",   "up",      "upon",
      "very",    "via",     "was",    "we",      "were",    "what",    "when",
      "where",   "whether", "which",  "while",   "who",     "whom",    "why",
      "will",    "with",    "within", "without", "would",   "you",     "your"};
  return *kWords;
}

std::vector<std::string> TextNormalizer::Tokenize(std::string_view text) const {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = text.find_first_not_of(" \t\r\n", pos);
    if (start == std::string_view::npos) break;
    size_t end = text.find_first_of(" \t\r\n", start);
    if (end == std::string_view::npos) end = text.size();
    pos = end;
    std::string_view chunk = text.substr(start, end - start);
    if (LooksLikeUrl(chunk)) continue;
    size_t i = 0;
    while (i < chunk.size()) {
      while (i < chunk.size() && !IsWordByte(chunk[i])) ++i;
      size_t j = i;
      while (j < chunk.size() && IsWordByte(chunk[j])) ++j;
      if (j > i) {
        std::string token = Lowercase(chunk.substr(i, j - i));
        if (auto lemma = lemmas_.find(token); lemma != lemmas_.end()) {
          token = lemma->second;
        }
        if (!token.empty()) tokens.push_back(std::move(token));
      }
      i = j;
    }
  }
  return tokens;
}

std::string TextNormalizer::Key(std::string_view phrase) const {
  return StrJoin(Tokenize(phrase), " ");
}

bool TextNormalizer::IsStopword(std::string_view token) const {
  return stopwords_.contains(std::string(token));
}

NounSelector NounSelector::AcceptAll() {
  return NounSelector(Mode::kAcceptAll, [](std::string_view) { return true; });
}

NounSelector NounSelector::Lexicon(std::unordered_set<std::string> nouns) {
  StopwordSet lowered;
  for (const std::string& noun : nouns) lowered.insert(Lowercase(noun));
  return NounSelector(Mode::kLexicon,
                      [nouns = std::move(lowered)](std::string_view token) {
                        return nouns.contains(std::string(token));
                      });
}

NounSelector NounSelector::PreTagged() {
  return NounSelector(Mode::kPreTagged, [](std::string_view) { return true; });
}

NounSelector NounSelector::Custom(
    std::function<bool(std::string_view)> predicate) {
  return NounSelector(Mode::kCustom, std::move(predicate));
}

TermExtractor::TermExtractor(const Thesaurus& thesaurus,
                             TextNormalizer normalizer,
                             NounSelector noun_selector)
    : normalizer_(std::move(normalizer)),
      noun_selector_(std::move(noun_selector)),
      trie_(1) {
  for (const std::string& label : thesaurus.labels()) {
    std::vector<std::string> tokens = normalizer_.Tokenize(label);
    if (!tokens.empty()) AddPhrase(tokens);
  }
}

void TermExtractor::AddPhrase(const std::vector<std::string>& tokens) {
  int node = 0;
  for (const std::string& token : tokens) {
    auto it = trie_[node].children.find(token);
    if (it == trie_[node].children.end()) {
      const int child = static_cast<int>(trie_.size());
      trie_[node].children.emplace(token, child);
      trie_.emplace_back();
      node = child;
    } else {
      node = it->second;
    }
  }
  trie_[node].terminal = true;
}

void TermExtractor::ExtractInto(std::string_view text,
                                std::vector<std::string>& out) const {
  const std::vector<std::string> tokens = normalizer_.Tokenize(text);
  size_t i = 0;
  while (i < tokens.size()) {
    // Longest thesaurus phrase starting at token i.
    size_t match_length = 0;
    int node = 0;
    for (size_t j = i; j < tokens.size(); ++j) {
      auto it = trie_[node].children.find(tokens[j]);
      if (it == trie_[node].children.end()) break;
      node = it->second;
      if (trie_[node].terminal) match_length = j - i + 1;
    }
    if (match_length > 0) {
      out.push_back(StrJoin(
          std::span<const std::string>(tokens).subspan(i, match_length), " "));
      i += match_length;
      continue;
    }
    const std::string& token = tokens[i];
    if (!normalizer_.IsStopword(token) && noun_selector_(token)) {
      out.push_back(token);
    }
    ++i;
  }
}

std::vector<std::string> TermExtractor::ExtractText(std::string_view text) const {
  std::vector<std::string> out;
  ExtractInto(text, out);
  return out;
}

std::vector<std::string> TermExtractor::Extract(const Document& doc) const {
  std::vector<std::string> out;
  if (noun_selector_.mode() == NounSelector::Mode::kPreTagged &&
      doc.terms.has_value()) {
    for (const std::string& term : *doc.terms) {
      std::string key = normalizer_.Key(term);
      if (key.empty() || normalizer_.IsStopword(key)) continue;
      out.push_back(std::move(key));
    }
    return out;
  }
  // Title and abstract are matched separately so no phrase spans both.
  ExtractInto(doc.title, out);
  ExtractInto(doc.abstract, out);
  return out;
}

}  // namespace mapcompare::corpus
