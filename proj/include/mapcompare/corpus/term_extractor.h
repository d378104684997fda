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
#ifndef MAPCOMPARE_CORPUS_TERM_EXTRACTOR_H_
#define MAPCOMPARE_CORPUS_TERM_EXTRACTOR_H_

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/corpus/document.h"
#include "mapcompare/corpus/thesaurus.h"

namespace mapcompare::corpus {

using StopwordSet = std::unordered_set<std::string>;
using LemmaMap = std::unordered_map<std::string, std::string>;

// One term per line; blank lines and '#' comments ignored. Entries are
// lowercased.
absl::StatusOr<StopwordSet> LoadStopwords(const std::filesystem::path& path);
// Tab-separated "term<TAB>lemma" rows.
absl::StatusOr<LemmaMap> LoadLemmaMap(const std::filesystem::path& path);
// Small English stopword list bundled with the library.
const StopwordSet& DefaultStopwords();

class TextNormalizer {
 public:
  TextNormalizer() = default;
  TextNormalizer(StopwordSet stopwords, LemmaMap lemmas)
      : stopwords_(std::move(stopwords)), lemmas_(std::move(lemmas)) {}

  // Lowercased tokens with URL-like chunks dropped. Digits and punctuation
  // separate tokens. Each token goes through the lemma map. Stopwords are
  // kept; phrase matching needs them.
  std::vector<std::string> Tokenize(std::string_view text) const;

  // Canonical form of a phrase: its tokens joined by single spaces.
  std::string Key(std::string_view phrase) const;

  bool IsStopword(std::string_view token) const;

 private:
  StopwordSet stopwords_;
  LemmaMap lemmas_;
};

// Decides whether a single (non-phrase) token is kept as a term.
class NounSelector {
 public:
  enum class Mode { kAcceptAll, kLexicon, kPreTagged, kCustom };

  static NounSelector AcceptAll();
  // Keeps tokens present in `nouns` (compared after lowercasing).
  static NounSelector Lexicon(std::unordered_set<std::string> nouns);
  // Records carry their own term lists; text extraction is bypassed.
  static NounSelector PreTagged();
  static NounSelector Custom(std::function<bool(std::string_view)> predicate);

  Mode mode() const { return mode_; }
  bool operator()(std::string_view token) const { return predicate_(token); }

 private:
  NounSelector(Mode mode, std::function<bool(std::string_view)> predicate)
      : mode_(mode), predicate_(std::move(predicate)) {}

  Mode mode_;
  std::function<bool(std::string_view)> predicate_;
};

// Turns a document into its term sequence: thesaurus phrases found by greedy
// longest match over the token stream, interleaved in text order with the
// remaining non-stopword tokens the noun selector accepts.
class TermExtractor {
 public:
  TermExtractor(const Thesaurus& thesaurus, TextNormalizer normalizer,
                NounSelector noun_selector);

  std::vector<std::string> Extract(const Document& doc) const;
  std::vector<std::string> ExtractText(std::string_view text) const;

  const TextNormalizer& normalizer() const { return normalizer_; }

 private:
  struct TrieNode {
    std::unordered_map<std::string, int> children;
    bool terminal = false;
  };

  void AddPhrase(const std::vector<std::string>& tokens);
  void ExtractInto(std::string_view text, std::vector<std::string>& out) const;

  TextNormalizer normalizer_;
  NounSelector noun_selector_;
  std::vector<TrieNode> trie_;
};

}  // namespace mapcompare::corpus

#endif  // MAPCOMPARE_CORPUS_TERM_EXTRACTOR_H_
