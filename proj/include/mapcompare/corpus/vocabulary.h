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
#ifndef MAPCOMPARE_CORPUS_VOCABULARY_H_
#define MAPCOMPARE_CORPUS_VOCABULARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"

namespace mapcompare::corpus {

using TermSequence = std::vector<std::string>;

// Lexicographically sorted distinct terms with their document and token
// frequencies.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> terms, std::vector<int64_t> doc_frequency,
             std::vector<int64_t> total_frequency);

  int size() const { return static_cast<int>(terms_.size()); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(int index) const { return terms_[index]; }
  int64_t doc_frequency(int index) const { return doc_frequency_[index]; }
  int64_t total_frequency(int index) const { return total_frequency_[index]; }
  std::optional<int> IndexOf(std::string_view term) const;

 private:
  std::vector<std::string> terms_;
  std::vector<int64_t> doc_frequency_;
  std::vector<int64_t> total_frequency_;
  std::unordered_map<std::string, int> index_;
};

struct VocabularyOptions {
  // Terms occurring in at least this share of documents are removed.
  double max_doc_share = 0.95;
  // Then the most frequent survivors (by token count, ties lexicographic)
  // are removed.
  int drop_top_k = 100;
};

// Errors: no non-empty document, or every term filtered ("empty vocabulary").
absl::StatusOr<Vocabulary> BuildVocabulary(const std::vector<TermSequence>& docs,
                                           const VocabularyOptions& options = {});

// Per-document term indices in token order. Out-of-vocabulary terms dropped;
// documents may be empty.
struct BowCorpus {
  std::vector<std::vector<int>> docs;
  int vocab_size = 0;

  int num_docs() const { return static_cast<int>(docs.size()); }
  int64_t num_tokens() const;
};

BowCorpus ToBow(const std::vector<TermSequence>& docs, const Vocabulary& vocab);

}  // namespace mapcompare::corpus

#endif  // MAPCOMPARE_CORPUS_VOCABULARY_H_
