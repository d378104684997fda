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
#include "mapcompare/corpus/vocabulary.h"

#include <algorithm>
#include <map>
#include <set>

#include "absl/status/status.h"

namespace mapcompare::corpus {

Vocabulary::Vocabulary(std::vector<std::string> terms,
                       std::vector<int64_t> doc_frequency,
                       std::vector<int64_t> total_frequency)
    : terms_(std::move(terms)),
      doc_frequency_(std::move(doc_frequency)),
      total_frequency_(std::move(total_frequency)) {
  for (int i = 0; i < size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<int> Vocabulary::IndexOf(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<Vocabulary> BuildVocabulary(const std::vector<TermSequence>& docs,
                                           const VocabularyOptions& options) {
  const bool any_tokens = std::any_of(
      docs.begin(), docs.end(), [](const TermSequence& d) { return !d.empty(); });
  if (!any_tokens) {
    return absl::InvalidArgumentError("no document contains any term");
  }
  struct Counts {
    int64_t docs = 0;
    int64_t tokens = 0;
  };
  // Ordered map: iteration is lexicographic.
  std::map<std::string, Counts> counts;
  for (const TermSequence& doc : docs) {
    std::set<std::string_view> seen;
    for (const std::string& term : doc) {
      Counts& c = counts[term];
      ++c.tokens;
      if (seen.insert(term).second) ++c.docs;
    }
  }

  const double n = static_cast<double>(docs.size());
  std::vector<std::pair<std::string, Counts>> survivors;
  for (auto& [term, c] : counts) {
    if (static_cast<double>(c.docs) / n >= options.max_doc_share) continue;
    survivors.emplace_back(term, c);
  }

  if (options.drop_top_k > 0) {
    std::vector<size_t> order(survivors.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    const size_t drop = std::min<size_t>(options.drop_top_k, order.size());
    std::partial_sort(order.begin(), order.begin() + drop, order.end(),
                      [&](size_t a, size_t b) {
                        if (survivors[a].second.tokens != survivors[b].second.tokens) {
                          return survivors[a].second.tokens > survivors[b].second.tokens;
                        }
                        return survivors[a].first < survivors[b].first;
                      });
    std::vector<bool> dropped(survivors.size(), false);
    for (size_t i = 0; i < drop; ++i) dropped[order[i]] = true;
    std::vector<std::pair<std::string, Counts>> kept;
    for (size_t i = 0; i < survivors.size(); ++i) {
      if (!dropped[i]) kept.push_back(std::move(survivors[i]));
    }
    survivors = std::move(kept);
  }

  if (survivors.empty()) {
    return absl::FailedPreconditionError("empty vocabulary");
  }
  std::vector<std::string> terms;
  std::vector<int64_t> doc_frequency;
  std::vector<int64_t> total_frequency;
  for (auto& [term, c] : survivors) {
    terms.push_back(std::move(term));
    doc_frequency.push_back(c.docs);
    total_frequency.push_back(c.tokens);
  }
  return Vocabulary(std::move(terms), std::move(doc_frequency),
                    std::move(total_frequency));
}

int64_t BowCorpus::num_tokens() const {
  int64_t total = 0;
  for (const auto& doc : docs) total += static_cast<int64_t>(doc.size());
  return total;
}

BowCorpus ToBow(const std::vector<TermSequence>& docs, const Vocabulary& vocab) {
  BowCorpus bow;
  bow.vocab_size = vocab.size();
  bow.docs.reserve(docs.size());
  for (const TermSequence& doc : docs) {
    std::vector<int> indices;
    indices.reserve(doc.size());
    for (const std::string& term : doc) {
      if (auto index = vocab.IndexOf(term)) indices.push_back(*index);
    }
    bow.docs.push_back(std::move(indices));
  }
  return bow;
}

}  // namespace mapcompare::corpus
