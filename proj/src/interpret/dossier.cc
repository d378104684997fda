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
#include "mapcompare/interpret/dossier.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "absl/status/status.h"
#include "mapcompare/strings.h"

namespace mapcompare::interpret {
namespace {

std::vector<RankedItem> TopN(std::vector<RankedItem> items, int n) {
  auto better = [](const RankedItem& a, const RankedItem& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.key < b.key;
  };
  const size_t keep = std::min<size_t>(std::max(n, 0), items.size());
  std::partial_sort(items.begin(), items.begin() + keep, items.end(), better);
  items.resize(keep);
  return items;
}

}  // namespace

std::vector<double> TermMarginal(const corpus::BowCorpus& bow) {
  std::vector<double> marginal(bow.vocab_size, 0.0);
  const double total = static_cast<double>(bow.num_tokens());
  if (total == 0) return marginal;
  for (const auto& doc : bow.docs) {
    for (int w : doc) marginal[w] += 1;
  }
  for (double& p : marginal) p /= total;
  return marginal;
}

absl::StatusOr<std::vector<RankedItem>> TopicTopTerms(
    const topic::TopicModel& model, int topic, std::span<const std::string> terms,
    std::span<const double> marginal, int n, double lambda) {
  if (!(lambda >= 0 && lambda <= 1)) {
    return absl::InvalidArgumentError("lambda must be in [0, 1]");
  }
  auto phi = model.TopicTerms(topic);
  if (!phi.ok()) return phi.status();
  if (terms.size() != phi->size() || (lambda < 1 && marginal.size() != phi->size())) {
    return absl::InvalidArgumentError("term list does not match the model vocabulary");
  }
  std::vector<RankedItem> items;
  items.reserve(terms.size());
  for (size_t w = 0; w < terms.size(); ++w) {
    const double p = (*phi)[w];
    double score = std::log(p);
    if (lambda < 1) {
      if (marginal[w] <= 0) continue;
      score = lambda * std::log(p) + (1 - lambda) * std::log(p / marginal[w]);
    }
    items.push_back({terms[w], score, p});
  }
  return TopN(std::move(items), n);
}

absl::StatusOr<std::vector<RankedItem>> TopicTopDocs(
    const topic::TopicModel& model, int topic, std::span<const std::string> doc_ids,
    int n) {
  if (topic < 0 || topic >= model.num_topics()) {
    return absl::OutOfRangeError(StrCat("topic ", topic, " out of range"));
  }
  if (doc_ids.size() != static_cast<size_t>(model.num_docs())) {
    return absl::InvalidArgumentError("doc id list does not match the model");
  }
  std::vector<RankedItem> items;
  items.reserve(doc_ids.size());
  for (size_t d = 0; d < doc_ids.size(); ++d) {
    const double theta = model.theta()(static_cast<int>(d), topic);
    items.push_back({doc_ids[d], theta, theta});
  }
  return TopN(std::move(items), n);
}

std::vector<RankedItem> ClusterTopDocs(std::span<const int> members,
                                       const cluster::CitationGraph& graph, int n) {
  std::vector<RankedItem> items;
  items.reserve(members.size());
  for (int doc : members) {
    const double citations = graph.citations_received(doc);
    items.push_back({graph.ids()[doc], citations, citations});
  }
  return TopN(std::move(items), n);
}

std::vector<RankedItem> ClusterTopTerms(std::span<const int> members,
                                        const corpus::BowCorpus& bow,
                                        std::span<const std::string> terms, int n) {
  std::unordered_map<int, double> counts;
  for (int doc : members) {
    for (int w : bow.docs[doc]) counts[w] += 1;
  }
  std::vector<RankedItem> items;
  items.reserve(counts.size());
  for (auto [w, count] : counts) items.push_back({terms[w], count, count});
  return TopN(std::move(items), n);
}

Rollup RollupTerms(std::span<const std::string> terms,
                   const corpus::Thesaurus& thesaurus,
                   const corpus::TextNormalizer& normalizer) {
  std::unordered_map<std::string, std::vector<int>> nodes_by_key;
  for (int node = 0; node < thesaurus.size(); ++node) {
    nodes_by_key[normalizer.Key(thesaurus.label(node))].push_back(node);
  }
  Rollup rollup;
  std::set<std::vector<std::string>> seen;
  for (const std::string& term : terms) {
    auto it = nodes_by_key.find(normalizer.Key(term));
    if (it == nodes_by_key.end()) {
      rollup.unmatched.push_back(term);
      continue;
    }
    for (int node : it->second) {
      for (std::vector<std::string>& path : thesaurus.PathsFromRoot(node)) {
        if (seen.insert(path).second) rollup.paths.push_back(std::move(path));
      }
    }
  }
  return rollup;
}

std::string JoinPath(std::span<const std::string> path) {
  return StrJoin(path, "—");
}

nlohmann::json RankedToJson(std::span<const RankedItem> items) {
  nlohmann::json out = nlohmann::json::array();
  for (const RankedItem& item : items) {
    out.push_back({{"key", item.key}, {"score", item.score}, {"value", item.value}});
  }
  return out;
}

nlohmann::json DossierToJson(const LabelDossier& dossier) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& path : dossier.rollup.paths) {
    paths.push_back({{"labels", path}, {"text", JoinPath(path)}});
  }
  nlohmann::json out = {
      {"entity", dossier.entity},
      {"top_terms", RankedToJson(dossier.top_terms)},
      {"top_docs", RankedToJson(dossier.top_docs)},
      {"rollup_paths", paths},
      {"unmatched_terms", dossier.rollup.unmatched},
  };
  out["human_label"] = dossier.human_label.has_value()
                           ? nlohmann::json(*dossier.human_label)
                           : nlohmann::json(nullptr);
  return out;
}

}  // namespace mapcompare::interpret
