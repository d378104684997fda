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
#ifndef MAPCOMPARE_INTERPRET_DOSSIER_H_
#define MAPCOMPARE_INTERPRET_DOSSIER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "mapcompare/cluster/citation_graph.h"
#include "mapcompare/corpus/term_extractor.h"
#include "mapcompare/corpus/thesaurus.h"
#include "mapcompare/corpus/vocabulary.h"
#include "mapcompare/topic/lda.h"

namespace mapcompare::interpret {

// Ranked lists are sorted by score, descending, ties by key ascending.
struct RankedItem {
  std::string key;
  double score = 0;
  // Underlying quantity when it differs from the score (phi_tw for relevance
  // ranked terms), otherwise equal to score.
  double value = 0;
};

struct Rollup {
  // Root-to-term label paths, in term order, duplicates removed.
  std::vector<std::vector<std::string>> paths;
  // Terms with no thesaurus node.
  std::vector<std::string> unmatched;
};

struct LabelDossier {
  std::string entity;
  std::vector<RankedItem> top_terms;
  std::vector<RankedItem> top_docs;
  Rollup rollup;
  std::optional<std::string> human_label;
};

// Corpus marginal p_w: token count of w over all tokens.
std::vector<double> TermMarginal(const corpus::BowCorpus& bow);

// Top terms of topic t by relevance
//   lambda * log(phi_tw) + (1 - lambda) * log(phi_tw / p_w).
// lambda = 1 ranks by phi_tw alone. Terms with p_w = 0 are skipped when
// lambda < 1.
absl::StatusOr<std::vector<RankedItem>> TopicTopTerms(
    const topic::TopicModel& model, int topic, std::span<const std::string> terms,
    std::span<const double> marginal, int n = 40, double lambda = 1.0);

// Documents with the highest theta_dt.
absl::StatusOr<std::vector<RankedItem>> TopicTopDocs(
    const topic::TopicModel& model, int topic, std::span<const std::string> doc_ids,
    int n = 20);

// Cluster members with the most citations from within the corpus.
std::vector<RankedItem> ClusterTopDocs(std::span<const int> members,
                                       const cluster::CitationGraph& graph,
                                       int n = 10);

// Most frequent terms (absolute token counts) over the cluster's documents.
std::vector<RankedItem> ClusterTopTerms(std::span<const int> members,
                                        const corpus::BowCorpus& bow,
                                        std::span<const std::string> terms,
                                        int n = 10);

// Every root-to-node label path for each term found in the thesaurus.
// Labels are compared in normalized form.
Rollup RollupTerms(std::span<const std::string> terms,
                   const corpus::Thesaurus& thesaurus,
                   const corpus::TextNormalizer& normalizer);

// Labels joined root first by U+2014.
std::string JoinPath(std::span<const std::string> path);

nlohmann::json RankedToJson(std::span<const RankedItem> items);
nlohmann::json DossierToJson(const LabelDossier& dossier);

}  // namespace mapcompare::interpret

#endif  // MAPCOMPARE_INTERPRET_DOSSIER_H_
