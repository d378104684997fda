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
#ifndef MAPCOMPARE_CLUSTER_AREAS_H_
#define MAPCOMPARE_CLUSTER_AREAS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/cluster/citation_graph.h"
#include "mapcompare/cluster/weighted_graph.h"
#include "mapcompare/corpus/document.h"

namespace mapcompare::cluster {

struct Area {
  int cluster = 0;
  int64_t total_count = 0;
  int64_t field_count = 0;
  double share = 0;  // field_count / total_count
  bool selected = false;
};

struct AreaSelection {
  // Indexed by cluster id.
  std::vector<Area> areas;
  double min_share = 0.10;
  int64_t field_docs = 0;
  int64_t covered_field_docs = 0;

  // Share of in-field documents that fall in selected clusters (0 if the
  // corpus has none).
  double coverage() const {
    return field_docs == 0 ? 0.0
                           : static_cast<double>(covered_field_docs) / field_docs;
  }
  std::vector<int> SelectedClusters() const;
};

// Selects clusters whose share of in-field documents is at least `min_share`.
AreaSelection SelectAreas(std::span<const int> assignment,
                          std::span<const corpus::Document> docs,
                          double min_share = 0.10);

struct GroupOptions {
  double resolution = 0.9;
  double min_size = 10;
  uint64_t seed = 0;
  int random_starts = 10;
};

struct AreaGrouping {
  // Selected clusters, ascending, and the category of each.
  std::vector<int> clusters;
  std::vector<int> category;
  int num_categories = 0;
  std::vector<bool> residual;  // Per category.
  // Area-area network after association-strength normalization.
  WeightedGraph network;
};

// Area-area network over the selected clusters. The raw weight w_ij counts
// citation links between areas i and j; it is normalized by association
// strength s_ij = 2m * w_ij / (k_i * k_j), where k_i is the total link weight
// of area i and m the total link weight of the network, so a pair linked as
// often as chance predicts gets weight 1.
WeightedGraph AreaNetwork(std::span<const int> selected_clusters,
                          std::span<const int> assignment,
                          const CitationGraph& graph);

// Groups selected areas into categories by clustering the normalized area
// network with Leiden/CPM. Errors if nothing is selected.
absl::StatusOr<AreaGrouping> GroupAreas(const AreaSelection& selection,
                                        std::span<const int> assignment,
                                        const CitationGraph& graph,
                                        const GroupOptions& options = {});

}  // namespace mapcompare::cluster

#endif  // MAPCOMPARE_CLUSTER_AREAS_H_
