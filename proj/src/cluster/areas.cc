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
#include "mapcompare/cluster/areas.h"

#include <algorithm>
#include <map>

#include "absl/status/status.h"
#include "mapcompare/cluster/leiden.h"

namespace mapcompare::cluster {

std::vector<int> AreaSelection::SelectedClusters() const {
  std::vector<int> selected;
  for (const Area& area : areas) {
    if (area.selected) selected.push_back(area.cluster);
  }
  return selected;
}

AreaSelection SelectAreas(std::span<const int> assignment,
                          std::span<const corpus::Document> docs,
                          double min_share) {
  AreaSelection selection;
  selection.min_share = min_share;
  int k = 0;
  for (int c : assignment) k = std::max(k, c + 1);
  selection.areas.resize(k);
  for (int c = 0; c < k; ++c) selection.areas[c].cluster = c;
  for (size_t i = 0; i < assignment.size(); ++i) {
    Area& area = selection.areas[assignment[i]];
    ++area.total_count;
    if (docs[i].in_field) {
      ++area.field_count;
      ++selection.field_docs;
    }
  }
  for (Area& area : selection.areas) {
    area.share = area.total_count == 0
                     ? 0.0
                     : static_cast<double>(area.field_count) / area.total_count;
    area.selected = area.total_count > 0 && area.share >= min_share;
    if (area.selected) selection.covered_field_docs += area.field_count;
  }
  return selection;
}

WeightedGraph AreaNetwork(std::span<const int> selected_clusters,
                          std::span<const int> assignment,
                          const CitationGraph& graph) {
  std::map<int, int> node_of;
  for (int c : selected_clusters) node_of.emplace(c, static_cast<int>(node_of.size()));
  const int n = static_cast<int>(node_of.size());

  std::map<std::pair<int, int>, double> raw;
  for (auto [u, v] : graph.edges()) {
    auto a = node_of.find(assignment[u]);
    auto b = node_of.find(assignment[v]);
    if (a == node_of.end() || b == node_of.end() || a->second == b->second) continue;
    raw[{std::min(a->second, b->second), std::max(a->second, b->second)}] += 1.0;
  }
  std::vector<double> strength(n, 0.0);
  double total = 0;
  for (const auto& [pair, w] : raw) {
    strength[pair.first] += w;
    strength[pair.second] += w;
    total += w;
  }
  std::vector<WeightedEdge> edges;
  for (const auto& [pair, w] : raw) {
    edges.push_back({pair.first, pair.second,
                     2 * total * w / (strength[pair.first] * strength[pair.second])});
  }
  return WeightedGraph::FromEdges(n, edges);
}

absl::StatusOr<AreaGrouping> GroupAreas(const AreaSelection& selection,
                                        std::span<const int> assignment,
                                        const CitationGraph& graph,
                                        const GroupOptions& options) {
  AreaGrouping grouping;
  grouping.clusters = selection.SelectedClusters();
  if (grouping.clusters.empty()) {
    return absl::FailedPreconditionError("no selected areas to group");
  }
  grouping.network = AreaNetwork(grouping.clusters, assignment, graph);

  LeidenOptions leiden;
  leiden.resolution = options.resolution;
  leiden.min_cluster_size = options.min_size;
  leiden.seed = options.seed;
  leiden.random_starts = options.random_starts;
  absl::StatusOr<Partition> partition = Leiden(grouping.network, leiden);
  if (!partition.ok()) return partition.status();
  grouping.category = partition->membership;
  grouping.num_categories = partition->num_clusters;
  grouping.residual = partition->residual;
  return grouping;
}

}  // namespace mapcompare::cluster
