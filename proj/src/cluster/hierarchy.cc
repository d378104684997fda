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
#include "mapcompare/cluster/hierarchy.h"

#include <utility>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "mapcompare/cluster/leiden.h"
#include "mapcompare/rng.h"

namespace mapcompare::cluster {
namespace {

std::string LevelName(size_t index, size_t count) {
  if (count == 3) {
    static constexpr const char* kNames[] = {"macro", "meso", "micro"};
    return kNames[index];
  }
  if (count == 1) return "micro";
  return StrCat("level", index);
}

}  // namespace

std::vector<int> ClusterLevel::ClusterSizes() const {
  std::vector<int> sizes(num_clusters, 0);
  for (int c : assignment) ++sizes[c];
  return sizes;
}

absl::StatusOr<ClusterSolution> ClusterGraph(const WeightedGraph& graph,
                                             double resolution,
                                             const ClusterOptions& options) {
  const double resolutions[] = {resolution};
  return BuildHierarchy(graph, resolutions, options);
}

absl::StatusOr<ClusterSolution> BuildHierarchy(const WeightedGraph& graph,
                                               std::span<const double> resolutions,
                                               const ClusterOptions& options) {
  if (resolutions.empty()) {
    return absl::InvalidArgumentError("at least one resolution is required");
  }
  for (size_t i = 1; i < resolutions.size(); ++i) {
    if (!(resolutions[i] > resolutions[i - 1])) {
      return absl::InvalidArgumentError(StrCat(
          "resolutions must be strictly increasing (coarsest first); got ",
          resolutions[i - 1], " then ", resolutions[i]));
    }
  }

  ClusterSolution solution;
  solution.min_cluster_size = options.min_cluster_size;
  solution.levels.resize(resolutions.size());
  SplitMix64 seeds(options.seed);

  // `level_graph` has one node per cluster of the level just built;
  // `doc_to_node` maps documents onto it.
  WeightedGraph level_graph;
  const WeightedGraph* current = &graph;
  std::vector<int> doc_to_node(graph.num_nodes());
  for (int u = 0; u < graph.num_nodes(); ++u) doc_to_node[u] = u;

  for (size_t step = 0; step < resolutions.size(); ++step) {
    const size_t index = resolutions.size() - 1 - step;  // Finest first.
    LeidenOptions leiden;
    leiden.resolution = resolutions[index];
    leiden.min_cluster_size = options.min_cluster_size;
    leiden.seed = seeds();
    leiden.random_starts = options.random_starts;
    absl::StatusOr<Partition> partition = Leiden(*current, leiden);
    if (!partition.ok()) return partition.status();

    ClusterLevel& level = solution.levels[index];
    level.name = LevelName(index, resolutions.size());
    level.resolution = resolutions[index];
    level.num_clusters = partition->num_clusters;
    level.residual = partition->residual;
    level.assignment.resize(graph.num_nodes());
    for (int u = 0; u < graph.num_nodes(); ++u) {
      level.assignment[u] = partition->membership[doc_to_node[u]];
    }
    level.quality = CpmQuality(graph, level.assignment, level.resolution);

    WeightedGraph next = current->Aggregate(partition->membership);
    level_graph = std::move(next);
    current = &level_graph;
    doc_to_node = level.assignment;
  }
  return solution;
}

bool LevelsNest(const ClusterSolution& solution) {
  for (size_t i = 1; i < solution.levels.size(); ++i) {
    const ClusterLevel& fine = solution.levels[i];
    const ClusterLevel& coarse = solution.levels[i - 1];
    std::vector<int> parent(fine.num_clusters, -1);
    for (size_t u = 0; u < fine.assignment.size(); ++u) {
      int& p = parent[fine.assignment[u]];
      if (p == -1) {
        p = coarse.assignment[u];
      } else if (p != coarse.assignment[u]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace mapcompare::cluster
