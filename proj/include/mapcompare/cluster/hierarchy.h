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
#ifndef MAPCOMPARE_CLUSTER_HIERARCHY_H_
#define MAPCOMPARE_CLUSTER_HIERARCHY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/cluster/weighted_graph.h"

namespace mapcompare::cluster {

struct ClusterLevel {
  std::string name;
  double resolution = 0;
  // Cluster of every document; clusters are numbered largest first.
  std::vector<int> assignment;
  int num_clusters = 0;
  std::vector<bool> residual;
  // CPM quality of `assignment` on the document graph at `resolution`.
  double quality = 0;

  // R_ic as a predicate.
  bool Contains(int cluster, int doc) const { return assignment[doc] == cluster; }
  std::vector<int> ClusterSizes() const;
};

// Hard document clustering, one or more nested levels, coarsest first.
struct ClusterSolution {
  std::vector<ClusterLevel> levels;
  double min_cluster_size = 1;

  const ClusterLevel& finest() const { return levels.back(); }
};

struct ClusterOptions {
  double min_cluster_size = 1;
  uint64_t seed = 0;
  int random_starts = 1;
};

// Single-level Leiden clustering.
absl::StatusOr<ClusterSolution> ClusterGraph(const WeightedGraph& graph,
                                             double resolution,
                                             const ClusterOptions& options);

// Resolutions are given coarsest first and must be strictly increasing. The
// finest level clusters the document graph; every coarser level clusters the
// graph of the level below it, so levels nest by construction. Three levels
// are named macro, meso and micro.
absl::StatusOr<ClusterSolution> BuildHierarchy(const WeightedGraph& graph,
                                               std::span<const double> resolutions,
                                               const ClusterOptions& options);

// True if every cluster of each level lies inside one cluster of the level
// above it.
bool LevelsNest(const ClusterSolution& solution);

}  // namespace mapcompare::cluster

#endif  // MAPCOMPARE_CLUSTER_HIERARCHY_H_
