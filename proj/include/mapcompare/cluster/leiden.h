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
#ifndef MAPCOMPARE_CLUSTER_LEIDEN_H_
#define MAPCOMPARE_CLUSTER_LEIDEN_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/cluster/weighted_graph.h"

namespace mapcompare::cluster {

struct LeidenOptions {
  // CPM resolution, per pair of unit-size nodes. Must be > 0.
  double resolution = 1.0;
  // Communities whose total node size is below this are merged into the
  // adjacent community with the best CPM gain; isolated ones are kept and
  // marked residual.
  double min_cluster_size = 1;
  uint64_t seed = 0;
  // Independent runs from different seeds; the best quality wins.
  int random_starts = 1;
  // Upper bound on passes per run.
  int max_iterations = 200;
  // Consecutive non-improving passes, each started from a perturbed copy of
  // the best partition, before a run stops.
  int perturbations = 50;
  // Temperature of the randomized refinement step.
  double randomness = 0.01;
};

struct Partition {
  // Community of every node, 0..num_clusters-1, largest first.
  std::vector<int> membership;
  int num_clusters = 0;
  // Undersized communities that could not be merged, per community.
  std::vector<bool> residual;
  double quality = 0;
};

// Leiden algorithm (local moving, refinement, aggregation) optimizing CPM.
// Returned communities are connected. Deterministic for a fixed seed.
absl::StatusOr<Partition> Leiden(const WeightedGraph& graph,
                                 const LeidenOptions& options);

// Merges communities below `min_cluster_size` (smallest first) into the
// neighbouring community that maximizes the CPM gain. Exposed for tests.
Partition MergeSmallClusters(const WeightedGraph& graph,
                             std::vector<int> membership, double resolution,
                             double min_cluster_size);

}  // namespace mapcompare::cluster

#endif  // MAPCOMPARE_CLUSTER_LEIDEN_H_
