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
#ifndef MAPCOMPARE_CLUSTER_WEIGHTED_GRAPH_H_
#define MAPCOMPARE_CLUSTER_WEIGHTED_GRAPH_H_

#include <span>
#include <vector>

namespace mapcompare::cluster {

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

// Undirected weighted graph in CSR form, with a size per node and a self
// weight per node. After aggregation a node stands for a set of original
// nodes: its size is their total size and its self weight the weight of the
// edges inside the set.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Parallel edges are summed; self loops go to the self weight. Empty
  // `node_sizes` means every node has size 1.
  static WeightedGraph FromEdges(int num_nodes, std::span<const WeightedEdge> edges,
                                 std::vector<double> node_sizes = {});

  int num_nodes() const { return static_cast<int>(node_size_.size()); }
  double node_size(int node) const { return node_size_[node]; }
  double self_weight(int node) const { return self_weight_[node]; }
  double total_size() const;

  std::span<const int> neighbors(int node) const {
    return {neighbor_.data() + offset_[node],
            static_cast<size_t>(offset_[node + 1] - offset_[node])};
  }
  std::span<const double> weights(int node) const {
    return {weight_.data() + offset_[node],
            static_cast<size_t>(offset_[node + 1] - offset_[node])};
  }

  // Collapses each community of `membership` (ids 0..k-1) into one node.
  WeightedGraph Aggregate(std::span<const int> membership) const;

 private:
  std::vector<int> offset_;
  std::vector<int> neighbor_;
  std::vector<double> weight_;
  std::vector<double> node_size_;
  std::vector<double> self_weight_;
};

// Constant Potts Model quality:
//   sum over communities c of  E_c - resolution * n_c (n_c - 1) / 2
// where E_c is the edge weight inside c (self weights included) and n_c the
// total node size. On a unit graph this is sum_{i<j} [x_i = x_j](a_ij - resolution).
double CpmQuality(const WeightedGraph& graph, std::span<const int> membership,
                  double resolution);

// Relabels communities to 0..k-1 ordered by decreasing total node size, ties
// by smallest member node. Returns k.
int CanonicalizeMembership(const WeightedGraph& graph, std::vector<int>& membership);

// Splits every community into its connected components. Returns true if any
// community was split.
bool SplitDisconnected(const WeightedGraph& graph, std::vector<int>& membership);

bool AllCommunitiesConnected(const WeightedGraph& graph,
                             std::span<const int> membership);

}  // namespace mapcompare::cluster

#endif  // MAPCOMPARE_CLUSTER_WEIGHTED_GRAPH_H_
