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
#ifndef MAPCOMPARE_CLUSTER_CITATION_GRAPH_H_
#define MAPCOMPARE_CLUSTER_CITATION_GRAPH_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mapcompare/cluster/weighted_graph.h"
#include "mapcompare/corpus/document.h"

namespace mapcompare::cluster {

// Undirected, unweighted direct-citation network over corpus documents.
// Node i is the i-th document. Edges are stored once as (i, j) with i < j,
// sorted.
class CitationGraph {
 public:
  CitationGraph() = default;

  int num_nodes() const { return static_cast<int>(ids_.size()); }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> neighbors(int node) const;

  // Number of distinct corpus documents citing `node`.
  int citations_received(int node) const { return citations_received_[node]; }

  // Unit-size nodes, unit-weight edges.
  WeightedGraph ToWeightedGraph() const;

  friend CitationGraph BuildCitationGraph(std::span<const corpus::Document> docs);

 private:
  std::vector<std::string> ids_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_;
  std::vector<int> adjacency_;
  std::vector<int> citations_received_;
};

// References to ids outside the corpus are dropped, direction is discarded
// and reciprocal or repeated citations collapse into one edge.
CitationGraph BuildCitationGraph(std::span<const corpus::Document> docs);

}  // namespace mapcompare::cluster

#endif  // MAPCOMPARE_CLUSTER_CITATION_GRAPH_H_
