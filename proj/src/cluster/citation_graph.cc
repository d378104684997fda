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
#include "mapcompare/cluster/citation_graph.h"

#include <algorithm>
#include <unordered_map>

namespace mapcompare::cluster {

std::span<const int> CitationGraph::neighbors(int node) const {
  return {adjacency_.data() + offsets_[node],
          static_cast<size_t>(offsets_[node + 1] - offsets_[node])};
}

WeightedGraph CitationGraph::ToWeightedGraph() const {
  std::vector<WeightedEdge> edges;
  edges.reserve(edges_.size());
  for (auto [u, v] : edges_) edges.push_back({u, v, 1.0});
  return WeightedGraph::FromEdges(num_nodes(), edges);
}

CitationGraph BuildCitationGraph(std::span<const corpus::Document> docs) {
  CitationGraph graph;
  const int n = static_cast<int>(docs.size());
  std::unordered_map<std::string, int> index;
  graph.ids_.reserve(n);
  for (int i = 0; i < n; ++i) {
    graph.ids_.push_back(docs[i].id);
    index.emplace(docs[i].id, i);
  }
  graph.citations_received_.assign(n, 0);
  std::vector<std::pair<int, int>> directed;
  for (int i = 0; i < n; ++i) {
    for (const std::string& ref : docs[i].references) {
      auto it = index.find(ref);
      if (it == index.end() || it->second == i) continue;
      directed.emplace_back(i, it->second);
    }
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
  for (auto [citing, cited] : directed) {
    ++graph.citations_received_[cited];
    graph.edges_.emplace_back(std::min(citing, cited), std::max(citing, cited));
  }
  std::sort(graph.edges_.begin(), graph.edges_.end());
  graph.edges_.erase(std::unique(graph.edges_.begin(), graph.edges_.end()),
                     graph.edges_.end());

  std::vector<int> degree(n, 0);
  for (auto [u, v] : graph.edges_) {
    ++degree[u];
    ++degree[v];
  }
  graph.offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) graph.offsets_[i + 1] = graph.offsets_[i] + degree[i];
  graph.adjacency_.resize(graph.offsets_[n]);
  std::vector<int> fill(graph.offsets_.begin(), graph.offsets_.end() - 1);
  for (auto [u, v] : graph.edges_) {
    graph.adjacency_[fill[u]++] = v;
    graph.adjacency_[fill[v]++] = u;
  }
  return graph;
}

}  // namespace mapcompare::cluster
