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
#include "mapcompare/cluster/weighted_graph.h"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace mapcompare::cluster {

WeightedGraph WeightedGraph::FromEdges(int num_nodes,
                                       std::span<const WeightedEdge> edges,
                                       std::vector<double> node_sizes) {
  WeightedGraph graph;
  graph.node_size_ = node_sizes.empty() ? std::vector<double>(num_nodes, 1.0)
                                        : std::move(node_sizes);
  graph.self_weight_.assign(num_nodes, 0.0);

  std::vector<WeightedEdge> sorted;
  sorted.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    if (e.u == e.v) {
      graph.self_weight_[e.u] += e.weight;
    } else {
      sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  std::vector<WeightedEdge> merged;
  for (const WeightedEdge& e : sorted) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  std::vector<int> degree(num_nodes, 0);
  for (const WeightedEdge& e : merged) {
    ++degree[e.u];
    ++degree[e.v];
  }
  graph.offset_.assign(num_nodes + 1, 0);
  for (int i = 0; i < num_nodes; ++i) {
    graph.offset_[i + 1] = graph.offset_[i] + degree[i];
  }
  graph.neighbor_.resize(graph.offset_[num_nodes]);
  graph.weight_.resize(graph.offset_[num_nodes]);
  std::vector<int> fill(graph.offset_.begin(), graph.offset_.end() - 1);
  for (const WeightedEdge& e : merged) {
    graph.neighbor_[fill[e.u]] = e.v;
    graph.weight_[fill[e.u]++] = e.weight;
    graph.neighbor_[fill[e.v]] = e.u;
    graph.weight_[fill[e.v]++] = e.weight;
  }
  return graph;
}

double WeightedGraph::total_size() const {
  return std::accumulate(node_size_.begin(), node_size_.end(), 0.0);
}

WeightedGraph WeightedGraph::Aggregate(std::span<const int> membership) const {
  const int k = membership.empty()
                    ? 0
                    : *std::max_element(membership.begin(), membership.end()) + 1;
  std::vector<double> sizes(k, 0.0);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < num_nodes(); ++u) {
    const int cu = membership[u];
    sizes[cu] += node_size_[u];
    if (self_weight_[u] != 0) edges.push_back({cu, cu, self_weight_[u]});
    auto nbrs = neighbors(u);
    auto w = weights(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] < u) continue;  // Each undirected edge once.
      edges.push_back({cu, membership[nbrs[i]], w[i]});
    }
  }
  return FromEdges(k, edges, std::move(sizes));
}

double CpmQuality(const WeightedGraph& graph, std::span<const int> membership,
                  double resolution) {
  const int k = membership.empty()
                    ? 0
                    : *std::max_element(membership.begin(), membership.end()) + 1;
  std::vector<double> size(k, 0.0);
  double internal = 0;
  for (int u = 0; u < graph.num_nodes(); ++u) {
    size[membership[u]] += graph.node_size(u);
    internal += graph.self_weight(u);
    auto nbrs = graph.neighbors(u);
    auto w = graph.weights(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] > u && membership[nbrs[i]] == membership[u]) internal += w[i];
    }
  }
  double pairs = 0;
  for (double n : size) pairs += n * (n - 1) / 2;
  return internal - resolution * pairs;
}

int CanonicalizeMembership(const WeightedGraph& graph, std::vector<int>& membership) {
  const int n = graph.num_nodes();
  int k = 0;
  for (int c : membership) k = std::max(k, c + 1);
  std::vector<double> size(k, 0.0);
  std::vector<int> first(k, n);
  for (int u = 0; u < n; ++u) {
    size[membership[u]] += graph.node_size(u);
    first[membership[u]] = std::min(first[membership[u]], u);
  }
  std::vector<int> order;
  for (int c = 0; c < k; ++c) {
    if (first[c] < n) order.push_back(c);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (size[a] != size[b]) return size[a] > size[b];
    return first[a] < first[b];
  });
  std::vector<int> relabel(k, -1);
  for (size_t i = 0; i < order.size(); ++i) relabel[order[i]] = static_cast<int>(i);
  for (int& c : membership) c = relabel[c];
  return static_cast<int>(order.size());
}

bool SplitDisconnected(const WeightedGraph& graph, std::vector<int>& membership) {
  const int n = graph.num_nodes();
  std::vector<int> component(n, -1);
  int next = 0;
  bool split = false;
  int k = 0;
  for (int c : membership) k = std::max(k, c + 1);
  std::vector<int> components_per_community(k, 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    const int id = next++;
    if (++components_per_community[membership[start]] > 1) split = true;
    component[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : graph.neighbors(u)) {
        if (component[v] == -1 && membership[v] == membership[u]) {
          component[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  membership = std::move(component);
  return split;
}

bool AllCommunitiesConnected(const WeightedGraph& graph,
                             std::span<const int> membership) {
  std::vector<int> copy(membership.begin(), membership.end());
  return !SplitDisconnected(graph, copy);
}

}  // namespace mapcompare::cluster
