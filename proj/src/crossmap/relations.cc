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
#include "mapcompare/crossmap/relations.h"

#include <algorithm>

#include "absl/status/status.h"
#include "mapcompare/strings.h"

namespace mapcompare::crossmap {

std::string_view RelationTypeName(RelationType type) {
  switch (type) {
    case RelationType::kOneToOne:
      return "one-to-one";
    case RelationType::kOneToMany:
      return "one-to-many";
    case RelationType::kManyToMany:
      return "many-to-many";
    case RelationType::kUnique:
      return "unique";
  }
  return "unknown";
}

RelationGraph Relate(const CrossMap& cm, double tau_ct, double tau_tc) {
  RelationGraph graph;
  graph.num_topics = cm.num_topics();
  graph.num_clusters = cm.num_clusters();
  graph.tau_ct = tau_ct;
  graph.tau_tc = tau_tc;
  for (int c = 0; c < graph.num_clusters; ++c) {
    for (int t = 0; t < graph.num_topics; ++t) {
      RelationEdge edge{c, t, cm.p_ct(c, t), cm.p_tc(t, c), false, false};
      edge.ct_fired = edge.p_ct >= tau_ct;
      edge.tc_fired = edge.p_tc >= tau_tc;
      if (edge.ct_fired || edge.tc_fired) graph.edges.push_back(edge);
    }
  }
  graph.components = Classify(graph);
  return graph;
}

std::vector<RelationComponent> Classify(const RelationGraph& graph) {
  // Nodes 0..T-1 are topics, T..T+C-1 clusters.
  const int t_count = graph.num_topics;
  const int n = t_count + graph.num_clusters;
  std::vector<std::vector<int>> adjacent(n);
  for (const RelationEdge& e : graph.edges) {
    adjacent[e.topic].push_back(t_count + e.cluster);
    adjacent[t_count + e.cluster].push_back(e.topic);
  }

  std::vector<RelationComponent> components;
  std::vector<bool> visited(n, false);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> nodes;
    visited[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      nodes.push_back(u);
      for (int v : adjacent[u]) {
        if (!visited[v]) {
          visited[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());

    RelationComponent component;
    int64_t edge_ends = 0;
    for (int u : nodes) {
      edge_ends += static_cast<int64_t>(adjacent[u].size());
      if (u < t_count) {
        component.topics.push_back(u);
      } else {
        component.clusters.push_back(u - t_count);
      }
    }
    const int64_t num_edges = edge_ends / 2;
    const size_t topics = component.topics.size();
    const size_t clusters = component.clusters.size();

    if (nodes.size() == 1) {
      component.type = RelationType::kUnique;
    } else if (topics == 1 && clusters == 1 && num_edges == 1) {
      component.type = RelationType::kOneToOne;
    } else {
      // A single hub on one side whose partners all have degree 1.
      auto star = [&](const std::vector<int>& hubs, const std::vector<int>& leaves,
                      int leaf_offset) {
        if (hubs.size() != 1 || leaves.size() < 2) return false;
        return std::all_of(leaves.begin(), leaves.end(), [&](int leaf) {
          return adjacent[leaf + leaf_offset].size() == 1;
        });
      };
      const bool one_to_many = star(component.topics, component.clusters, t_count) ||
                               star(component.clusters, component.topics, 0);
      component.type =
          one_to_many ? RelationType::kOneToMany : RelationType::kManyToMany;
    }
    components.push_back(std::move(component));
  }
  return components;
}

Census TakeCensus(std::span<const RelationComponent> components) {
  Census census;
  for (const RelationComponent& c : components) {
    switch (c.type) {
      case RelationType::kOneToOne:
        ++census.one_to_one;
        break;
      case RelationType::kOneToMany:
        ++census.one_to_many;
        break;
      case RelationType::kManyToMany:
        ++census.many_to_many;
        break;
      case RelationType::kUnique:
        if (c.topics.empty()) {
          ++census.unique_clusters;
        } else {
          ++census.unique_topics;
        }
        break;
    }
  }
  return census;
}

std::vector<double> DefaultSweepGrid() {
  std::vector<double> grid;
  for (int i = 10; i >= 1; --i) grid.push_back(i / 20.0);
  return grid;
}

absl::StatusOr<std::vector<SweepStep>> Sweep(const CrossMap& cm, SweepSide side,
                                             std::span<const double> thresholds) {
  for (size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0 && thresholds[i] <= 1)) {
      return absl::InvalidArgumentError(
          StrCat("sweep threshold ", thresholds[i], " outside (0, 1]"));
    }
    if (i > 0 && !(thresholds[i] < thresholds[i - 1])) {
      return absl::InvalidArgumentError("sweep thresholds must strictly descend");
    }
  }
  // Any value above 1 disables the other side.
  constexpr double kOff = 2.0;
  std::vector<SweepStep> steps;
  for (double tau : thresholds) {
    SweepStep step;
    step.tau = tau;
    step.graph = side == SweepSide::kClusterToTopic ? Relate(cm, tau, kOff)
                                                    : Relate(cm, kOff, tau);
    step.census = TakeCensus(step.graph.components);
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace mapcompare::crossmap
