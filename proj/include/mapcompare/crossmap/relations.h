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
#ifndef MAPCOMPARE_CROSSMAP_RELATIONS_H_
#define MAPCOMPARE_CROSSMAP_RELATIONS_H_

#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/crossmap/crossmap.h"

namespace mapcompare::crossmap {

enum class RelationType { kOneToOne, kOneToMany, kManyToMany, kUnique };

std::string_view RelationTypeName(RelationType type);

struct RelationEdge {
  int cluster = 0;  // Row index into CrossMap::cluster_ids.
  int topic = 0;
  double p_ct = 0;
  double p_tc = 0;
  bool ct_fired = false;  // p_ct >= tau_ct
  bool tc_fired = false;  // p_tc >= tau_tc
};

struct RelationComponent {
  std::vector<int> topics;
  std::vector<int> clusters;
  RelationType type = RelationType::kUnique;
};

// Bipartite topic-cluster graph. A pair is related when P_ct >= tau_ct or
// P_tc >= tau_tc; a threshold above 1 switches that side off.
struct RelationGraph {
  int num_topics = 0;
  int num_clusters = 0;
  double tau_ct = 0;
  double tau_tc = 0;
  std::vector<RelationEdge> edges;  // Sorted by (cluster, topic).
  std::vector<RelationComponent> components;
};

struct Census {
  int one_to_one = 0;
  int one_to_many = 0;
  int many_to_many = 0;
  int unique_topics = 0;
  int unique_clusters = 0;

  int unique() const { return unique_topics + unique_clusters; }
  friend bool operator==(const Census&, const Census&) = default;
};

RelationGraph Relate(const CrossMap& cm, double tau_ct, double tau_tc);

// Labels each connected component by shape:
//   a lone node                                   -> unique
//   one topic, one cluster, one edge              -> one-to-one
//   one node linked to >= 2 nodes of degree 1     -> one-to-many
//   anything else                                 -> many-to-many
// Components are ordered by their smallest topic, then smallest cluster.
std::vector<RelationComponent> Classify(const RelationGraph& graph);

Census TakeCensus(std::span<const RelationComponent> components);

enum class SweepSide { kClusterToTopic, kTopicToCluster };

struct SweepStep {
  double tau = 0;
  RelationGraph graph;
  Census census;
};

// 0.50, 0.45, ..., 0.05.
std::vector<double> DefaultSweepGrid();

// One single-sided relation graph per threshold. Thresholds must be strictly
// descending within (0, 1].
absl::StatusOr<std::vector<SweepStep>> Sweep(const CrossMap& cm, SweepSide side,
                                             std::span<const double> thresholds);

}  // namespace mapcompare::crossmap

#endif  // MAPCOMPARE_CROSSMAP_RELATIONS_H_
