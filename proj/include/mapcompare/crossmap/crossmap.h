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
#ifndef MAPCOMPARE_CROSSMAP_CROSSMAP_H_
#define MAPCOMPARE_CROSSMAP_CROSSMAP_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/matrix.h"

namespace mapcompare::crossmap {

// Cluster-to-topic and topic-to-cluster probabilities.
//
//   P_ct = sum_i Q_it R_ic / sum_i R_ic    (topic mass of cluster c's documents)
//   P_tc = sum_i Q_it R_ic / sum_i Q_it    (share of topic t's mass inside c)
//
// P_tc is normalized by the total mass of topic t. Documents outside every
// selected cluster carry topic mass into no cluster, so a row of P_tc sums
// to 1 minus the topic's unmapped mass.
struct CrossMap {
  Matrix p_ct;  // C x T
  Matrix p_tc;  // T x C
  // External id of each cluster row/column.
  std::vector<int> cluster_ids;
  int num_docs = 0;
  std::vector<double> cluster_docs;  // sum_i R_ic
  std::vector<double> topic_mass;    // sum_i Q_it
  std::vector<double> unmapped_mass; // per topic, 1 - sum_c P_tc (0 if no mass)
  std::vector<bool> degenerate;      // clusters without documents

  int num_clusters() const { return static_cast<int>(cluster_ids.size()); }
  int num_topics() const { return p_tc.rows(); }
};

// Maps a full cluster assignment onto row indices of `selected_clusters`,
// -1 for documents in unselected clusters.
std::vector<int> RestrictToClusters(std::span<const int> assignment,
                                    std::span<const int> selected_clusters);

// `q` is N x T. `doc_cluster` gives each document's row index into
// `cluster_ids`, or -1. Errors on a length mismatch or out-of-range index.
absl::StatusOr<CrossMap> Compute(const Matrix& q, std::span<const int> doc_cluster,
                                 std::vector<int> cluster_ids);

}  // namespace mapcompare::crossmap

#endif  // MAPCOMPARE_CROSSMAP_CROSSMAP_H_
