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
#include "mapcompare/crossmap/crossmap.h"

#include <unordered_map>

#include "absl/status/status.h"
#include "mapcompare/strings.h"

namespace mapcompare::crossmap {

std::vector<int> RestrictToClusters(std::span<const int> assignment,
                                    std::span<const int> selected_clusters) {
  std::unordered_map<int, int> row;
  for (size_t i = 0; i < selected_clusters.size(); ++i) {
    row.emplace(selected_clusters[i], static_cast<int>(i));
  }
  std::vector<int> doc_cluster(assignment.size(), -1);
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (auto it = row.find(assignment[i]); it != row.end()) doc_cluster[i] = it->second;
  }
  return doc_cluster;
}

absl::StatusOr<CrossMap> Compute(const Matrix& q, std::span<const int> doc_cluster,
                                 std::vector<int> cluster_ids) {
  if (static_cast<size_t>(q.rows()) != doc_cluster.size()) {
    return absl::InvalidArgumentError(
        StrCat("document-topic matrix has ", q.rows(),
                     " rows but the cluster assignment covers ",
                     doc_cluster.size(), " documents"));
  }
  const int n = q.rows();
  const int t_count = q.cols();
  const int c_count = static_cast<int>(cluster_ids.size());
  for (int i = 0; i < n; ++i) {
    if (doc_cluster[i] < -1 || doc_cluster[i] >= c_count) {
      return absl::InvalidArgumentError(
          StrCat("document ", i, " has cluster index ", doc_cluster[i],
                       " outside [0, ", c_count, ")"));
    }
  }

  CrossMap cm;
  cm.cluster_ids = std::move(cluster_ids);
  cm.num_docs = n;
  cm.cluster_docs.assign(c_count, 0.0);
  cm.topic_mass.assign(t_count, 0.0);
  Matrix joint(c_count, t_count);  // sum_i Q_it R_ic
  for (int i = 0; i < n; ++i) {
    std::span<const double> row = q.row(i);
    for (int t = 0; t < t_count; ++t) cm.topic_mass[t] += row[t];
    const int c = doc_cluster[i];
    if (c < 0) continue;
    cm.cluster_docs[c] += 1;
    std::span<double> target = joint.row(c);
    for (int t = 0; t < t_count; ++t) target[t] += row[t];
  }

  cm.p_ct = Matrix(c_count, t_count);
  cm.p_tc = Matrix(t_count, c_count);
  cm.degenerate.assign(c_count, false);
  for (int c = 0; c < c_count; ++c) {
    cm.degenerate[c] = cm.cluster_docs[c] == 0;
    for (int t = 0; t < t_count; ++t) {
      if (!cm.degenerate[c]) cm.p_ct(c, t) = joint(c, t) / cm.cluster_docs[c];
      if (cm.topic_mass[t] > 0) cm.p_tc(t, c) = joint(c, t) / cm.topic_mass[t];
    }
  }
  cm.unmapped_mass.assign(t_count, 0.0);
  for (int t = 0; t < t_count; ++t) {
    if (cm.topic_mass[t] <= 0) continue;
    double mapped = 0;
    for (int c = 0; c < c_count; ++c) mapped += cm.p_tc(t, c);
    cm.unmapped_mass[t] = std::max(0.0, 1.0 - mapped);
  }
  return cm;
}

}  // namespace mapcompare::crossmap
