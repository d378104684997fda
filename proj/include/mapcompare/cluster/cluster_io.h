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
#ifndef MAPCOMPARE_CLUSTER_CLUSTER_IO_H_
#define MAPCOMPARE_CLUSTER_CLUSTER_IO_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/cluster/areas.h"
#include "mapcompare/cluster/hierarchy.h"

namespace mapcompare::cluster {

// "doc_id<TAB>cluster" with a header row.
std::string EncodeAssignment(const ClusterLevel& level,
                             const std::vector<std::string>& doc_ids);

struct DecodedAssignment {
  std::vector<std::string> doc_ids;
  std::vector<int> assignment;
};
absl::StatusOr<DecodedAssignment> DecodeAssignment(const std::string& text);

// "cluster, size, field_count, share, selected, category" with a header row.
// category is -1 for unselected clusters.
std::string EncodeAreas(const AreaSelection& selection,
                        const AreaGrouping* grouping);

struct DecodedAreas {
  AreaSelection selection;
  std::vector<int> category;  // Per cluster id; -1 if unselected.
};
absl::StatusOr<DecodedAreas> DecodeAreas(const std::string& text);

}  // namespace mapcompare::cluster

#endif  // MAPCOMPARE_CLUSTER_CLUSTER_IO_H_
