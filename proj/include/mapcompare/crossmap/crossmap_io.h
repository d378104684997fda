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
#ifndef MAPCOMPARE_CROSSMAP_CROSSMAP_IO_H_
#define MAPCOMPARE_CROSSMAP_CROSSMAP_IO_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "mapcompare/crossmap/crossmap.h"
#include "mapcompare/crossmap/relations.h"

namespace mapcompare::crossmap {

// Entity ids shared by every export and the HTTP API.
std::string TopicKey(int topic);
std::string ClusterKey(int cluster_id);

// Dense matrix with a header of column ids and one id-prefixed row per line.
std::string EncodeMatrixTsv(const Matrix& matrix, std::span<const std::string> row_ids,
                            std::span<const std::string> col_ids);

struct CrossMapFiles {
  std::string p_ct_tsv;  // rows C<id>, columns T<t>
  std::string p_tc_tsv;  // rows T<t>, columns C<id>
  std::string meta_json; // cluster ids, masses, degenerate flags
};

CrossMapFiles EncodeCrossMap(const CrossMap& cm);
absl::StatusOr<CrossMap> DecodeCrossMap(const CrossMapFiles& files);

nlohmann::json CensusToJson(const Census& census);
// Nodes, edges with both probabilities and the fired thresholds, components
// with their type, and the census.
nlohmann::json RelationGraphToJson(const RelationGraph& graph, const CrossMap& cm);
nlohmann::json SweepToJson(std::span<const SweepStep> steps, SweepSide side,
                           const CrossMap& cm);

}  // namespace mapcompare::crossmap

#endif  // MAPCOMPARE_CROSSMAP_CROSSMAP_IO_H_
