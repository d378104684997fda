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
#include "mapcompare/cluster/cluster_io.h"

#include <sstream>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "mapcompare/text_format.h"

namespace mapcompare::cluster {

std::string EncodeAssignment(const ClusterLevel& level,
                             const std::vector<std::string>& doc_ids) {
  std::string out = "doc_id\tcluster\n";
  for (size_t i = 0; i < doc_ids.size(); ++i) {
    StrAppend(&out, doc_ids[i], "\t", level.assignment[i], "\n");
  }
  return out;
}

absl::StatusOr<DecodedAssignment> DecodeAssignment(const std::string& text) {
  DecodedAssignment decoded;
  std::istringstream in(text);
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    if (++line_number == 1 || line.empty()) continue;
    std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() != 2) {
      return absl::DataLossError(
          StrCat("assignment line ", line_number, ": expected 2 fields"));
    }
    auto cluster = ParseInt(fields[1]);
    if (!cluster.ok()) return cluster.status();
    decoded.doc_ids.emplace_back(fields[0]);
    decoded.assignment.push_back(static_cast<int>(*cluster));
  }
  return decoded;
}

std::string EncodeAreas(const AreaSelection& selection,
                        const AreaGrouping* grouping) {
  std::vector<int> category(selection.areas.size(), -1);
  if (grouping != nullptr) {
    for (size_t i = 0; i < grouping->clusters.size(); ++i) {
      category[grouping->clusters[i]] = grouping->category[i];
    }
  }
  std::string out = "cluster\tsize\tfield_count\tshare\tselected\tcategory\n";
  for (const Area& area : selection.areas) {
    StrAppend(&out, area.cluster, "\t", area.total_count, "\t",
                    area.field_count, "\t", FormatDouble(area.share), "\t",
                    area.selected ? 1 : 0, "\t", category[area.cluster], "\n");
  }
  return out;
}

absl::StatusOr<DecodedAreas> DecodeAreas(const std::string& text) {
  DecodedAreas decoded;
  std::istringstream in(text);
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    if (++line_number == 1 || line.empty()) continue;
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 6) {
      return absl::DataLossError(
          StrCat("areas line ", line_number, ": expected 6 fields"));
    }
    auto cluster = ParseInt(f[0]);
    auto size = ParseInt(f[1]);
    auto field = ParseInt(f[2]);
    auto share = ParseDouble(f[3]);
    auto category = ParseInt(f[5]);
    if (!cluster.ok() || !size.ok() || !field.ok() || !share.ok() ||
        !category.ok() || (f[4] != "0" && f[4] != "1")) {
      return absl::DataLossError(
          StrCat("areas line ", line_number, ": malformed field"));
    }
    Area area;
    area.cluster = static_cast<int>(*cluster);
    area.total_count = *size;
    area.field_count = *field;
    area.share = *share;
    area.selected = f[4] == "1";
    decoded.selection.field_docs += area.field_count;
    if (area.selected) decoded.selection.covered_field_docs += area.field_count;
    decoded.selection.areas.push_back(area);
    decoded.category.push_back(static_cast<int>(*category));
  }
  return decoded;
}

}  // namespace mapcompare::cluster
