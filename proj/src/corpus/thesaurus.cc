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
#include "mapcompare/corpus/thesaurus.h"

#include <algorithm>
#include <fstream>
#include <functional>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "mapcompare/text_format.h"

namespace mapcompare::corpus {

absl::StatusOr<Thesaurus> Thesaurus::FromRows(
    const std::vector<ThesaurusRow>& rows) {
  Thesaurus thesaurus;
  std::unordered_map<std::string, int> index;
  for (const ThesaurusRow& row : rows) {
    if (row.node_id.empty()) {
      return absl::InvalidArgumentError("thesaurus row with empty node id");
    }
    auto [it, inserted] =
        index.emplace(row.node_id, static_cast<int>(thesaurus.labels_.size()));
    if (inserted) {
      thesaurus.node_ids_.push_back(row.node_id);
      thesaurus.labels_.push_back(row.label);
      thesaurus.parents_.emplace_back();
    } else if (thesaurus.labels_[it->second] != row.label) {
      return absl::InvalidArgumentError(
          StrCat("thesaurus node '", row.node_id,
                       "' has conflicting labels '",
                       thesaurus.labels_[it->second], "' and '", row.label, "'"));
    }
  }
  for (const ThesaurusRow& row : rows) {
    if (row.parent_id.empty()) continue;
    auto parent = index.find(row.parent_id);
    if (parent == index.end()) {
      return absl::InvalidArgumentError(
          StrCat("thesaurus node '", row.node_id, "' has unknown parent '",
                       row.parent_id, "'"));
    }
    std::vector<int>& parents = thesaurus.parents_[index[row.node_id]];
    if (std::find(parents.begin(), parents.end(), parent->second) ==
        parents.end()) {
      parents.push_back(parent->second);
    }
  }

  // Cycle check by depth-first search over parent links.
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(thesaurus.size(), Mark::kNew);
  std::function<bool(int)> acyclic = [&](int node) {
    if (mark[node] == Mark::kDone) return true;
    if (mark[node] == Mark::kActive) return false;
    mark[node] = Mark::kActive;
    for (int parent : thesaurus.parents_[node]) {
      if (!acyclic(parent)) return false;
    }
    mark[node] = Mark::kDone;
    return true;
  };
  for (int node = 0; node < thesaurus.size(); ++node) {
    if (!acyclic(node)) {
      return absl::InvalidArgumentError(
          StrCat("thesaurus parent relation has a cycle through '",
                       thesaurus.node_ids_[node], "'"));
    }
  }
  return thesaurus;
}

absl::StatusOr<Thesaurus> Thesaurus::Parse(std::istream& input) {
  std::vector<ThesaurusRow> rows;
  std::string line;
  size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() != 3) {
      return absl::InvalidArgumentError(
          StrCat("thesaurus line ", line_number,
                       ": expected 3 tab-separated fields, got ", fields.size()));
    }
    rows.push_back({std::string(fields[0]), std::string(fields[1]),
                    std::string(fields[2])});
  }
  return FromRows(rows);
}

absl::StatusOr<Thesaurus> Thesaurus::Load(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    return absl::NotFoundError(
        StrCat("cannot open thesaurus file ", path.string()));
  }
  return Parse(input);
}

std::vector<std::vector<std::string>> Thesaurus::PathsFromRoot(int node) const {
  if (parents_[node].empty()) return {{labels_[node]}};
  std::vector<std::vector<std::string>> paths;
  for (int parent : parents_[node]) {
    for (std::vector<std::string>& path : PathsFromRoot(parent)) {
      path.push_back(labels_[node]);
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

}  // namespace mapcompare::corpus
