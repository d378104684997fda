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
#ifndef MAPCOMPARE_CORPUS_THESAURUS_H_
#define MAPCOMPARE_CORPUS_THESAURUS_H_

#include <filesystem>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"

namespace mapcompare::corpus {

struct ThesaurusRow {
  std::string node_id;
  std::string parent_id;  // Empty for a root.
  std::string label;
};

// Rooted labeled forest (MeSH-style). A node id may appear in several rows
// with different parents, and the same label may sit on several nodes.
class Thesaurus {
 public:
  Thesaurus() = default;

  // Fails if a parent id is unknown, a node id carries two different labels,
  // or the parent relation has a cycle.
  static absl::StatusOr<Thesaurus> FromRows(const std::vector<ThesaurusRow>& rows);

  // Tab-separated rows: node-id, parent-id (empty for root), label.
  // Blank lines and lines starting with '#' are ignored.
  static absl::StatusOr<Thesaurus> Parse(std::istream& input);
  static absl::StatusOr<Thesaurus> Load(const std::filesystem::path& path);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int node) const { return labels_[node]; }
  const std::string& node_id(int node) const { return node_ids_[node]; }
  const std::vector<int>& parents(int node) const { return parents_[node]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Every label sequence from a root down to `node`, one per route through
  // the parent relation. Root first, `node`'s own label last.
  std::vector<std::vector<std::string>> PathsFromRoot(int node) const;

 private:
  std::vector<std::string> node_ids_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> parents_;
};

}  // namespace mapcompare::corpus

#endif  // MAPCOMPARE_CORPUS_THESAURUS_H_
