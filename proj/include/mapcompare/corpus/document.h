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
#ifndef MAPCOMPARE_CORPUS_DOCUMENT_H_
#define MAPCOMPARE_CORPUS_DOCUMENT_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace mapcompare::corpus {

// One publication. `references` holds distinct ids other than `id`; ids
// outside the corpus are kept here and dropped when the citation graph is
// built.
struct Document {
  std::string id;
  std::string title;
  std::string abstract;
  std::vector<std::string> references;
  bool in_field = false;
  std::optional<int> year;
  // Pre-tagged term list, used when noun selection is delegated upstream.
  std::optional<std::vector<std::string>> terms;
};

// Field names of a corpus record.
struct IngestSchema {
  std::string id = "id";
  std::string title = "title";
  std::string abstract = "abstract";
  std::string references = "references";
  std::string in_field = "in_field";
  std::string year = "year";
  std::string terms = "terms";
};

// Reads line-delimited JSON records, one document per line. Blank lines are
// skipped. Errors name the 1-based line number; a duplicate id names both
// lines.
absl::StatusOr<std::vector<Document>> ParseCorpus(std::istream& input,
                                                  const IngestSchema& schema = {});

absl::StatusOr<std::vector<Document>> IngestCorpus(
    const std::filesystem::path& path, const IngestSchema& schema = {});

}  // namespace mapcompare::corpus

#endif  // MAPCOMPARE_CORPUS_DOCUMENT_H_
