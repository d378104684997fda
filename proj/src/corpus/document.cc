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
#include "mapcompare/corpus/document.h"

#include <fstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "json.hpp"

namespace mapcompare::corpus {
namespace {

using nlohmann::json;

absl::Status LineError(size_t line, std::string_view message) {
  return absl::InvalidArgumentError(StrCat("line ", line, ": ", message));
}

absl::StatusOr<std::string> OptionalString(const json& record,
                                           const std::string& field,
                                           size_t line) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return std::string();
  if (!it->is_string()) {
    return LineError(line, StrCat("field '", field, "' is not a string"));
  }
  return it->get<std::string>();
}

absl::StatusOr<Document> ParseRecord(const std::string& text, size_t line,
                                     const IngestSchema& schema) {
  json record = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded() || !record.is_object()) {
    return LineError(line, "malformed record (expected a JSON object)");
  }
  Document doc;
  auto id = record.find(schema.id);
  if (id == record.end() || !id->is_string() ||
      id->get<std::string>().empty()) {
    return LineError(line, "missing or empty id");
  }
  doc.id = id->get<std::string>();

  auto title = OptionalString(record, schema.title, line);
  if (!title.ok()) return title.status();
  doc.title = *std::move(title);
  auto abstract = OptionalString(record, schema.abstract, line);
  if (!abstract.ok()) return abstract.status();
  doc.abstract = *std::move(abstract);

  if (auto terms = record.find(schema.terms);
      terms != record.end() && !terms->is_null()) {
    if (!terms->is_array()) {
      return LineError(line, "field 'terms' is not an array");
    }
    std::vector<std::string> list;
    for (const json& term : *terms) {
      if (!term.is_string()) {
        return LineError(line, "field 'terms' holds a non-string entry");
      }
      list.push_back(term.get<std::string>());
    }
    doc.terms = std::move(list);
  }
  if (doc.title.empty() && doc.abstract.empty() && !doc.terms.has_value()) {
    return LineError(line, StrCat("document '", doc.id,
                                        "' has no title, abstract or terms"));
  }

  if (auto refs = record.find(schema.references);
      refs != record.end() && !refs->is_null()) {
    if (!refs->is_array()) {
      return LineError(line, "field 'references' is not an array");
    }
    std::unordered_set<std::string> seen;
    for (const json& ref : *refs) {
      if (!ref.is_string()) {
        return LineError(line, "field 'references' holds a non-string id");
      }
      std::string ref_id = ref.get<std::string>();
      if (ref_id.empty() || ref_id == doc.id) continue;
      if (seen.insert(ref_id).second) doc.references.push_back(std::move(ref_id));
    }
  }

  if (auto in_field = record.find(schema.in_field);
      in_field != record.end() && !in_field->is_null()) {
    if (!in_field->is_boolean()) {
      return LineError(line, "field 'in_field' is not a boolean");
    }
    doc.in_field = in_field->get<bool>();
  }
  if (auto year = record.find(schema.year);
      year != record.end() && !year->is_null()) {
    if (!year->is_number_integer()) {
      return LineError(line, "field 'year' is not an integer");
    }
    doc.year = year->get<int>();
  }
  return doc;
}

}  // namespace

absl::StatusOr<std::vector<Document>> ParseCorpus(std::istream& input,
                                                  const IngestSchema& schema) {
  std::vector<Document> docs;
  std::unordered_map<std::string, size_t> first_line;
  std::string text;
  size_t line = 0;
  while (std::getline(input, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto doc = ParseRecord(text, line, schema);
    if (!doc.ok()) return doc.status();
    auto [it, inserted] = first_line.emplace(doc->id, line);
    if (!inserted) {
      return absl::InvalidArgumentError(
          StrCat("duplicate id '", doc->id, "' at lines ", it->second,
                       " and ", line));
    }
    docs.push_back(*std::move(doc));
  }
  return docs;
}

absl::StatusOr<std::vector<Document>> IngestCorpus(
    const std::filesystem::path& path, const IngestSchema& schema) {
  std::ifstream input(path);
  if (!input) {
    return absl::NotFoundError(
        StrCat("cannot open corpus file ", path.string()));
  }
  return ParseCorpus(input, schema);
}

}  // namespace mapcompare::corpus
