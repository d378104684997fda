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
#include "mapcompare/topic/model_io.h"

#include <sstream>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "json.hpp"
#include "mapcompare/text_format.h"

namespace mapcompare::topic {
namespace {

using nlohmann::json;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

absl::Status FileError(std::string_view file, size_t line, std::string_view what) {
  return absl::DataLossError(StrCat(file, " line ", line, ": ", what));
}

}  // namespace

ModelFiles EncodeModel(const ModelBundle& bundle) {
  const TopicModel& model = bundle.model;
  const int k = model.num_topics();
  ModelFiles files;

  std::string header;
  for (int t = 0; t < k; ++t) StrAppend(&header, "\tT", t);

  files.theta_tsv = StrCat("doc_id\tempty", header, "\n");
  for (int d = 0; d < model.num_docs(); ++d) {
    StrAppend(&files.theta_tsv, bundle.doc_ids[d], "\t",
                    model.empty_docs()[d] ? "1" : "0");
    for (double x : model.theta().row(d)) {
      StrAppend(&files.theta_tsv, "\t", FormatDouble(x));
    }
    files.theta_tsv += '\n';
  }

  files.phi_tsv = StrCat("term", header, "\n");
  for (int w = 0; w < model.vocab_size(); ++w) {
    files.phi_tsv += bundle.terms[w];
    for (int t = 0; t < k; ++t) {
      StrAppend(&files.phi_tsv, "\t", FormatDouble(model.phi()(t, w)));
    }
    files.phi_tsv += '\n';
  }

  for (int d = 0; d < model.num_docs(); ++d) {
    StrAppend(&files.assignments_tsv, bundle.doc_ids[d], "\t");
    const auto& z = model.assignments()[d];
    for (size_t i = 0; i < z.size(); ++i) {
      StrAppend(&files.assignments_tsv, i ? " " : "", z[i]);
    }
    files.assignments_tsv += '\n';
  }

  const LdaConfig& config = model.config();
  json meta = {
      {"k", config.k},
      {"alpha", FormatDouble(config.EffectiveAlpha())},
      {"beta", FormatDouble(config.beta)},
      {"iterations", config.iterations},
      {"seed", config.seed},
      {"min_probability", FormatDouble(config.min_probability)},
      {"rng", "splitmix64"},
      {"num_docs", model.num_docs()},
      {"vocab_size", model.vocab_size()},
      {"warnings", model.warnings()},
  };
  files.model_json = meta.dump(2) + "\n";
  return files;
}

absl::StatusOr<ModelBundle> DecodeModel(const ModelFiles& files) {
  json meta = json::parse(files.model_json, nullptr, false);
  if (meta.is_discarded() || !meta.is_object()) {
    return absl::DataLossError("model.json is not a JSON object");
  }
  LdaConfig config;
  int num_docs = 0;
  int vocab_size = 0;
  try {
    config.k = meta.at("k").get<int>();
    auto alpha = ParseDouble(meta.at("alpha").get<std::string>());
    auto beta = ParseDouble(meta.at("beta").get<std::string>());
    auto floor = ParseDouble(meta.at("min_probability").get<std::string>());
    if (!alpha.ok() || !beta.ok() || !floor.ok()) {
      return absl::DataLossError("model.json has a malformed number");
    }
    config.alpha = *alpha;
    config.beta = *beta;
    config.min_probability = *floor;
    config.iterations = meta.at("iterations").get<int>();
    config.seed = meta.at("seed").get<uint64_t>();
    num_docs = meta.at("num_docs").get<int>();
    vocab_size = meta.at("vocab_size").get<int>();
  } catch (const json::exception& e) {
    return absl::DataLossError(StrCat("model.json: ", e.what()));
  }
  std::vector<std::string> warnings;
  if (meta.contains("warnings")) {
    warnings = meta["warnings"].get<std::vector<std::string>>();
  }
  const int k = config.k;

  ModelBundle bundle;
  std::vector<std::string> theta_lines = Lines(files.theta_tsv);
  if (theta_lines.empty()) return absl::DataLossError("theta.tsv is empty");
  const int n = static_cast<int>(theta_lines.size()) - 1;
  if (n != num_docs) return absl::DataLossError("theta.tsv row count differs from model.json");
  Matrix theta(n, k);
  std::vector<bool> empty(n);
  for (int d = 0; d < n; ++d) {
    std::vector<std::string_view> fields = SplitTabs(theta_lines[d + 1]);
    if (static_cast<int>(fields.size()) != k + 2) {
      return FileError("theta.tsv", d + 2, "wrong column count");
    }
    bundle.doc_ids.emplace_back(fields[0]);
    empty[d] = fields[1] == "1";
    for (int t = 0; t < k; ++t) {
      auto x = ParseDouble(fields[t + 2]);
      if (!x.ok()) return FileError("theta.tsv", d + 2, std::string(x.status().message()));
      theta(d, t) = *x;
    }
  }

  std::vector<std::string> phi_lines = Lines(files.phi_tsv);
  if (phi_lines.empty()) return absl::DataLossError("phi.tsv is empty");
  const int v = static_cast<int>(phi_lines.size()) - 1;
  if (v != vocab_size) return absl::DataLossError("phi.tsv row count differs from model.json");
  Matrix phi(k, v);
  for (int w = 0; w < v; ++w) {
    std::vector<std::string_view> fields = SplitTabs(phi_lines[w + 1]);
    if (static_cast<int>(fields.size()) != k + 1) {
      return FileError("phi.tsv", w + 2, "wrong column count");
    }
    bundle.terms.emplace_back(fields[0]);
    for (int t = 0; t < k; ++t) {
      auto x = ParseDouble(fields[t + 1]);
      if (!x.ok()) return FileError("phi.tsv", w + 2, std::string(x.status().message()));
      phi(t, w) = *x;
    }
  }

  std::vector<std::vector<int>> assignments(n);
  {
    std::istringstream in(files.assignments_tsv);
    std::string line;
    int d = 0;
    while (std::getline(in, line)) {
      if (d >= n) return absl::DataLossError("assignments.tsv has extra rows");
      std::vector<std::string_view> fields = SplitTabs(line);
      if (fields.size() != 2 || fields[0] != bundle.doc_ids[d]) {
        return FileError("assignments.tsv", d + 1, "row does not match theta.tsv");
      }
      std::istringstream tokens{std::string(fields[1])};
      int z;
      while (tokens >> z) {
        if (z < 0 || z >= k) return FileError("assignments.tsv", d + 1, "topic out of range");
        assignments[d].push_back(z);
      }
      if (!tokens.eof()) return FileError("assignments.tsv", d + 1, "malformed topic");
      ++d;
    }
    if (d != n) return absl::DataLossError("assignments.tsv is missing rows");
  }

  bundle.model = TopicModel(config, std::move(theta), std::move(phi),
                            std::move(assignments), std::move(empty),
                            std::move(warnings));
  return bundle;
}

}  // namespace mapcompare::topic
