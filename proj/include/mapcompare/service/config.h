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
#ifndef MAPCOMPARE_SERVICE_CONFIG_H_
#define MAPCOMPARE_SERVICE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "mapcompare/corpus/document.h"
#include "mapcompare/corpus/term_extractor.h"
#include "mapcompare/topic/lda.h"

namespace mapcompare::service {

// Everything a pipeline run needs. Defaults follow the published setup where
// one exists (k = 40, alpha = 1/k, beta = 0.1, 5000 sweeps, 10% field share,
// grouping at resolution 0.9 with minimum size 10, sweep 0.50 -> 0.05).
struct RunConfig {
  struct Paths {
    std::filesystem::path corpus;
    std::filesystem::path thesaurus;
    std::filesystem::path stopwords;  // Empty: bundled English list.
    std::filesystem::path lemmas;     // Empty: identity.
    std::filesystem::path nouns;      // Lexicon mode only.
    std::filesystem::path output = "out";
  } paths;

  struct Corpus {
    corpus::NounSelector::Mode noun_mode = corpus::NounSelector::Mode::kAcceptAll;
    double max_doc_share = 0.95;
    int drop_top_k = 100;
    corpus::IngestSchema schema;
  } corpus;

  topic::LdaConfig lda;

  struct Cluster {
    // Coarsest first: macro, meso, micro.
    std::vector<double> resolutions = {2e-5, 3e-4, 5e-3};
    double min_cluster_size = 10;
    double field_share = 0.10;
    double group_resolution = 0.9;
    double group_min_size = 10;
    uint64_t seed = 1;
    int random_starts = 1;
  } cluster;

  struct Crossmap {
    double tau_ct = 0.2;
    double tau_tc = 0.1;
    std::vector<double> sweep;  // Empty: 0.50, 0.45, ..., 0.05.
  } crossmap;

  struct Interpret {
    int topic_terms = 40;
    int topic_docs = 20;
    int cluster_docs = 10;
    int cluster_terms = 10;
    double lambda = 1.0;
  } interpret;

  struct Serve {
    std::string bind = "127.0.0.1";
    int port = 8080;
  } serve;

  std::vector<double> SweepGrid() const;

  // Stage-relevant parts of the config, used for manifest hashes.
  nlohmann::json StageSection(std::string_view stage) const;
};

// YAML document; relative paths resolve against `base_dir`.
absl::StatusOr<RunConfig> ParseConfig(const std::string& yaml,
                                      const std::filesystem::path& base_dir);
absl::StatusOr<RunConfig> LoadConfig(const std::filesystem::path& path);

// Overrides the topic and cluster seeds.
void ApplySeed(RunConfig& config, uint64_t seed);

// Checks that every referenced input file exists.
absl::Status CheckInputs(const RunConfig& config);

}  // namespace mapcompare::service

#endif  // MAPCOMPARE_SERVICE_CONFIG_H_
