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
#ifndef MAPCOMPARE_SERVICE_PIPELINE_H_
#define MAPCOMPARE_SERVICE_PIPELINE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mapcompare/cluster/cluster_io.h"
#include "mapcompare/cluster/hierarchy.h"
#include "mapcompare/corpus/term_extractor.h"
#include "mapcompare/corpus/vocabulary.h"
#include "mapcompare/crossmap/crossmap.h"
#include "mapcompare/service/artifacts.h"
#include "mapcompare/service/config.h"
#include "mapcompare/topic/model_io.h"

namespace mapcompare::service {

enum class Stage { kPreprocess, kTrain, kCluster, kCrossmap, kSweep, kDossier, kExport };

std::string_view StageName(Stage stage);
absl::StatusOr<Stage> ParseStage(std::string_view name);
const std::vector<Stage>& AllStages();
// Stages whose artifacts `stage` reads.
const std::vector<Stage>& Upstream(Stage stage);

// Artifact layout under the output root, per stage.
struct Layout {
  static constexpr const char* kVocabulary = "preprocess/vocabulary.tsv";
  static constexpr const char* kBow = "preprocess/bow.tsv";
  static constexpr const char* kPreprocessSummary = "preprocess/summary.json";
  static constexpr const char* kTheta = "train/theta.tsv";
  static constexpr const char* kPhi = "train/phi.tsv";
  static constexpr const char* kAssignments = "train/assignments.tsv";
  static constexpr const char* kModel = "train/model.json";
  static constexpr const char* kTrace = "train/trace.tsv";
  static constexpr const char* kLevels = "cluster/levels.json";
  static constexpr const char* kAreas = "cluster/areas.tsv";
  static constexpr const char* kPct = "crossmap/p_ct.tsv";
  static constexpr const char* kPtc = "crossmap/p_tc.tsv";
  static constexpr const char* kCrossmapMeta = "crossmap/crossmap.json";
  static constexpr const char* kRelations = "crossmap/relations.json";
  static constexpr const char* kSweepCt = "sweep/cluster_to_topic.json";
  static constexpr const char* kSweepTc = "sweep/topic_to_cluster.json";
  static constexpr const char* kTopicDossiers = "dossier/topics.json";
  static constexpr const char* kClusterDossiers = "dossier/clusters.json";
  static constexpr const char* kTopicMap = "dossier/topic_map.json";
  static constexpr const char* kExplorer = "export/explorer.json";
  static constexpr const char* kLabels = "labels.jsonl";
  static std::string LevelAssignment(std::string_view level_name);
  static std::string ManifestFor(Stage stage);
};

struct Preprocessed {
  std::vector<std::string> doc_ids;
  corpus::Vocabulary vocabulary;
  corpus::BowCorpus bow;
};

struct Clustering {
  std::vector<std::string> doc_ids;
  cluster::ClusterSolution solution;
  cluster::DecodedAreas areas;
  int num_categories = 0;
};

// Stopword list and lemma map named by the config, else the bundled defaults.
absl::StatusOr<corpus::TextNormalizer> MakeNormalizer(const RunConfig& config);

absl::StatusOr<Preprocessed> LoadPreprocessed(const std::filesystem::path& out);
absl::StatusOr<topic::ModelBundle> LoadModel(const std::filesystem::path& out);
absl::StatusOr<Clustering> LoadClustering(const std::filesystem::path& out);
absl::StatusOr<crossmap::CrossMap> LoadCrossMap(const std::filesystem::path& out);

class Pipeline {
 public:
  explicit Pipeline(RunConfig config) : config_(std::move(config)) {}

  // Runs one stage. Upstream artifacts must exist and be current.
  absl::Status Run(Stage stage);
  // Runs every stage up to and including `last`, in order.
  absl::Status RunThrough(Stage last);

  // OK iff the stage's manifest matches its current inputs, configuration
  // and output files, recursively upstream.
  absl::Status Verify(Stage stage) const;

  const RunConfig& config() const { return config_; }
  const std::filesystem::path& out() const { return config_.paths.output; }

 private:
  using Outputs = std::map<std::string, std::string>;  // relative path -> bytes

  absl::StatusOr<Outputs> Preprocess() const;
  absl::StatusOr<Outputs> Train() const;
  absl::StatusOr<Outputs> Cluster() const;
  absl::StatusOr<Outputs> CrossMapStage() const;
  absl::StatusOr<Outputs> SweepStage() const;
  absl::StatusOr<Outputs> Dossier() const;
  absl::StatusOr<Outputs> Export() const;

  std::string ConfigHash(Stage stage) const;
  uint64_t StageSeed(Stage stage) const;
  absl::StatusOr<std::map<std::string, std::string>> InputHashes(Stage stage) const;

  RunConfig config_;
};

}  // namespace mapcompare::service

#endif  // MAPCOMPARE_SERVICE_PIPELINE_H_
