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
#ifndef MAPCOMPARE_SERVICE_API_H_
#define MAPCOMPARE_SERVICE_API_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "mapcompare/corpus/term_extractor.h"
#include "mapcompare/corpus/thesaurus.h"
#include "mapcompare/crossmap/crossmap.h"
#include "mapcompare/service/config.h"
#include "mapcompare/service/label_store.h"
#include "mapcompare/service/pipeline.h"
#include "mapcompare/topic/model_io.h"

namespace mapcompare::service {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Read model over verified pipeline artifacts plus the label log. Handlers
// are transport-free so they can be tested without a socket; all of them
// are safe to call concurrently.
class Api {
 public:
  static absl::StatusOr<std::unique_ptr<Api>> Load(const RunConfig& config);

  ApiResponse Summary() const;
  ApiResponse Topics() const;
  // `id` is "T3" or "3". `lambda` re-ranks terms by relevance.
  ApiResponse Topic(std::string_view id,
                    std::optional<std::string_view> lambda = std::nullopt) const;
  ApiResponse Clusters() const;
  ApiResponse Cluster(std::string_view id) const;
  ApiResponse Relations(std::optional<std::string_view> tct,
                        std::optional<std::string_view> ttc) const;
  // `side` is "cluster-to-topic" or "topic-to-cluster"; absent gives both.
  ApiResponse Sweep(std::optional<std::string_view> side) const;
  ApiResponse TopicMap() const;
  ApiResponse PostLabel(std::string_view body);

  // Everything the explorer needs, as one document.
  nlohmann::json Bundle() const;

  const crossmap::CrossMap& crossmap() const { return cm_; }

 private:
  Api() = default;

  std::optional<int> TopicIndex(std::string_view id) const;
  std::optional<int> ClusterRow(std::string_view id) const;
  nlohmann::json TopicDossier(int topic) const;
  nlohmann::json ClusterDossier(int row) const;
  nlohmann::json WithLabel(nlohmann::json dossier) const;

  RunConfig config_;
  topic::ModelBundle model_;
  std::vector<double> marginal_;
  Clustering clustering_;
  crossmap::CrossMap cm_;
  corpus::Thesaurus thesaurus_;
  corpus::TextNormalizer normalizer_;
  nlohmann::json preprocess_summary_;
  nlohmann::json levels_;
  nlohmann::json topics_;
  nlohmann::json clusters_;  // Aligned with cm_.cluster_ids.
  nlohmann::json topic_map_;
  nlohmann::json sweep_ct_;
  nlohmann::json sweep_tc_;
  std::map<std::string, std::string> titles_;
  std::unique_ptr<LabelStore> labels_;
};

}  // namespace mapcompare::service

#endif  // MAPCOMPARE_SERVICE_API_H_
