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
#include "mapcompare/service/api.h"

#include <algorithm>
#include <cmath>

#include "mapcompare/strings.h"
#include "mapcompare/corpus/document.h"
#include "mapcompare/crossmap/crossmap_io.h"
#include "mapcompare/crossmap/relations.h"
#include "mapcompare/interpret/dossier.h"
#include "mapcompare/status_macros.h"
#include "mapcompare/text_format.h"

namespace mapcompare::service {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

ApiResponse Error(int status, std::string message) {
  return {status, {{"error", std::move(message)}}};
}

absl::StatusOr<json> ReadJsonFile(const fs::path& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    return absl::DataLossError(StrCat(path.string(), ": malformed JSON"));
  }
  return j;
}

// Accepts "<prefix><n>" or "<n>" with n a non-negative decimal integer.
std::optional<long long> EntityNumber(std::string_view id, char prefix) {
  if (!id.empty() && id.front() == prefix) id.remove_prefix(1);
  if (id.empty() || id.front() == '-' || id.front() == '+') return std::nullopt;
  absl::StatusOr<long long> n = ParseInt(id);
  if (!n.ok()) return std::nullopt;
  return *n;
}

std::optional<double> FiniteNumber(std::string_view text) {
  absl::StatusOr<double> v = ParseDouble(text);
  if (!v.ok() || !std::isfinite(*v)) return std::nullopt;
  return *v;
}

}  // namespace

absl::StatusOr<std::unique_ptr<Api>> Api::Load(const RunConfig& config) {
  Pipeline pipeline(config);
  RETURN_IF_ERROR(pipeline.Verify(Stage::kSweep));
  RETURN_IF_ERROR(pipeline.Verify(Stage::kDossier));

  std::unique_ptr<Api> api(new Api());
  api->config_ = config;
  const fs::path& out = config.paths.output;
  ASSIGN_OR_RETURN(Preprocessed pre, LoadPreprocessed(out));
  api->marginal_ = interpret::TermMarginal(pre.bow);
  ASSIGN_OR_RETURN(api->model_, LoadModel(out));
  ASSIGN_OR_RETURN(api->clustering_, LoadClustering(out));
  ASSIGN_OR_RETURN(api->cm_, LoadCrossMap(out));
  ASSIGN_OR_RETURN(api->thesaurus_, corpus::Thesaurus::Load(config.paths.thesaurus));
  ASSIGN_OR_RETURN(api->normalizer_, MakeNormalizer(config));
  ASSIGN_OR_RETURN(api->preprocess_summary_, ReadJsonFile(out / Layout::kPreprocessSummary));
  ASSIGN_OR_RETURN(api->levels_, ReadJsonFile(out / Layout::kLevels));
  ASSIGN_OR_RETURN(api->topics_, ReadJsonFile(out / Layout::kTopicDossiers));
  ASSIGN_OR_RETURN(json clusters, ReadJsonFile(out / Layout::kClusterDossiers));
  ASSIGN_OR_RETURN(api->topic_map_, ReadJsonFile(out / Layout::kTopicMap));
  ASSIGN_OR_RETURN(api->sweep_ct_, ReadJsonFile(out / Layout::kSweepCt));
  ASSIGN_OR_RETURN(api->sweep_tc_, ReadJsonFile(out / Layout::kSweepTc));
  ASSIGN_OR_RETURN(api->labels_, LabelStore::Open(out / Layout::kLabels));

  if (!api->topics_.is_array() ||
      static_cast<int>(api->topics_.size()) != api->model_.model.num_topics()) {
    return absl::DataLossError("topic dossiers do not match the topic model");
  }
  api->clusters_ = json::array();
  for (int id : api->cm_.cluster_ids) {
    const std::string key = crossmap::ClusterKey(id);
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const json& c) {
      return c.value("entity", "") == key;
    });
    if (it == clusters.end()) {
      return absl::DataLossError(StrCat("no dossier for cluster ", key));
    }
    api->clusters_.push_back(*it);
  }
  return api;
}

std::optional<int> Api::TopicIndex(std::string_view id) const {
  std::optional<long long> n = EntityNumber(id, 'T');
  if (!n || *n >= model_.model.num_topics()) return std::nullopt;
  return static_cast<int>(*n);
}

std::optional<int> Api::ClusterRow(std::string_view id) const {
  std::optional<long long> n = EntityNumber(id, 'C');
  if (!n) return std::nullopt;
  auto it = std::find(cm_.cluster_ids.begin(), cm_.cluster_ids.end(), *n);
  if (it == cm_.cluster_ids.end()) return std::nullopt;
  return static_cast<int>(it - cm_.cluster_ids.begin());
}

json Api::WithLabel(json dossier) const {
  std::optional<LabelRecord> label = labels_->Current(dossier.value("entity", ""));
  dossier["human_label"] = label ? json(label->label) : json(nullptr);
  dossier["label_author"] = label ? json(label->author) : json(nullptr);
  return dossier;
}

json Api::TopicDossier(int topic) const {
  json j = WithLabel(topics_[topic]);
  json links = json::array();
  for (int c = 0; c < cm_.num_clusters(); ++c) {
    links.push_back({{"cluster", crossmap::ClusterKey(cm_.cluster_ids[c])},
                     {"p_ct", cm_.p_ct(c, topic)},
                     {"p_tc", cm_.p_tc(topic, c)}});
  }
  std::stable_sort(links.begin(), links.end(), [](const json& a, const json& b) {
    return a["p_tc"].get<double>() > b["p_tc"].get<double>();
  });
  j["crossmap"] = std::move(links);
  j["unmapped_mass"] = cm_.unmapped_mass[topic];
  return j;
}

json Api::ClusterDossier(int row) const {
  json j = WithLabel(clusters_[row]);
  json links = json::array();
  for (int t = 0; t < cm_.num_topics(); ++t) {
    links.push_back({{"topic", crossmap::TopicKey(t)},
                     {"p_ct", cm_.p_ct(row, t)},
                     {"p_tc", cm_.p_tc(t, row)}});
  }
  std::stable_sort(links.begin(), links.end(), [](const json& a, const json& b) {
    return a["p_ct"].get<double>() > b["p_ct"].get<double>();
  });
  j["crossmap"] = std::move(links);
  j["degenerate"] = static_cast<bool>(cm_.degenerate[row]);
  return j;
}

ApiResponse Api::Summary() const {
  json levels = json::array();
  for (const cluster::ClusterLevel& level : clustering_.solution.levels) {
    levels.push_back({{"name", level.name},
                      {"resolution", level.resolution},
                      {"num_clusters", level.num_clusters},
                      {"quality", level.quality}});
  }
  std::vector<std::string> degenerate;
  for (int c = 0; c < cm_.num_clusters(); ++c) {
    if (cm_.degenerate[c]) degenerate.push_back(crossmap::ClusterKey(cm_.cluster_ids[c]));
  }
  json body = {
      {"num_docs", model_.model.num_docs()},
      {"num_topics", model_.model.num_topics()},
      {"vocab_size", model_.model.vocab_size()},
      {"num_tokens", preprocess_summary_.value("num_tokens", 0)},
      {"empty_docs", preprocess_summary_.value("empty_docs", 0)},
      {"levels", levels},
      {"num_selected_clusters", cm_.num_clusters()},
      {"field_coverage", levels_.value("coverage", 0.0)},
      {"num_categories", clustering_.num_categories},
      {"defaults", {{"tct", config_.crossmap.tau_ct}, {"ttc", config_.crossmap.tau_tc}}},
      {"sweep_grid", config_.SweepGrid()},
      {"unmapped_mass", cm_.unmapped_mass},
      {"degenerate_clusters", degenerate},
      {"model_warnings", model_.model.warnings()},
      {"num_labels", labels_->size()},
  };
  return {200, std::move(body)};
}

ApiResponse Api::Topics() const {
  json list = json::array();
  for (int t = 0; t < model_.model.num_topics(); ++t) {
    const json& d = topics_[t];
    json terms = json::array();
    for (const json& item : d["top_terms"]) {
      if (terms.size() == 10) break;
      terms.push_back(item["key"]);
    }
    std::optional<LabelRecord> label = labels_->Current(crossmap::TopicKey(t));
    list.push_back({{"id", crossmap::TopicKey(t)},
                    {"prevalence", d.value("prevalence", 0.0)},
                    {"top_terms", terms},
                    {"human_label", label ? json(label->label) : json(nullptr)}});
  }
  return {200, {{"topics", list}}};
}

ApiResponse Api::Topic(std::string_view id, std::optional<std::string_view> lambda) const {
  std::optional<int> topic = TopicIndex(id);
  if (!topic) return Error(404, StrCat("unknown topic '", id, "'"));
  json j = TopicDossier(*topic);
  if (lambda) {
    std::optional<double> value = FiniteNumber(*lambda);
    if (!value || *value < 0 || *value > 1) {
      return Error(400, "lambda must be a number in [0, 1]");
    }
    absl::StatusOr<std::vector<interpret::RankedItem>> terms =
        interpret::TopicTopTerms(model_.model, *topic, model_.terms, marginal_,
                                 config_.interpret.topic_terms, *value);
    if (!terms.ok()) return Error(500, std::string(terms.status().message()));
    std::vector<std::string> keys;
    for (const auto& item : *terms) keys.push_back(item.key);
    interpret::LabelDossier rerank;
    rerank.rollup = interpret::RollupTerms(keys, thesaurus_, normalizer_);
    rerank.top_terms = *std::move(terms);
    const json fresh = interpret::DossierToJson(rerank);
    j["top_terms"] = fresh["top_terms"];
    j["rollup_paths"] = fresh["rollup_paths"];
    j["unmatched_terms"] = fresh["unmatched_terms"];
    j["lambda"] = *value;
  }
  return {200, std::move(j)};
}

ApiResponse Api::Clusters() const {
  json list = json::array();
  for (int c = 0; c < cm_.num_clusters(); ++c) {
    const json& d = clusters_[c];
    std::optional<LabelRecord> label = labels_->Current(d.value("entity", ""));
    list.push_back({{"id", d["entity"]},
                    {"size", d["size"]},
                    {"field_share", d["field_share"]},
                    {"category", d["category"]},
                    {"degenerate", static_cast<bool>(cm_.degenerate[c])},
                    {"human_label", label ? json(label->label) : json(nullptr)}});
  }
  return {200, {{"clusters", list}}};
}

ApiResponse Api::Cluster(std::string_view id) const {
  std::optional<int> row = ClusterRow(id);
  if (!row) return Error(404, StrCat("unknown cluster '", id, "'"));
  return {200, ClusterDossier(*row)};
}

ApiResponse Api::Relations(std::optional<std::string_view> tct,
                           std::optional<std::string_view> ttc) const {
  double tau_ct = config_.crossmap.tau_ct;
  double tau_tc = config_.crossmap.tau_tc;
  for (auto [text, target, name] :
       {std::tuple{tct, &tau_ct, "tct"}, std::tuple{ttc, &tau_tc, "ttc"}}) {
    if (!text) continue;
    std::optional<double> value = FiniteNumber(*text);
    if (!value || *value <= 0) {
      return Error(400, StrCat(name, " must be a number > 0"));
    }
    *target = *value;
  }
  const crossmap::RelationGraph graph = crossmap::Relate(cm_, tau_ct, tau_tc);
  return {200, crossmap::RelationGraphToJson(graph, cm_)};
}

ApiResponse Api::Sweep(std::optional<std::string_view> side) const {
  if (!side) {
    return {200, {{"cluster_to_topic", sweep_ct_}, {"topic_to_cluster", sweep_tc_}}};
  }
  if (*side == "cluster-to-topic" || *side == "ct") return {200, sweep_ct_};
  if (*side == "topic-to-cluster" || *side == "tc") return {200, sweep_tc_};
  return Error(400, "side must be cluster-to-topic or topic-to-cluster");
}

ApiResponse Api::TopicMap() const { return {200, topic_map_}; }

ApiResponse Api::PostLabel(std::string_view body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return Error(400, "body must be a JSON object");
  const auto entity = j.find("entity");
  const auto label = j.find("label");
  const auto author = j.find("author");
  if (entity == j.end() || !entity->is_string()) {
    return Error(400, "entity must be a string");
  }
  if (label == j.end() || !label->is_string() || label->get<std::string>().empty()) {
    return Error(400, "label must be a non-empty string");
  }
  if (author != j.end() && !author->is_string()) {
    return Error(400, "author must be a string");
  }
  const std::string key = entity->get<std::string>();
  std::string canonical;
  if (!key.empty() && key.front() == 'T') {
    if (std::optional<int> t = TopicIndex(key)) canonical = crossmap::TopicKey(*t);
  } else if (!key.empty() && key.front() == 'C') {
    if (std::optional<int> c = ClusterRow(key)) {
      canonical = crossmap::ClusterKey(cm_.cluster_ids[*c]);
    }
  }
  if (canonical.empty()) return Error(404, StrCat("unknown entity '", key, "'"));
  absl::StatusOr<LabelRecord> record = labels_->Append(
      canonical, label->get<std::string>(),
      author == j.end() ? std::string() : author->get<std::string>());
  if (!record.ok()) return Error(500, std::string(record.status().message()));
  return {201, record->ToJson()};
}

json Api::Bundle() const {
  json topics = json::array();
  for (int t = 0; t < model_.model.num_topics(); ++t) topics.push_back(TopicDossier(t));
  json clusters = json::array();
  for (int c = 0; c < cm_.num_clusters(); ++c) clusters.push_back(ClusterDossier(c));
  json labels = json::array();
  for (const auto& [entity, record] : labels_->Snapshot()) labels.push_back(record.ToJson());
  return {{"summary", Summary().body},
          {"topics", topics},
          {"clusters", clusters},
          {"relations", Relations(std::nullopt, std::nullopt).body},
          {"sweep", Sweep(std::nullopt).body},
          {"topic_map", topic_map_},
          {"labels", labels}};
}

}  // namespace mapcompare::service
