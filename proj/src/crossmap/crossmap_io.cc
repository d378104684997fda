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
#include "mapcompare/crossmap/crossmap_io.h"

#include <sstream>

#include "absl/status/status.h"
#include "mapcompare/strings.h"
#include "mapcompare/text_format.h"

namespace mapcompare::crossmap {
namespace {

using nlohmann::json;

absl::StatusOr<Matrix> DecodeMatrixTsv(const std::string& text, int rows, int cols,
                                       std::string_view name) {
  Matrix matrix(rows, cols);
  std::istringstream in(text);
  std::string line;
  int r = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (r++ < 0) continue;  // Header.
    std::vector<std::string_view> fields = SplitTabs(line);
    if (r > rows || static_cast<int>(fields.size()) != cols + 1) {
      return absl::DataLossError(StrCat(name, ": unexpected shape at row ", r));
    }
    for (int c = 0; c < cols; ++c) {
      auto x = ParseDouble(fields[c + 1]);
      if (!x.ok()) return absl::DataLossError(StrCat(name, ": ", x.status().message()));
      matrix(r - 1, c) = *x;
    }
  }
  if (r != rows) return absl::DataLossError(StrCat(name, ": missing rows"));
  return matrix;
}

std::vector<std::string> TopicKeys(int count) {
  std::vector<std::string> keys;
  for (int t = 0; t < count; ++t) keys.push_back(TopicKey(t));
  return keys;
}

std::vector<std::string> ClusterKeys(const std::vector<int>& ids) {
  std::vector<std::string> keys;
  for (int id : ids) keys.push_back(ClusterKey(id));
  return keys;
}

}  // namespace

std::string TopicKey(int topic) { return StrCat("T", topic); }
std::string ClusterKey(int cluster_id) { return StrCat("C", cluster_id); }

std::string EncodeMatrixTsv(const Matrix& matrix, std::span<const std::string> row_ids,
                            std::span<const std::string> col_ids) {
  std::string out = "id";
  for (const std::string& id : col_ids) StrAppend(&out, "\t", id);
  out += '\n';
  for (int r = 0; r < matrix.rows(); ++r) {
    out += row_ids[r];
    for (double x : matrix.row(r)) StrAppend(&out, "\t", FormatDouble(x));
    out += '\n';
  }
  return out;
}

CrossMapFiles EncodeCrossMap(const CrossMap& cm) {
  const std::vector<std::string> topics = TopicKeys(cm.num_topics());
  const std::vector<std::string> clusters = ClusterKeys(cm.cluster_ids);
  CrossMapFiles files;
  files.p_ct_tsv = EncodeMatrixTsv(cm.p_ct, clusters, topics);
  files.p_tc_tsv = EncodeMatrixTsv(cm.p_tc, topics, clusters);
  std::vector<bool> degenerate(cm.degenerate.begin(), cm.degenerate.end());
  json meta = {
      {"num_docs", cm.num_docs},
      {"num_topics", cm.num_topics()},
      {"cluster_ids", cm.cluster_ids},
      {"cluster_docs", cm.cluster_docs},
      {"topic_mass", cm.topic_mass},
      {"unmapped_mass", cm.unmapped_mass},
      {"degenerate", degenerate},
  };
  files.meta_json = meta.dump(2) + "\n";
  return files;
}

absl::StatusOr<CrossMap> DecodeCrossMap(const CrossMapFiles& files) {
  json meta = json::parse(files.meta_json, nullptr, false);
  if (meta.is_discarded()) return absl::DataLossError("crossmap.json is not JSON");
  CrossMap cm;
  int topics = 0;
  try {
    cm.num_docs = meta.at("num_docs").get<int>();
    topics = meta.at("num_topics").get<int>();
    cm.cluster_ids = meta.at("cluster_ids").get<std::vector<int>>();
    cm.cluster_docs = meta.at("cluster_docs").get<std::vector<double>>();
    cm.topic_mass = meta.at("topic_mass").get<std::vector<double>>();
    cm.unmapped_mass = meta.at("unmapped_mass").get<std::vector<double>>();
    cm.degenerate = meta.at("degenerate").get<std::vector<bool>>();
  } catch (const json::exception& e) {
    return absl::DataLossError(StrCat("crossmap.json: ", e.what()));
  }
  const int clusters = cm.num_clusters();
  auto p_ct = DecodeMatrixTsv(files.p_ct_tsv, clusters, topics, "p_ct.tsv");
  if (!p_ct.ok()) return p_ct.status();
  auto p_tc = DecodeMatrixTsv(files.p_tc_tsv, topics, clusters, "p_tc.tsv");
  if (!p_tc.ok()) return p_tc.status();
  cm.p_ct = *std::move(p_ct);
  cm.p_tc = *std::move(p_tc);
  return cm;
}

json CensusToJson(const Census& census) {
  return {{"one_to_one", census.one_to_one},
          {"one_to_many", census.one_to_many},
          {"many_to_many", census.many_to_many},
          {"unique_topics", census.unique_topics},
          {"unique_clusters", census.unique_clusters}};
}

json RelationGraphToJson(const RelationGraph& graph, const CrossMap& cm) {
  std::vector<std::string> topic_type(graph.num_topics);
  std::vector<std::string> cluster_type(graph.num_clusters);
  json components = json::array();
  for (const RelationComponent& comp : graph.components) {
    const std::string type(RelationTypeName(comp.type));
    json topics = json::array();
    json clusters = json::array();
    for (int t : comp.topics) {
      topic_type[t] = type;
      topics.push_back(TopicKey(t));
    }
    for (int c : comp.clusters) {
      cluster_type[c] = type;
      clusters.push_back(ClusterKey(cm.cluster_ids[c]));
    }
    components.push_back({{"type", type}, {"topics", topics}, {"clusters", clusters}});
  }
  json nodes = json::array();
  for (int t = 0; t < graph.num_topics; ++t) {
    nodes.push_back({{"id", TopicKey(t)}, {"kind", "topic"}, {"type", topic_type[t]}});
  }
  for (int c = 0; c < graph.num_clusters; ++c) {
    nodes.push_back({{"id", ClusterKey(cm.cluster_ids[c])},
                     {"kind", "cluster"},
                     {"type", cluster_type[c]}});
  }
  json edges = json::array();
  for (const RelationEdge& e : graph.edges) {
    json fired = json::array();
    if (e.ct_fired) fired.push_back("ct");
    if (e.tc_fired) fired.push_back("tc");
    edges.push_back({{"topic", TopicKey(e.topic)},
                     {"cluster", ClusterKey(cm.cluster_ids[e.cluster])},
                     {"p_ct", e.p_ct},
                     {"p_tc", e.p_tc},
                     {"fired", fired}});
  }
  return {{"tct", graph.tau_ct},
          {"ttc", graph.tau_tc},
          {"nodes", nodes},
          {"edges", edges},
          {"components", components},
          {"census", CensusToJson(TakeCensus(graph.components))}};
}

json SweepToJson(std::span<const SweepStep> steps, SweepSide side,
                 const CrossMap& cm) {
  json out = json::array();
  for (const SweepStep& step : steps) {
    json graph = RelationGraphToJson(step.graph, cm);
    out.push_back({{"tau", step.tau},
                   {"edge_count", step.graph.edges.size()},
                   {"census", CensusToJson(step.census)},
                   {"edges", graph["edges"]},
                   {"components", graph["components"]}});
  }
  return {{"side", side == SweepSide::kClusterToTopic ? "cluster-to-topic"
                                                      : "topic-to-cluster"},
          {"steps", out}};
}

}  // namespace mapcompare::crossmap
