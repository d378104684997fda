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
#include "mapcompare/service/pipeline.h"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "mapcompare/strings.h"
#include "mapcompare/cluster/areas.h"
#include "mapcompare/cluster/citation_graph.h"
#include "mapcompare/corpus/document.h"
#include "mapcompare/corpus/term_extractor.h"
#include "mapcompare/corpus/thesaurus.h"
#include "mapcompare/crossmap/crossmap_io.h"
#include "mapcompare/crossmap/relations.h"
#include "mapcompare/interpret/dossier.h"
#include "mapcompare/interpret/topic_distance.h"
#include "mapcompare/service/api.h"
#include "mapcompare/status_macros.h"
#include "mapcompare/text_format.h"
#include "mapcompare/topic/lda.h"

namespace mapcompare::service {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kTraceEvery = 50;

absl::StatusOr<json> ReadJson(const fs::path& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    return absl::DataLossError(StrCat(path.string(), ": malformed JSON"));
  }
  return j;
}

std::string Rerun(Stage stage) {
  return StrCat("; rerun `mapcompare ", StageName(stage), "`");
}

absl::StatusOr<corpus::NounSelector> MakeSelector(const RunConfig& config) {
  switch (config.corpus.noun_mode) {
    case corpus::NounSelector::Mode::kLexicon: {
      ASSIGN_OR_RETURN(corpus::StopwordSet nouns,
                       corpus::LoadStopwords(config.paths.nouns));
      return corpus::NounSelector::Lexicon(
          std::unordered_set<std::string>(nouns.begin(), nouns.end()));
    }
    case corpus::NounSelector::Mode::kPreTagged:
      return corpus::NounSelector::PreTagged();
    default:
      return corpus::NounSelector::AcceptAll();
  }
}

std::string EncodeVocabulary(const corpus::Vocabulary& vocab) {
  std::string out = "term\tdoc_frequency\ttotal_frequency\n";
  for (int i = 0; i < vocab.size(); ++i) {
    StrAppend(&out, vocab.term(i), "\t", vocab.doc_frequency(i), "\t",
                    vocab.total_frequency(i), "\n");
  }
  return out;
}

std::string EncodeBow(const corpus::BowCorpus& bow,
                      const std::vector<std::string>& doc_ids) {
  std::string out = "doc_id\ttokens\n";
  for (int d = 0; d < bow.num_docs(); ++d) {
    StrAppend(&out, doc_ids[d], "\t", StrJoin(bow.docs[d], " "), "\n");
  }
  return out;
}

std::unordered_map<std::string, std::string> TitlesById(
    const std::vector<corpus::Document>& docs) {
  std::unordered_map<std::string, std::string> titles;
  for (const corpus::Document& doc : docs) titles[doc.id] = doc.title;
  return titles;
}

json WithTitles(json items, const std::unordered_map<std::string, std::string>& titles) {
  for (json& item : items) {
    auto it = titles.find(item["key"].get<std::string>());
    item["title"] = it == titles.end() ? "" : it->second;
  }
  return items;
}

absl::Status CheckSameDocs(const std::vector<std::string>& a,
                           const std::vector<std::string>& b, std::string_view what) {
  if (a != b) {
    return absl::FailedPreconditionError(StrCat(
        what, " disagree on the document list; rerun preprocess, train and cluster"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<corpus::TextNormalizer> MakeNormalizer(const RunConfig& config) {
  corpus::StopwordSet stopwords = corpus::DefaultStopwords();
  if (!config.paths.stopwords.empty()) {
    ASSIGN_OR_RETURN(stopwords, corpus::LoadStopwords(config.paths.stopwords));
  }
  corpus::LemmaMap lemmas;
  if (!config.paths.lemmas.empty()) {
    ASSIGN_OR_RETURN(lemmas, corpus::LoadLemmaMap(config.paths.lemmas));
  }
  return corpus::TextNormalizer(std::move(stopwords), std::move(lemmas));
}

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kPreprocess:
      return "preprocess";
    case Stage::kTrain:
      return "train";
    case Stage::kCluster:
      return "cluster";
    case Stage::kCrossmap:
      return "crossmap";
    case Stage::kSweep:
      return "sweep";
    case Stage::kDossier:
      return "dossier";
    case Stage::kExport:
      return "export";
  }
  return "unknown";
}

const std::vector<Stage>& AllStages() {
  static const std::vector<Stage> kAll = {
      Stage::kPreprocess, Stage::kTrain,   Stage::kCluster, Stage::kCrossmap,
      Stage::kSweep,      Stage::kDossier, Stage::kExport};
  return kAll;
}

absl::StatusOr<Stage> ParseStage(std::string_view name) {
  for (Stage stage : AllStages()) {
    if (StageName(stage) == name) return stage;
  }
  return absl::InvalidArgumentError(StrCat("unknown stage '", name, "'"));
}

const std::vector<Stage>& Upstream(Stage stage) {
  static const std::vector<Stage> kNone;
  static const std::vector<Stage> kTrain = {Stage::kPreprocess};
  static const std::vector<Stage> kCrossmap = {Stage::kTrain, Stage::kCluster};
  static const std::vector<Stage> kSweep = {Stage::kCrossmap};
  static const std::vector<Stage> kDossier = {Stage::kPreprocess, Stage::kTrain,
                                              Stage::kCluster};
  static const std::vector<Stage> kExport = {Stage::kCrossmap, Stage::kSweep,
                                             Stage::kDossier};
  switch (stage) {
    case Stage::kTrain:
      return kTrain;
    case Stage::kCrossmap:
      return kCrossmap;
    case Stage::kSweep:
      return kSweep;
    case Stage::kDossier:
      return kDossier;
    case Stage::kExport:
      return kExport;
    default:
      return kNone;
  }
}

std::string Layout::LevelAssignment(std::string_view level_name) {
  return StrCat("cluster/", level_name, ".tsv");
}

std::string Layout::ManifestFor(Stage stage) {
  return StrCat("manifests/", StageName(stage), ".json");
}

absl::StatusOr<Preprocessed> LoadPreprocessed(const fs::path& out) {
  Preprocessed pre;
  ASSIGN_OR_RETURN(std::string vocab_text, ReadFile(out / Layout::kVocabulary));
  std::vector<std::string> terms;
  std::vector<int64_t> df, tf;
  std::istringstream vocab_in(vocab_text);
  std::string line;
  for (int n = 0; std::getline(vocab_in, line);) {
    if (n++ == 0 || line.empty()) continue;
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 3) return absl::DataLossError("vocabulary: expected 3 fields");
    ASSIGN_OR_RETURN(long long d, ParseInt(f[1]));
    ASSIGN_OR_RETURN(long long t, ParseInt(f[2]));
    terms.emplace_back(f[0]);
    df.push_back(d);
    tf.push_back(t);
  }
  pre.vocabulary = corpus::Vocabulary(std::move(terms), std::move(df), std::move(tf));
  pre.bow.vocab_size = pre.vocabulary.size();

  ASSIGN_OR_RETURN(std::string bow_text, ReadFile(out / Layout::kBow));
  std::istringstream bow_in(bow_text);
  for (int n = 0; std::getline(bow_in, line);) {
    if (n++ == 0 || line.empty()) continue;
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 2) return absl::DataLossError("bow: expected 2 fields");
    pre.doc_ids.emplace_back(f[0]);
    std::vector<int>& words = pre.bow.docs.emplace_back();
    for (std::string_view token : SplitNonEmpty(f[1], ' ')) {
      ASSIGN_OR_RETURN(long long w, ParseInt(token));
      if (w < 0 || w >= pre.bow.vocab_size) {
        return absl::DataLossError("bow: term index out of range");
      }
      words.push_back(static_cast<int>(w));
    }
  }
  return pre;
}

absl::StatusOr<topic::ModelBundle> LoadModel(const fs::path& out) {
  topic::ModelFiles files;
  ASSIGN_OR_RETURN(files.theta_tsv, ReadFile(out / Layout::kTheta));
  ASSIGN_OR_RETURN(files.phi_tsv, ReadFile(out / Layout::kPhi));
  ASSIGN_OR_RETURN(files.assignments_tsv, ReadFile(out / Layout::kAssignments));
  ASSIGN_OR_RETURN(files.model_json, ReadFile(out / Layout::kModel));
  return topic::DecodeModel(files);
}

absl::StatusOr<Clustering> LoadClustering(const fs::path& out) {
  Clustering result;
  ASSIGN_OR_RETURN(json meta, ReadJson(out / Layout::kLevels));
  try {
    result.solution.min_cluster_size = meta.at("min_cluster_size").get<double>();
    result.num_categories = meta.at("num_categories").get<int>();
    for (const json& lj : meta.at("levels")) {
      cluster::ClusterLevel level;
      level.name = lj.at("name").get<std::string>();
      level.resolution = lj.at("resolution").get<double>();
      level.num_clusters = lj.at("num_clusters").get<int>();
      level.quality = lj.at("quality").get<double>();
      level.residual.assign(level.num_clusters, false);
      for (int c : lj.at("residual").get<std::vector<int>>()) {
        if (c < 0 || c >= level.num_clusters) {
          return absl::DataLossError("levels: residual cluster out of range");
        }
        level.residual[c] = true;
      }
      ASSIGN_OR_RETURN(std::string text,
                       ReadFile(out / Layout::LevelAssignment(level.name)));
      ASSIGN_OR_RETURN(cluster::DecodedAssignment decoded,
                       cluster::DecodeAssignment(text));
      if (result.solution.levels.empty()) {
        result.doc_ids = decoded.doc_ids;
      } else if (decoded.doc_ids != result.doc_ids) {
        return absl::DataLossError("cluster levels disagree on the document list");
      }
      for (int c : decoded.assignment) {
        if (c < 0 || c >= level.num_clusters) {
          return absl::DataLossError("assignment: cluster id out of range");
        }
      }
      level.assignment = std::move(decoded.assignment);
      result.solution.levels.push_back(std::move(level));
    }
  } catch (const json::exception& e) {
    return absl::DataLossError(StrCat("levels: ", e.what()));
  }
  if (result.solution.levels.empty()) return absl::DataLossError("levels: none");
  ASSIGN_OR_RETURN(std::string areas_text, ReadFile(out / Layout::kAreas));
  ASSIGN_OR_RETURN(result.areas, cluster::DecodeAreas(areas_text));
  return result;
}

absl::StatusOr<crossmap::CrossMap> LoadCrossMap(const fs::path& out) {
  crossmap::CrossMapFiles files;
  ASSIGN_OR_RETURN(files.p_ct_tsv, ReadFile(out / Layout::kPct));
  ASSIGN_OR_RETURN(files.p_tc_tsv, ReadFile(out / Layout::kPtc));
  ASSIGN_OR_RETURN(files.meta_json, ReadFile(out / Layout::kCrossmapMeta));
  return crossmap::DecodeCrossMap(files);
}

std::string Pipeline::ConfigHash(Stage stage) const {
  return Sha256Hex(config_.StageSection(StageName(stage)).dump());
}

uint64_t Pipeline::StageSeed(Stage stage) const {
  switch (stage) {
    case Stage::kTrain:
      return config_.lda.seed;
    case Stage::kCluster:
      return config_.cluster.seed;
    default:
      return 0;
  }
}

absl::StatusOr<std::map<std::string, std::string>> Pipeline::InputHashes(
    Stage stage) const {
  std::map<std::string, std::string> hashes;
  auto add = [&](const std::string& name, const fs::path& path) -> absl::Status {
    if (path.empty()) return absl::OkStatus();
    absl::StatusOr<std::string> hash = HashFile(path);
    if (!hash.ok()) {
      return absl::NotFoundError(
          StrCat("input ", name, " not readable: ", path.string()));
    }
    hashes[name] = *hash;
    return absl::OkStatus();
  };
  const RunConfig::Paths& p = config_.paths;
  switch (stage) {
    case Stage::kPreprocess:
      RETURN_IF_ERROR(add("corpus", p.corpus));
      RETURN_IF_ERROR(add("thesaurus", p.thesaurus));
      RETURN_IF_ERROR(add("stopwords", p.stopwords));
      RETURN_IF_ERROR(add("lemmas", p.lemmas));
      if (config_.corpus.noun_mode == corpus::NounSelector::Mode::kLexicon) {
        RETURN_IF_ERROR(add("nouns", p.nouns));
      }
      break;
    case Stage::kCluster:
      RETURN_IF_ERROR(add("corpus", p.corpus));
      break;
    case Stage::kDossier:
      RETURN_IF_ERROR(add("corpus", p.corpus));
      RETURN_IF_ERROR(add("thesaurus", p.thesaurus));
      RETURN_IF_ERROR(add("stopwords", p.stopwords));
      RETURN_IF_ERROR(add("lemmas", p.lemmas));
      break;
    case Stage::kExport: {
      const fs::path labels = out() / Layout::kLabels;
      if (fs::exists(labels)) RETURN_IF_ERROR(add("labels", labels));
      break;
    }
    default:
      break;
  }
  return hashes;
}

absl::Status Pipeline::Verify(Stage stage) const {
  const std::string_view name = StageName(stage);
  const fs::path manifest_path = out() / Layout::ManifestFor(stage);
  if (!fs::exists(manifest_path)) {
    return absl::FailedPreconditionError(
        StrCat("artifacts of stage '", name, "' are missing; run `mapcompare ",
                     name, "` first"));
  }
  ASSIGN_OR_RETURN(json manifest_json, ReadJson(manifest_path));
  ASSIGN_OR_RETURN(Manifest manifest, Manifest::FromJson(manifest_json));

  if (manifest.config_hash != ConfigHash(stage)) {
    return absl::FailedPreconditionError(StrCat(
        "configuration changed since stage '", name, "' ran", Rerun(stage)));
  }
  ASSIGN_OR_RETURN(auto inputs, InputHashes(stage));
  for (const auto& [input, hash] : inputs) {
    auto it = manifest.inputs.find(input);
    if (it == manifest.inputs.end() || it->second != hash) {
      return absl::FailedPreconditionError(StrCat(
          "input '", input, "' changed since stage '", name, "' ran", Rerun(stage)));
    }
  }
  if (inputs.size() != manifest.inputs.size()) {
    return absl::FailedPreconditionError(StrCat(
        "inputs of stage '", name, "' changed since it ran", Rerun(stage)));
  }
  for (const auto& [file, hash] : manifest.outputs) {
    absl::StatusOr<std::string> current = HashFile(out() / file);
    if (!current.ok()) {
      return absl::FailedPreconditionError(StrCat(
          "artifact '", file, "' of stage '", name, "' is missing", Rerun(stage)));
    }
    if (*current != hash) {
      return absl::FailedPreconditionError(StrCat(
          "artifact '", file, "' was modified after stage '", name, "' ran",
          Rerun(stage)));
    }
  }
  for (Stage up : Upstream(stage)) {
    RETURN_IF_ERROR(Verify(up));
    ASSIGN_OR_RETURN(std::string hash, HashFile(out() / Layout::ManifestFor(up)));
    auto it = manifest.upstream.find(std::string(StageName(up)));
    if (it == manifest.upstream.end() || it->second != hash) {
      return absl::FailedPreconditionError(
          StrCat("stage '", StageName(up), "' was rerun after stage '", name,
                       "' ran", Rerun(stage)));
    }
  }
  return absl::OkStatus();
}

absl::Status Pipeline::Run(Stage stage) {
  for (Stage up : Upstream(stage)) RETURN_IF_ERROR(Verify(up));
  ASSIGN_OR_RETURN(auto inputs, InputHashes(stage));

  const fs::path manifest_path = out() / Layout::ManifestFor(stage);
  std::error_code ec;
  fs::remove(manifest_path, ec);

  absl::StatusOr<Outputs> outputs;
  switch (stage) {
    case Stage::kPreprocess:
      outputs = Preprocess();
      break;
    case Stage::kTrain:
      outputs = Train();
      break;
    case Stage::kCluster:
      outputs = Cluster();
      break;
    case Stage::kCrossmap:
      outputs = CrossMapStage();
      break;
    case Stage::kSweep:
      outputs = SweepStage();
      break;
    case Stage::kDossier:
      outputs = Dossier();
      break;
    case Stage::kExport:
      outputs = Export();
      break;
  }
  if (!outputs.ok()) return outputs.status();

  Manifest manifest;
  manifest.stage = std::string(StageName(stage));
  manifest.config_hash = ConfigHash(stage);
  manifest.seed = StageSeed(stage);
  manifest.inputs = std::move(inputs);
  for (Stage up : Upstream(stage)) {
    ASSIGN_OR_RETURN(manifest.upstream[std::string(StageName(up))],
                     HashFile(out() / Layout::ManifestFor(up)));
  }
  for (const auto& [file, bytes] : *outputs) {
    RETURN_IF_ERROR(WriteFileAtomic(out() / file, bytes));
    manifest.outputs[file] = Sha256Hex(bytes);
  }
  return WriteFileAtomic(manifest_path, manifest.Serialize());
}

absl::Status Pipeline::RunThrough(Stage last) {
  for (Stage stage : AllStages()) {
    RETURN_IF_ERROR(Run(stage));
    if (stage == last) break;
  }
  return absl::OkStatus();
}

absl::StatusOr<Pipeline::Outputs> Pipeline::Preprocess() const {
  ASSIGN_OR_RETURN(std::vector<corpus::Document> docs,
                   corpus::IngestCorpus(config_.paths.corpus, config_.corpus.schema));
  ASSIGN_OR_RETURN(corpus::Thesaurus thesaurus,
                   corpus::Thesaurus::Load(config_.paths.thesaurus));
  ASSIGN_OR_RETURN(corpus::TextNormalizer normalizer, MakeNormalizer(config_));
  ASSIGN_OR_RETURN(corpus::NounSelector selector, MakeSelector(config_));
  corpus::TermExtractor extractor(thesaurus, std::move(normalizer), std::move(selector));

  std::vector<corpus::TermSequence> sequences;
  std::vector<std::string> doc_ids;
  sequences.reserve(docs.size());
  for (const corpus::Document& doc : docs) {
    sequences.push_back(extractor.Extract(doc));
    doc_ids.push_back(doc.id);
  }
  corpus::VocabularyOptions options;
  options.max_doc_share = config_.corpus.max_doc_share;
  options.drop_top_k = config_.corpus.drop_top_k;
  ASSIGN_OR_RETURN(corpus::Vocabulary vocab, corpus::BuildVocabulary(sequences, options));
  const corpus::BowCorpus bow = corpus::ToBow(sequences, vocab);

  int empty = 0;
  for (const auto& words : bow.docs) empty += words.empty();
  const json summary = {{"num_docs", bow.num_docs()},
                        {"vocab_size", vocab.size()},
                        {"num_tokens", bow.num_tokens()},
                        {"empty_docs", empty}};
  return Outputs{{Layout::kVocabulary, EncodeVocabulary(vocab)},
                 {Layout::kBow, EncodeBow(bow, doc_ids)},
                 {Layout::kPreprocessSummary, summary.dump(2) + "\n"}};
}

absl::StatusOr<Pipeline::Outputs> Pipeline::Train() const {
  ASSIGN_OR_RETURN(Preprocessed pre, LoadPreprocessed(out()));
  std::string trace = "sweep\tlog_likelihood\n";
  const int iterations = config_.lda.iterations;
  auto observer = [&](const topic::GibbsSampler& sampler) {
    if (sampler.sweeps() % kTraceEvery == 0 || sampler.sweeps() == iterations) {
      StrAppend(&trace, sampler.sweeps(), "\t",
                      FormatDouble(sampler.LogLikelihood()), "\n");
    }
  };
  ASSIGN_OR_RETURN(topic::TopicModel model, topic::Train(pre.bow, config_.lda, observer));
  topic::ModelBundle bundle{std::move(model), pre.doc_ids, pre.vocabulary.terms()};
  topic::ModelFiles files = topic::EncodeModel(bundle);
  return Outputs{{Layout::kTheta, std::move(files.theta_tsv)},
                 {Layout::kPhi, std::move(files.phi_tsv)},
                 {Layout::kAssignments, std::move(files.assignments_tsv)},
                 {Layout::kModel, std::move(files.model_json)},
                 {Layout::kTrace, std::move(trace)}};
}

absl::StatusOr<Pipeline::Outputs> Pipeline::Cluster() const {
  ASSIGN_OR_RETURN(std::vector<corpus::Document> docs,
                   corpus::IngestCorpus(config_.paths.corpus, config_.corpus.schema));
  const cluster::CitationGraph graph = cluster::BuildCitationGraph(docs);
  const cluster::WeightedGraph weighted = graph.ToWeightedGraph();
  cluster::ClusterOptions options;
  options.min_cluster_size = config_.cluster.min_cluster_size;
  options.seed = config_.cluster.seed;
  options.random_starts = config_.cluster.random_starts;
  ASSIGN_OR_RETURN(cluster::ClusterSolution solution,
                   cluster::BuildHierarchy(weighted, config_.cluster.resolutions, options));

  Outputs outputs;
  json levels = json::array();
  for (const cluster::ClusterLevel& level : solution.levels) {
    std::vector<int> residual;
    for (int c = 0; c < level.num_clusters; ++c) {
      if (level.residual[c]) residual.push_back(c);
    }
    levels.push_back({{"name", level.name},
                      {"resolution", level.resolution},
                      {"num_clusters", level.num_clusters},
                      {"quality", level.quality},
                      {"residual", residual},
                      {"sizes", level.ClusterSizes()}});
    outputs[Layout::LevelAssignment(level.name)] =
        cluster::EncodeAssignment(level, graph.ids());
  }

  const cluster::ClusterLevel& finest = solution.finest();
  const cluster::AreaSelection selection =
      cluster::SelectAreas(finest.assignment, docs, config_.cluster.field_share);
  std::optional<cluster::AreaGrouping> grouping;
  if (!selection.SelectedClusters().empty()) {
    cluster::GroupOptions group_options;
    group_options.resolution = config_.cluster.group_resolution;
    group_options.min_size = config_.cluster.group_min_size;
    group_options.seed = config_.cluster.seed;
    ASSIGN_OR_RETURN(grouping, cluster::GroupAreas(selection, finest.assignment,
                                                   graph, group_options));
  }
  outputs[Layout::kAreas] =
      cluster::EncodeAreas(selection, grouping ? &*grouping : nullptr);

  const json meta = {{"min_cluster_size", solution.min_cluster_size},
                     {"num_docs", graph.num_nodes()},
                     {"num_edges", graph.num_edges()},
                     {"levels", levels},
                     {"field_share", config_.cluster.field_share},
                     {"field_docs", selection.field_docs},
                     {"covered_field_docs", selection.covered_field_docs},
                     {"coverage", selection.coverage()},
                     {"selected_clusters", selection.SelectedClusters()},
                     {"num_categories", grouping ? grouping->num_categories : 0}};
  outputs[Layout::kLevels] = meta.dump(2) + "\n";
  return outputs;
}

absl::StatusOr<Pipeline::Outputs> Pipeline::CrossMapStage() const {
  ASSIGN_OR_RETURN(topic::ModelBundle model, LoadModel(out()));
  ASSIGN_OR_RETURN(Clustering clustering, LoadClustering(out()));
  RETURN_IF_ERROR(CheckSameDocs(model.doc_ids, clustering.doc_ids,
                                "topic model and clustering"));
  const std::vector<int> selected = clustering.areas.selection.SelectedClusters();
  if (selected.empty()) {
    return absl::FailedPreconditionError(
        "no cluster reaches the field share; lower cluster.field_share");
  }
  const std::vector<int>& assignment = clustering.solution.finest().assignment;
  const std::vector<int> doc_cluster = crossmap::RestrictToClusters(assignment, selected);
  ASSIGN_OR_RETURN(crossmap::CrossMap cm,
                   crossmap::Compute(model.model.theta(), doc_cluster, selected));
  crossmap::CrossMapFiles files = crossmap::EncodeCrossMap(cm);
  const crossmap::RelationGraph relations =
      crossmap::Relate(cm, config_.crossmap.tau_ct, config_.crossmap.tau_tc);
  return Outputs{{Layout::kPct, std::move(files.p_ct_tsv)},
                 {Layout::kPtc, std::move(files.p_tc_tsv)},
                 {Layout::kCrossmapMeta, std::move(files.meta_json)},
                 {Layout::kRelations,
                  crossmap::RelationGraphToJson(relations, cm).dump(2) + "\n"}};
}

absl::StatusOr<Pipeline::Outputs> Pipeline::SweepStage() const {
  ASSIGN_OR_RETURN(crossmap::CrossMap cm, LoadCrossMap(out()));
  const std::vector<double> grid = config_.SweepGrid();
  ASSIGN_OR_RETURN(auto ct, crossmap::Sweep(cm, crossmap::SweepSide::kClusterToTopic, grid));
  ASSIGN_OR_RETURN(auto tc, crossmap::Sweep(cm, crossmap::SweepSide::kTopicToCluster, grid));
  return Outputs{
      {Layout::kSweepCt,
       crossmap::SweepToJson(ct, crossmap::SweepSide::kClusterToTopic, cm).dump(2) +
           "\n"},
      {Layout::kSweepTc,
       crossmap::SweepToJson(tc, crossmap::SweepSide::kTopicToCluster, cm).dump(2) +
           "\n"}};
}

absl::StatusOr<Pipeline::Outputs> Pipeline::Dossier() const {
  ASSIGN_OR_RETURN(Preprocessed pre, LoadPreprocessed(out()));
  ASSIGN_OR_RETURN(topic::ModelBundle model, LoadModel(out()));
  ASSIGN_OR_RETURN(Clustering clustering, LoadClustering(out()));
  RETURN_IF_ERROR(CheckSameDocs(pre.doc_ids, clustering.doc_ids,
                                "preprocessed corpus and clustering"));
  ASSIGN_OR_RETURN(std::vector<corpus::Document> docs,
                   corpus::IngestCorpus(config_.paths.corpus, config_.corpus.schema));
  ASSIGN_OR_RETURN(corpus::Thesaurus thesaurus,
                   corpus::Thesaurus::Load(config_.paths.thesaurus));
  ASSIGN_OR_RETURN(corpus::TextNormalizer normalizer, MakeNormalizer(config_));
  const cluster::CitationGraph graph = cluster::BuildCitationGraph(docs);
  RETURN_IF_ERROR(CheckSameDocs(graph.ids(), pre.doc_ids, "corpus and artifacts"));
  const auto titles = TitlesById(docs);
  const RunConfig::Interpret& opt = config_.interpret;

  const std::vector<double> marginal = interpret::TermMarginal(pre.bow);
  const interpret::TopicMap topic_map = interpret::TopicDistances(model.model);

  json topics = json::array();
  for (int t = 0; t < model.model.num_topics(); ++t) {
    interpret::LabelDossier dossier;
    dossier.entity = crossmap::TopicKey(t);
    ASSIGN_OR_RETURN(dossier.top_terms,
                     interpret::TopicTopTerms(model.model, t, model.terms, marginal,
                                              opt.topic_terms, opt.lambda));
    ASSIGN_OR_RETURN(dossier.top_docs, interpret::TopicTopDocs(
                                           model.model, t, model.doc_ids, opt.topic_docs));
    std::vector<std::string> keys;
    for (const auto& item : dossier.top_terms) keys.push_back(item.key);
    dossier.rollup = interpret::RollupTerms(keys, thesaurus, normalizer);
    json j = interpret::DossierToJson(dossier);
    j["top_docs"] = WithTitles(j["top_docs"], titles);
    j["prevalence"] = topic_map.prevalence[t];
    j["lambda"] = opt.lambda;
    topics.push_back(std::move(j));
  }

  const cluster::ClusterSolution& solution = clustering.solution;
  const cluster::ClusterLevel& finest = solution.finest();
  std::vector<std::vector<int>> members(finest.num_clusters);
  for (size_t d = 0; d < finest.assignment.size(); ++d) {
    members[finest.assignment[d]].push_back(static_cast<int>(d));
  }
  json clusters = json::array();
  const cluster::DecodedAreas& areas = clustering.areas;
  for (size_t i = 0; i < areas.selection.areas.size(); ++i) {
    const cluster::Area& area = areas.selection.areas[i];
    if (!area.selected) continue;
    const std::vector<int>& m = members[area.cluster];
    interpret::LabelDossier dossier;
    dossier.entity = crossmap::ClusterKey(area.cluster);
    dossier.top_docs = interpret::ClusterTopDocs(m, graph, opt.cluster_docs);
    dossier.top_terms =
        interpret::ClusterTopTerms(m, pre.bow, pre.vocabulary.terms(), opt.cluster_terms);
    std::vector<std::string> keys;
    for (const auto& item : dossier.top_terms) keys.push_back(item.key);
    dossier.rollup = interpret::RollupTerms(keys, thesaurus, normalizer);
    json j = interpret::DossierToJson(dossier);
    j["top_docs"] = WithTitles(j["top_docs"], titles);
    j["size"] = area.total_count;
    j["field_count"] = area.field_count;
    j["field_share"] = area.share;
    j["category"] = areas.category[i];
    j["residual"] = static_cast<bool>(finest.residual[area.cluster]);
    json parents = json::object();
    if (!m.empty()) {
      for (size_t l = 0; l + 1 < solution.levels.size(); ++l) {
        parents[solution.levels[l].name] = solution.levels[l].assignment[m.front()];
      }
    }
    j["parents"] = std::move(parents);
    clusters.push_back(std::move(j));
  }

  return Outputs{{Layout::kTopicDossiers, topics.dump(2) + "\n"},
                 {Layout::kClusterDossiers, clusters.dump(2) + "\n"},
                 {Layout::kTopicMap, interpret::TopicMapToJson(topic_map).dump(2) + "\n"}};
}

absl::StatusOr<Pipeline::Outputs> Pipeline::Export() const {
  ASSIGN_OR_RETURN(std::unique_ptr<Api> api, Api::Load(config_));
  return Outputs{{Layout::kExplorer, api->Bundle().dump(2) + "\n"}};
}

}  // namespace mapcompare::service
