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
#include "mapcompare/service/config.h"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "mapcompare/strings.h"
#include "mapcompare/crossmap/relations.h"

namespace mapcompare::service {
namespace {

using nlohmann::json;

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  if (value.empty()) return {};
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

template <typename T>
void Read(const YAML::Node& node, const char* key, T& target) {
  if (node && node[key]) target = node[key].as<T>();
}

std::string ModeName(corpus::NounSelector::Mode mode) {
  switch (mode) {
    case corpus::NounSelector::Mode::kAcceptAll:
      return "accept_all";
    case corpus::NounSelector::Mode::kLexicon:
      return "lexicon";
    case corpus::NounSelector::Mode::kPreTagged:
      return "pretagged";
    case corpus::NounSelector::Mode::kCustom:
      return "custom";
  }
  return "unknown";
}

}  // namespace

std::vector<double> RunConfig::SweepGrid() const {
  return crossmap.sweep.empty() ? crossmap::DefaultSweepGrid() : crossmap.sweep;
}

json RunConfig::StageSection(std::string_view stage) const {
  const json corpus_section = {
      {"noun_mode", ModeName(corpus.noun_mode)},
      {"max_doc_share", corpus.max_doc_share},
      {"drop_top_k", corpus.drop_top_k},
      {"fields",
       {corpus.schema.id, corpus.schema.title, corpus.schema.abstract,
        corpus.schema.references, corpus.schema.in_field, corpus.schema.year,
        corpus.schema.terms}}};
  const json lda_section = {{"k", lda.k},
                            {"alpha", lda.EffectiveAlpha()},
                            {"beta", lda.beta},
                            {"iterations", lda.iterations},
                            {"seed", lda.seed},
                            {"min_probability", lda.min_probability}};
  const json cluster_section = {{"resolutions", cluster.resolutions},
                                {"min_cluster_size", cluster.min_cluster_size},
                                {"field_share", cluster.field_share},
                                {"group_resolution", cluster.group_resolution},
                                {"group_min_size", cluster.group_min_size},
                                {"seed", cluster.seed},
                                {"random_starts", cluster.random_starts}};
  const json crossmap_section = {{"tct", crossmap.tau_ct}, {"ttc", crossmap.tau_tc}};
  const json interpret_section = {{"topic_terms", interpret.topic_terms},
                                  {"topic_docs", interpret.topic_docs},
                                  {"cluster_docs", interpret.cluster_docs},
                                  {"cluster_terms", interpret.cluster_terms},
                                  {"lambda", interpret.lambda}};
  if (stage == "preprocess") return {{"corpus", corpus_section}};
  if (stage == "train") return {{"lda", lda_section}};
  if (stage == "cluster") {
    return {{"cluster", cluster_section}, {"fields", corpus_section["fields"]}};
  }
  if (stage == "crossmap") return {{"crossmap", crossmap_section}};
  if (stage == "sweep") return {{"sweep", SweepGrid()}};
  if (stage == "dossier") return {{"interpret", interpret_section}};
  if (stage == "export") {
    return {{"crossmap", crossmap_section}, {"sweep", SweepGrid()}};
  }
  return json::object();
}

absl::StatusOr<RunConfig> ParseConfig(const std::string& yaml,
                                      const std::filesystem::path& base_dir) {
  RunConfig config;
  YAML::Node root;
  try {
    root = YAML::Load(yaml);
  } catch (const YAML::Exception& e) {
    return absl::InvalidArgumentError(StrCat("config: ", e.what()));
  }
  if (!root.IsMap()) {
    return absl::InvalidArgumentError("config must be a key-value document");
  }
  try {
    if (const YAML::Node paths = root["paths"]) {
      std::string value;
      auto path = [&](const char* key, std::filesystem::path& target) {
        if (paths[key]) target = Resolve(base_dir, paths[key].as<std::string>());
      };
      path("corpus", config.paths.corpus);
      path("thesaurus", config.paths.thesaurus);
      path("stopwords", config.paths.stopwords);
      path("lemmas", config.paths.lemmas);
      path("nouns", config.paths.nouns);
      if (paths["output"]) {
        config.paths.output = Resolve(base_dir, paths["output"].as<std::string>());
      } else {
        config.paths.output = base_dir / "out";
      }
    } else {
      config.paths.output = base_dir / "out";
    }

    if (const YAML::Node c = root["corpus"]) {
      if (c["noun_mode"]) {
        const std::string mode = c["noun_mode"].as<std::string>();
        if (mode == "accept_all") {
          config.corpus.noun_mode = corpus::NounSelector::Mode::kAcceptAll;
        } else if (mode == "lexicon") {
          config.corpus.noun_mode = corpus::NounSelector::Mode::kLexicon;
        } else if (mode == "pretagged") {
          config.corpus.noun_mode = corpus::NounSelector::Mode::kPreTagged;
        } else {
          return absl::InvalidArgumentError(
              StrCat("corpus.noun_mode: unknown mode '", mode,
                           "' (accept_all, lexicon, pretagged)"));
        }
      }
      Read(c, "max_doc_share", config.corpus.max_doc_share);
      Read(c, "drop_top_k", config.corpus.drop_top_k);
      if (const YAML::Node f = c["fields"]) {
        Read(f, "id", config.corpus.schema.id);
        Read(f, "title", config.corpus.schema.title);
        Read(f, "abstract", config.corpus.schema.abstract);
        Read(f, "references", config.corpus.schema.references);
        Read(f, "in_field", config.corpus.schema.in_field);
        Read(f, "year", config.corpus.schema.year);
        Read(f, "terms", config.corpus.schema.terms);
      }
    }

    if (const YAML::Node l = root["lda"]) {
      Read(l, "k", config.lda.k);
      if (l["alpha"]) config.lda.alpha = l["alpha"].as<double>();
      Read(l, "beta", config.lda.beta);
      Read(l, "iterations", config.lda.iterations);
      Read(l, "seed", config.lda.seed);
      Read(l, "min_probability", config.lda.min_probability);
    }

    if (const YAML::Node c = root["cluster"]) {
      Read(c, "resolutions", config.cluster.resolutions);
      Read(c, "min_cluster_size", config.cluster.min_cluster_size);
      Read(c, "field_share", config.cluster.field_share);
      Read(c, "group_resolution", config.cluster.group_resolution);
      Read(c, "group_min_size", config.cluster.group_min_size);
      Read(c, "seed", config.cluster.seed);
      Read(c, "random_starts", config.cluster.random_starts);
    }

    if (const YAML::Node c = root["crossmap"]) {
      Read(c, "tct", config.crossmap.tau_ct);
      Read(c, "ttc", config.crossmap.tau_tc);
      Read(c, "sweep", config.crossmap.sweep);
    }

    if (const YAML::Node i = root["interpret"]) {
      Read(i, "topic_terms", config.interpret.topic_terms);
      Read(i, "topic_docs", config.interpret.topic_docs);
      Read(i, "cluster_docs", config.interpret.cluster_docs);
      Read(i, "cluster_terms", config.interpret.cluster_terms);
      Read(i, "lambda", config.interpret.lambda);
    }

    if (const YAML::Node s = root["serve"]) {
      Read(s, "bind", config.serve.bind);
      Read(s, "port", config.serve.port);
    }
  } catch (const YAML::Exception& e) {
    return absl::InvalidArgumentError(StrCat("config: ", e.what()));
  }

  if (absl::Status status = config.lda.Validate(); !status.ok()) {
    return absl::InvalidArgumentError(StrCat("lda: ", status.message()));
  }
  if (!(config.crossmap.tau_ct > 0) || !(config.crossmap.tau_tc > 0)) {
    return absl::InvalidArgumentError("crossmap thresholds must be > 0");
  }
  if (config.corpus.noun_mode == corpus::NounSelector::Mode::kLexicon &&
      config.paths.nouns.empty()) {
    return absl::InvalidArgumentError("lexicon noun mode needs paths.nouns");
  }
  return config;
}

absl::StatusOr<RunConfig> LoadConfig(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    return absl::NotFoundError(StrCat("cannot open config ", path.string()));
  }
  std::stringstream buffer;
  buffer << input.rdbuf();
  return ParseConfig(buffer.str(), std::filesystem::absolute(path).parent_path());
}

void ApplySeed(RunConfig& config, uint64_t seed) {
  config.lda.seed = seed;
  config.cluster.seed = seed;
}

absl::Status CheckInputs(const RunConfig& config) {
  auto check = [](const std::filesystem::path& p, std::string_view what,
                  bool required) -> absl::Status {
    if (p.empty()) {
      return required ? absl::InvalidArgumentError(
                            StrCat("config is missing paths.", what))
                      : absl::OkStatus();
    }
    if (!std::filesystem::is_regular_file(p)) {
      return absl::NotFoundError(
          StrCat("paths.", what, " does not exist: ", p.string()));
    }
    return absl::OkStatus();
  };
  for (absl::Status s :
       {check(config.paths.corpus, "corpus", true),
        check(config.paths.thesaurus, "thesaurus", true),
        check(config.paths.stopwords, "stopwords", false),
        check(config.paths.lemmas, "lemmas", false),
        check(config.paths.nouns, "nouns", false)}) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

}  // namespace mapcompare::service
