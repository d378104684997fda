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
// mapcompare <stage> --config FILE [--seed N] [--out DIR]
//
// Stages run in order: preprocess, train, cluster, crossmap, sweep, dossier,
// export. `run` executes all of them, `verify` checks artifact provenance and
// `serve` starts the HTTP API over finished artifacts.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "mapcompare/service/api.h"
#include "mapcompare/service/config.h"
#include "mapcompare/service/pipeline.h"
#include "mapcompare/service/server.h"

namespace {

using mapcompare::service::Stage;

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

int Fail(const absl::Status& status) {
  std::cerr << "mapcompare: " << status.message() << "\n";
  return 1;
}

int Serve(const mapcompare::service::RunConfig& config) {
  auto api = mapcompare::service::Api::Load(config);
  if (!api.ok()) return Fail(api.status());
  mapcompare::service::Server server(**api);
  if (absl::Status s = server.Start(config.serve.bind, config.serve.port); !s.ok()) {
    return Fail(s);
  }
  std::cout << "serving on http://" << config.serve.bind << ":" << server.port()
            << std::endl;
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(200));
  server.Stop();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare topic-model and citation-cluster maps of a field"};
  std::string command;
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> port;
  std::optional<std::string> bind;
  app.add_option("stage", command,
                 "preprocess|train|cluster|crossmap|sweep|dossier|export|run|verify|serve")
      ->required();
  app.add_option("--config", config_path, "YAML run configuration")->required();
  app.add_option("--seed", seed, "Override the topic and cluster seeds");
  app.add_option("--out", out, "Override the output directory");
  app.add_option("--port", port, "serve: listening port");
  app.add_option("--bind", bind, "serve: listening address");
  CLI11_PARSE(app, argc, argv);

  auto config = mapcompare::service::LoadConfig(config_path);
  if (!config.ok()) return Fail(config.status());
  if (seed) mapcompare::service::ApplySeed(*config, *seed);
  if (out) config->paths.output = *out;
  if (port) config->serve.port = *port;
  if (bind) config->serve.bind = *bind;

  if (command == "serve") return Serve(*config);

  mapcompare::service::Pipeline pipeline(*config);
  if (command == "verify") {
    for (Stage stage : mapcompare::service::AllStages()) {
      absl::Status s = pipeline.Verify(stage);
      std::cout << mapcompare::service::StageName(stage) << ": "
                << (s.ok() ? "ok" : std::string(s.message())) << "\n";
    }
    return 0;
  }
  if (absl::Status s = mapcompare::service::CheckInputs(*config); !s.ok()) {
    return Fail(s);
  }
  if (command == "run") {
    absl::Status s = pipeline.RunThrough(Stage::kExport);
    return s.ok() ? 0 : Fail(s);
  }
  auto stage = mapcompare::service::ParseStage(command);
  if (!stage.ok()) return Fail(stage.status());
  absl::Status s = pipeline.Run(*stage);
  return s.ok() ? 0 : Fail(s);
}
