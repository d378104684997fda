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
#ifndef MAPCOMPARE_SERVICE_ARTIFACTS_H_
#define MAPCOMPARE_SERVICE_ARTIFACTS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"

namespace mapcompare::service {

// Writes to a sibling temporary file, flushes it, then renames over `path`.
absl::Status WriteFileAtomic(const std::filesystem::path& path,
                             std::string_view content);
absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);

std::string Sha256Hex(std::string_view data);
absl::StatusOr<std::string> HashFile(const std::filesystem::path& path);

// Provenance of one stage run. Outputs are relative to the output root.
// No timestamps, so identical runs give identical manifests.
struct Manifest {
  std::string stage;
  std::string config_hash;
  uint64_t seed = 0;
  std::map<std::string, std::string> inputs;    // external input -> hash
  std::map<std::string, std::string> upstream;  // stage -> manifest hash
  std::map<std::string, std::string> outputs;   // file -> hash

  nlohmann::json ToJson() const;
  static absl::StatusOr<Manifest> FromJson(const nlohmann::json& j);
  std::string Serialize() const;
};

}  // namespace mapcompare::service

#endif  // MAPCOMPARE_SERVICE_ARTIFACTS_H_
