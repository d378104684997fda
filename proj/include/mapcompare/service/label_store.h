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
#ifndef MAPCOMPARE_SERVICE_LABEL_STORE_H_
#define MAPCOMPARE_SERVICE_LABEL_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace mapcompare::service {

struct LabelRecord {
  int64_t sequence = 0;
  std::string entity;
  std::string label;
  std::string author;
  std::string timestamp;  // UTC, ISO 8601.

  nlohmann::json ToJson() const;
};

// Append-only JSONL log of human labels. Each append is fsynced before it is
// acknowledged; the current label of an entity is its latest record.
class LabelStore {
 public:
  // Replays an existing log. A torn final line left by a crash is discarded.
  static absl::StatusOr<std::unique_ptr<LabelStore>> Open(
      const std::filesystem::path& path);

  absl::StatusOr<LabelRecord> Append(const std::string& entity,
                                     const std::string& label,
                                     const std::string& author);

  std::optional<LabelRecord> Current(const std::string& entity) const;
  std::map<std::string, LabelRecord> Snapshot() const;
  int64_t size() const;

 private:
  explicit LabelStore(std::filesystem::path path) : path_(std::move(path)) {}

  std::filesystem::path path_;
  mutable std::mutex mu_;
  int64_t next_sequence_ = 1;
  std::map<std::string, LabelRecord> current_;
};

}  // namespace mapcompare::service

#endif  // MAPCOMPARE_SERVICE_LABEL_STORE_H_
