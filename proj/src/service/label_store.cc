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
#include "mapcompare/service/label_store.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <ctime>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string_view>

#include "mapcompare/strings.h"

namespace mapcompare::service {
namespace {

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json LabelRecord::ToJson() const {
  return {{"seq", sequence},
          {"entity", entity},
          {"label", label},
          {"author", author},
          {"timestamp", timestamp}};
}

absl::StatusOr<std::unique_ptr<LabelStore>> LabelStore::Open(
    const std::filesystem::path& path) {
  std::unique_ptr<LabelStore> store(new LabelStore(path));
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (!std::filesystem::exists(path)) return store;

  std::ifstream input(path, std::ios::binary);
  std::stringstream buffer;
  buffer << input.rdbuf();
  const std::string content = buffer.str();

  size_t start = 0;
  size_t line_number = 0;
  while (start < content.size()) {
    const size_t end = content.find('\n', start);
    ++line_number;
    if (end == std::string::npos) {
      // Torn tail: drop it so the next append starts on a fresh line.
      std::filesystem::resize_file(path, start, ec);
      if (ec) {
        return absl::InternalError(
            StrCat("cannot truncate ", path.string(), ": ", ec.message()));
      }
      break;
    }
    const std::string_view line(content.data() + start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::DataLossError(StrCat(path.string(), " line ", line_number,
                                              ": not a label record"));
    }
    LabelRecord record;
    try {
      record.sequence = j.at("seq").get<int64_t>();
      record.entity = j.at("entity").get<std::string>();
      record.label = j.at("label").get<std::string>();
      record.author = j.value("author", "");
      record.timestamp = j.value("timestamp", "");
    } catch (const nlohmann::json::exception& e) {
      return absl::DataLossError(
          StrCat(path.string(), " line ", line_number, ": ", e.what()));
    }
    store->next_sequence_ = std::max(store->next_sequence_, record.sequence + 1);
    store->current_[record.entity] = std::move(record);
  }
  return store;
}

absl::StatusOr<LabelRecord> LabelStore::Append(const std::string& entity,
                                               const std::string& label,
                                               const std::string& author) {
  std::lock_guard<std::mutex> lock(mu_);
  LabelRecord record{next_sequence_, entity, label, author, UtcNow()};
  const std::string line = record.ToJson().dump() + "\n";
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) {
    return absl::InternalError(
        StrCat("cannot open ", path_.string(), ": ", std::strerror(errno)));
  }
  size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      return absl::InternalError(
          StrCat("append to ", path_.string(), ": ", std::strerror(err)));
    }
    written += static_cast<size_t>(n);
  }
  if (::fsync(fd) != 0) {
    const int err = errno;
    ::close(fd);
    return absl::InternalError(
        StrCat("fsync ", path_.string(), ": ", std::strerror(err)));
  }
  ::close(fd);
  ++next_sequence_;
  current_[entity] = record;
  return record;
}

std::optional<LabelRecord> LabelStore::Current(const std::string& entity) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = current_.find(entity);
  if (it == current_.end()) return std::nullopt;
  return it->second;
}

std::map<std::string, LabelRecord> LabelStore::Snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return current_;
}

int64_t LabelStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return next_sequence_ - 1;
}

}  // namespace mapcompare::service
