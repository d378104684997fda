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
#include "mapcompare/service/artifacts.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "mapcompare/strings.h"

namespace mapcompare::service {

absl::Status WriteFileAtomic(const std::filesystem::path& path,
                             std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      return absl::InternalError(StrCat("cannot create ",
                                              path.parent_path().string(), ": ",
                                              ec.message()));
    }
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) {
    return absl::InternalError(
        StrCat("cannot write ", tmp.string(), ": ", std::strerror(errno)));
  }
  size_t written = 0;
  while (written < content.size()) {
    const ssize_t n = ::write(fd, content.data() + written, content.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      return absl::InternalError(
          StrCat("write ", tmp.string(), ": ", std::strerror(err)));
    }
    written += static_cast<size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    return absl::InternalError(
        StrCat("rename to ", path.string(), ": ", ec.message()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) return absl::NotFoundError(StrCat("cannot open ", path.string()));
  std::stringstream buffer;
  buffer << input.rdbuf();
  return buffer.str();
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

absl::StatusOr<std::string> HashFile(const std::filesystem::path& path) {
  absl::StatusOr<std::string> content = ReadFile(path);
  if (!content.ok()) return content.status();
  return Sha256Hex(*content);
}

nlohmann::json Manifest::ToJson() const {
  return {{"stage", stage},       {"config_hash", config_hash},
          {"seed", seed},         {"inputs", inputs},
          {"upstream", upstream}, {"outputs", outputs}};
}

absl::StatusOr<Manifest> Manifest::FromJson(const nlohmann::json& j) {
  Manifest m;
  try {
    m.stage = j.at("stage").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::string>();
    m.seed = j.at("seed").get<uint64_t>();
    m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    m.upstream = j.at("upstream").get<std::map<std::string, std::string>>();
    m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& e) {
    return absl::DataLossError(StrCat("manifest: ", e.what()));
  }
  return m;
}

std::string Manifest::Serialize() const { return ToJson().dump(2) + "\n"; }

}  // namespace mapcompare::service
