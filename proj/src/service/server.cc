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
#include "mapcompare/service/server.h"

#include <optional>
#include <string_view>

#include "mapcompare/strings.h"
#include "httplib.h"

namespace mapcompare::service {
namespace {

void Reply(httplib::Response& res, const ApiResponse& response) {
  res.status = response.status;
  res.set_content(response.body.dump(), "application/json");
}

std::optional<std::string> Param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

std::optional<std::string_view> View(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return std::string_view(*s);
}

}  // namespace

Server::Server(Api& api) : api_(api), http_(std::make_unique<httplib::Server>()) {
  httplib::Server& http = *http_;
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  http.Get("/api/summary", [this](const httplib::Request&, httplib::Response& res) {
    Reply(res, api_.Summary());
  });
  http.Get("/api/topics", [this](const httplib::Request&, httplib::Response& res) {
    Reply(res, api_.Topics());
  });
  http.Get(R"(/api/topics/([^/]+))",
           [this](const httplib::Request& req, httplib::Response& res) {
             const std::optional<std::string> lambda = Param(req, "lambda");
             Reply(res, api_.Topic(req.matches[1].str(), View(lambda)));
           });
  http.Get("/api/clusters", [this](const httplib::Request&, httplib::Response& res) {
    Reply(res, api_.Clusters());
  });
  http.Get(R"(/api/clusters/([^/]+))",
           [this](const httplib::Request& req, httplib::Response& res) {
             Reply(res, api_.Cluster(req.matches[1].str()));
           });
  http.Get("/api/relations", [this](const httplib::Request& req, httplib::Response& res) {
    const std::optional<std::string> tct = Param(req, "tct");
    const std::optional<std::string> ttc = Param(req, "ttc");
    Reply(res, api_.Relations(View(tct), View(ttc)));
  });
  http.Get("/api/sweep", [this](const httplib::Request& req, httplib::Response& res) {
    const std::optional<std::string> side = Param(req, "side");
    Reply(res, api_.Sweep(View(side)));
  });
  http.Get("/api/topic-map", [this](const httplib::Request&, httplib::Response& res) {
    Reply(res, api_.TopicMap());
  });
  http.Post("/api/labels", [this](const httplib::Request& req, httplib::Response& res) {
    Reply(res, api_.PostLabel(req.body));
  });
  http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(
          nlohmann::json{{"error", StrCat("no route for ", req.method, " ",
                                                req.path)}}
              .dump(),
          "application/json");
    }
  });
}

Server::~Server() { Stop(); }

absl::Status Server::Start(const std::string& host, int port) {
  if (port == 0) {
    port_ = http_->bind_to_any_port(host);
  } else {
    port_ = http_->bind_to_port(host, port) ? port : -1;
  }
  if (port_ < 0) {
    return absl::UnavailableError(StrCat("cannot bind ", host, ":", port));
  }
  thread_ = std::thread([this] { http_->listen_after_bind(); });
  return absl::OkStatus();
}

void Server::Stop() {
  if (http_) http_->stop();
  if (thread_.joinable()) thread_.join();
}

void Server::Wait() {
  if (thread_.joinable()) thread_.join();
}

}  // namespace mapcompare::service
