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
#ifndef MAPCOMPARE_SERVICE_SERVER_H_
#define MAPCOMPARE_SERVICE_SERVER_H_

#include <memory>
#include <string>
#include <thread>

#include "absl/status/status.h"
#include "mapcompare/service/api.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace mapcompare::service {

// HTTP front end for Api. Routes:
//   GET  /api/summary
//   GET  /api/topics
//   GET  /api/topics/{id}?lambda=
//   GET  /api/clusters
//   GET  /api/clusters/{id}
//   GET  /api/relations?tct=&ttc=
//   GET  /api/sweep?side=
//   GET  /api/topic-map
//   POST /api/labels   {"entity", "label", "author"}
class Server {
 public:
  explicit Server(Api& api);
  ~Server();

  // Binds and serves on a background thread. Port 0 picks a free port.
  absl::Status Start(const std::string& host, int port);
  int port() const { return port_; }
  void Stop();
  // Blocks until Stop() is called from another thread.
  void Wait();

 private:
  Api& api_;
  std::unique_ptr<httplib::Server> http_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace mapcompare::service

#endif  // MAPCOMPARE_SERVICE_SERVER_H_
