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
#ifndef MAPCOMPARE_INTERPRET_TOPIC_DISTANCE_H_
#define MAPCOMPARE_INTERPRET_TOPIC_DISTANCE_H_

#include <array>
#include <span>
#include <vector>

#include "json.hpp"
#include "mapcompare/matrix.h"
#include "mapcompare/topic/lda.h"

namespace mapcompare::interpret {

// Jensen-Shannon divergence with natural logarithms, in [0, ln 2].
double JensenShannon(std::span<const double> p, std::span<const double> q);

struct TopicMap {
  // T x T Jensen-Shannon divergences between topic term distributions.
  Matrix distance;
  // Classical principal-coordinates projection of the distances.
  std::vector<std::array<double, 2>> coordinates;
  // Mean theta per topic (circle sizes).
  std::vector<double> prevalence;
  std::array<double, 2> eigenvalues{0, 0};
  // Share of |eigenvalue| mass kept by the two axes.
  double explained = 0;
  // ||B - B_2||_F / ||B||_F for the double-centered matrix B and its rank-2
  // approximation B_2 (0 when B = 0).
  double reconstruction_error = 0;
};

// Principal coordinates of a symmetric distance matrix: eigenvectors of
// B = -1/2 J D^2 J scaled by sqrt(eigenvalue). Negative eigenvalues give a
// zero axis. Each axis is oriented so its largest-magnitude entry is positive.
TopicMap EmbedDistances(const Matrix& distance);

TopicMap TopicDistances(const topic::TopicModel& model);

nlohmann::json TopicMapToJson(const TopicMap& map);

}  // namespace mapcompare::interpret

#endif  // MAPCOMPARE_INTERPRET_TOPIC_DISTANCE_H_
