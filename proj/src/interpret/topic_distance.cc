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
#include "mapcompare/interpret/topic_distance.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "mapcompare/crossmap/crossmap_io.h"

namespace mapcompare::interpret {

double JensenShannon(std::span<const double> p, std::span<const double> q) {
  double p_part = 0;
  double q_part = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0) p_part += p[i] * std::log(p[i] / m);
    if (q[i] > 0) q_part += q[i] * std::log(q[i] / m);
  }
  return std::clamp(0.5 * (p_part + q_part), 0.0, std::numbers::ln2);
}

TopicMap EmbedDistances(const Matrix& distance) {
  const int k = distance.rows();
  TopicMap map;
  map.distance = distance;
  map.coordinates.assign(k, {0.0, 0.0});
  if (k == 0) return map;

  Eigen::MatrixXd squared(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) squared(i, j) = distance(i, j) * distance(i, j);
  }
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(k, k) - Eigen::MatrixXd::Constant(k, k, 1.0 / k);
  const Eigen::MatrixXd b = -0.5 * centering * squared * centering;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  const Eigen::VectorXd& values = solver.eigenvalues();  // Ascending.
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  double abs_total = 0;
  for (int i = 0; i < k; ++i) abs_total += std::abs(values(i));
  Eigen::MatrixXd approx = Eigen::MatrixXd::Zero(k, k);
  for (int axis = 0; axis < 2 && axis < k; ++axis) {
    const int index = k - 1 - axis;
    const double lambda = std::max(values(index), 0.0);
    map.eigenvalues[axis] = values(index);
    if (lambda <= 0) continue;
    Eigen::VectorXd v = vectors.col(index);
    Eigen::Index largest = 0;
    v.cwiseAbs().maxCoeff(&largest);
    if (v(largest) < 0) v = -v;
    approx += lambda * v * v.transpose();
    const double scale = std::sqrt(lambda);
    for (int i = 0; i < k; ++i) map.coordinates[i][axis] = v(i) * scale;
  }
  map.explained = abs_total > 0 ? (std::max(map.eigenvalues[0], 0.0) +
                                   std::max(map.eigenvalues[1], 0.0)) /
                                      abs_total
                                : 1.0;
  const double norm = b.norm();
  map.reconstruction_error = norm > 0 ? (b - approx).norm() / norm : 0.0;
  return map;
}

TopicMap TopicDistances(const topic::TopicModel& model) {
  const int k = model.num_topics();
  Matrix distance(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double js = JensenShannon(model.phi().row(i), model.phi().row(j));
      distance(i, j) = js;
      distance(j, i) = js;
    }
  }
  TopicMap map = EmbedDistances(distance);
  map.prevalence.assign(k, 0.0);
  const int n = model.num_docs();
  for (int d = 0; d < n; ++d) {
    for (int t = 0; t < k; ++t) map.prevalence[t] += model.theta()(d, t);
  }
  if (n > 0) {
    for (double& p : map.prevalence) p /= n;
  }
  return map;
}

nlohmann::json TopicMapToJson(const TopicMap& map) {
  nlohmann::json topics = nlohmann::json::array();
  for (size_t t = 0; t < map.coordinates.size(); ++t) {
    topics.push_back({{"id", crossmap::TopicKey(static_cast<int>(t))},
                      {"x", map.coordinates[t][0]},
                      {"y", map.coordinates[t][1]},
                      {"prevalence", t < map.prevalence.size() ? map.prevalence[t] : 0.0}});
  }
  nlohmann::json distance = nlohmann::json::array();
  for (int i = 0; i < map.distance.rows(); ++i) {
    std::span<const double> row = map.distance.row(i);
    distance.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return {{"topics", topics},
          {"distance", distance},
          {"eigenvalues", {map.eigenvalues[0], map.eigenvalues[1]}},
          {"explained", map.explained},
          {"reconstruction_error", map.reconstruction_error}};
}

}  // namespace mapcompare::interpret
