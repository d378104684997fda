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
#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

namespace mapcompare::testing {

std::set<std::string> VocabularyOracle(
    const std::vector<std::vector<std::string>>& docs, double max_doc_share,
    int drop_top_k) {
  std::map<std::string, int> df;
  std::map<std::string, int> tf;
  for (const auto& doc : docs) {
    std::set<std::string> seen(doc.begin(), doc.end());
    for (const auto& term : seen) ++df[term];
    for (const auto& term : doc) ++tf[term];
  }
  std::vector<std::pair<int, std::string>> survivors;
  for (const auto& [term, count] : df) {
    if (static_cast<double>(count) / docs.size() >= max_doc_share) continue;
    survivors.push_back({-tf[term], term});
  }
  std::sort(survivors.begin(), survivors.end());
  std::set<std::string> out;
  for (size_t i = 0; i < survivors.size(); ++i) {
    if (static_cast<int>(i) >= drop_top_k) out.insert(survivors[i].second);
  }
  return out;
}

std::set<std::pair<std::string, std::string>> CitationEdgesOracle(
    const std::vector<std::string>& ids,
    const std::vector<std::vector<std::string>>& references) {
  std::set<std::string> members(ids.begin(), ids.end());
  std::set<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < ids.size(); ++i) {
    for (const std::string& ref : references[i]) {
      if (ref == ids[i] || !members.count(ref)) continue;
      edges.insert(std::minmax(ids[i], ref));
    }
  }
  return edges;
}

double CpmOracle(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& membership, double resolution) {
  double quality = 0;
  for (auto [u, v] : edges) {
    if (membership[u] == membership[v]) quality += 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (membership[i] == membership[j]) quality -= resolution;
    }
  }
  return quality;
}

double BestCpmOracle(int n, const std::vector<std::pair<int, int>>& edges,
                     double resolution) {
  // Restricted growth strings enumerate each set partition exactly once.
  std::vector<int> rgs(n, 0);
  double best = -1e300;
  std::function<void(int, int)> visit = [&](int pos, int max_label) {
    if (pos == n) {
      best = std::max(best, CpmOracle(n, edges, rgs, resolution));
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[pos] = label;
      visit(pos + 1, std::max(max_label, label));
    }
  };
  if (n == 0) return 0;
  rgs[0] = 0;
  visit(1, 0);
  return best;
}

std::pair<double, std::vector<int>> BestWeightedCpmOracle(const DenseMatrix& weights,
                                                          double resolution) {
  const int n = static_cast<int>(weights.size());
  std::vector<int> rgs(n, 0), best_partition(n, 0);
  double best = -1e300;
  std::function<void(int, int, double)> visit = [&](int pos, int max_label,
                                                    double quality) {
    if (pos == n) {
      if (quality > best) {
        best = quality;
        best_partition = rgs;
      }
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      double gain = 0;
      for (int j = 0; j < pos; ++j) {
        if (rgs[j] == label) gain += weights[pos][j] - resolution;
      }
      rgs[pos] = label;
      visit(pos + 1, std::max(max_label, label), quality + gain);
    }
  };
  if (n == 0) return {0.0, {}};
  visit(1, 0, 0.0);
  return {best, best_partition};
}

NaiveCrossMap CrossMapOracle(const DenseMatrix& q, const std::vector<int>& cluster,
                             int num_clusters) {
  const int n = static_cast<int>(q.size());
  const int t_count = n == 0 ? 0 : static_cast<int>(q[0].size());
  NaiveCrossMap out;
  out.p_ct.assign(num_clusters, std::vector<double>(t_count, 0.0));
  out.p_tc.assign(t_count, std::vector<double>(num_clusters, 0.0));
  for (int c = 0; c < num_clusters; ++c) {
    for (int t = 0; t < t_count; ++t) {
      double numerator = 0, cluster_size = 0, topic_mass = 0;
      for (int i = 0; i < n; ++i) {
        const double r = cluster[i] == c ? 1.0 : 0.0;
        numerator += q[i][t] * r;
        cluster_size += r;
        topic_mass += q[i][t];
      }
      out.p_ct[c][t] = cluster_size > 0 ? numerator / cluster_size : 0.0;
      out.p_tc[t][c] = topic_mass > 0 ? numerator / topic_mass : 0.0;
    }
  }
  return out;
}

CensusCount CensusOracle(int num_topics, int num_clusters,
                         const std::vector<std::pair<int, int>>& edges) {
  // Nodes 0..T-1 are topics, T..T+C-1 clusters.
  const int total = num_topics + num_clusters;
  std::vector<std::vector<int>> adjacency(total);
  for (auto [t, c] : edges) {
    adjacency[t].push_back(num_topics + c);
    adjacency[num_topics + c].push_back(t);
  }
  std::vector<int> component(total, -1);
  CensusCount census;
  for (int start = 0; start < total; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> stack = {start}, nodes;
    component[start] = start;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int w : adjacency[v]) {
        if (component[w] < 0) {
          component[w] = start;
          stack.push_back(w);
        }
      }
    }
    int topics = 0, clusters = 0, degree_sum = 0;
    for (int v : nodes) {
      (v < num_topics ? topics : clusters) += 1;
      degree_sum += static_cast<int>(adjacency[v].size());
    }
    const int edge_count = degree_sum / 2;
    if (nodes.size() == 1) {
      (topics == 1 ? census.unique_topics : census.unique_clusters) += 1;
    } else if (topics == 1 && clusters == 1) {
      census.one_to_one += 1;
    } else if ((topics == 1 || clusters == 1) &&
               edge_count == static_cast<int>(nodes.size()) - 1) {
      // A star: the lone node on one side touches every other node once.
      census.one_to_many += 1;
    } else {
      census.many_to_many += 1;
    }
  }
  return census;
}

double JensenShannonOracle(const std::vector<double>& p, const std::vector<double>& q) {
  double kl_p = 0, kl_q = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0) kl_p += p[i] * std::log(p[i] / m);
    if (q[i] > 0) kl_q += q[i] * std::log(q[i] / m);
  }
  return 0.5 * kl_p + 0.5 * kl_q;
}

std::vector<double> RandomDistribution(std::mt19937_64& rng, int size,
                                       double zero_probability) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out(size);
  double total = 0;
  for (double& x : out) {
    x = unit(rng) < zero_probability ? 0.0 : -std::log(1.0 - unit(rng));
    total += x;
  }
  if (total == 0) {
    out[0] = 1.0;
    return out;
  }
  for (double& x : out) x /= total;
  return out;
}

}  // namespace mapcompare::testing
