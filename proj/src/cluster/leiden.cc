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
#include "mapcompare/cluster/leiden.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "mapcompare/rng.h"

namespace mapcompare::cluster {
namespace {

constexpr double kTolerance = 1e-12;

std::vector<int> RandomOrder(int n, SplitMix64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.NextBelow(static_cast<uint64_t>(i) + 1)]);
  }
  return order;
}

// Relabels to 0..k-1 in order of first appearance. Returns k.
int Compact(std::vector<int>& membership) {
  std::vector<int> relabel(membership.size(), -1);
  int next = 0;
  for (int& c : membership) {
    if (relabel[c] == -1) relabel[c] = next++;
    c = relabel[c];
  }
  return next;
}

// Accumulates edge weight from one node to each adjacent community.
class NeighborWeights {
 public:
  explicit NeighborWeights(int n) : weight_(n, 0.0), seen_(n, false) {}

  void Collect(const WeightedGraph& graph, int node,
               const std::vector<int>& membership) {
    Clear();
    auto nbrs = graph.neighbors(node);
    auto w = graph.weights(node);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      const int c = membership[nbrs[i]];
      if (!seen_[c]) {
        seen_[c] = true;
        touched_.push_back(c);
      }
      weight_[c] += w[i];
    }
  }

  double operator[](int community) const { return weight_[community]; }
  const std::vector<int>& touched() const { return touched_; }

  void Clear() {
    for (int c : touched_) {
      weight_[c] = 0;
      seen_[c] = false;
    }
    touched_.clear();
  }

 private:
  std::vector<double> weight_;
  std::vector<bool> seen_;
  std::vector<int> touched_;
};

// Queue-based local moving. Each node moves to the adjacent (or an empty)
// community with the largest strictly positive gain over staying put.
bool MoveNodes(const WeightedGraph& graph, double gamma, SplitMix64& rng,
               std::vector<int>& membership) {
  const int n = graph.num_nodes();
  std::vector<double> size(n, 0.0);
  std::vector<int> count(n, 0);
  for (int u = 0; u < n; ++u) {
    size[membership[u]] += graph.node_size(u);
    ++count[membership[u]];
  }
  std::vector<int> empty;
  for (int c = n - 1; c >= 0; --c) {
    if (count[c] == 0) empty.push_back(c);
  }

  std::deque<int> queue;
  std::vector<bool> queued(n, true);
  for (int u : RandomOrder(n, rng)) queue.push_back(u);

  NeighborWeights to(n);
  bool moved_any = false;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    queued[v] = false;
    const int current = membership[v];
    const double sv = graph.node_size(v);

    to.Collect(graph, v, membership);
    size[current] -= sv;
    --count[current];

    int best = current;
    double best_gain = to[current] - gamma * sv * size[current];
    int ties = 0;
    for (int c : to.touched()) {
      if (c == current) continue;
      const double gain = to[c] - gamma * sv * size[c];
      if (gain > best_gain + kTolerance) {
        best = c;
        best_gain = gain;
        ties = 1;
      } else if (best != current && gain >= best_gain - kTolerance &&
                 rng.NextBelow(++ties) == 0) {
        // Equal gains among other communities: pick one uniformly.
        best = c;
      }
    }
    if (best_gain < -kTolerance) {
      if (count[current] == 0) {
        best = current;
      } else {
        while (count[empty.back()] != 0) empty.pop_back();
        best = empty.back();
        empty.pop_back();
      }
    }

    membership[v] = best;
    size[best] += sv;
    ++count[best];
    if (count[current] == 0 && best != current) empty.push_back(current);

    if (best != current) {
      moved_any = true;
      for (int u : graph.neighbors(v)) {
        if (!queued[u] && membership[u] != best) {
          queued[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  return moved_any;
}

// Refinement: inside each community of `partition`, start from singletons and
// merge well-connected nodes into well-connected sub-communities, choosing
// among non-negative gains with probability ~ exp(gain / randomness).
std::vector<int> Refine(const WeightedGraph& graph,
                        const std::vector<int>& partition, double gamma,
                        double randomness, SplitMix64& rng) {
  const int n = graph.num_nodes();
  std::vector<double> community_size(n, 0.0);
  for (int u = 0; u < n; ++u) community_size[partition[u]] += graph.node_size(u);

  std::vector<int> refined(n);
  std::iota(refined.begin(), refined.end(), 0);
  std::vector<double> size(n);
  std::vector<int> count(n, 1);
  // Weight from each refined community to the rest of its parent community.
  std::vector<double> external(n, 0.0);
  for (int u = 0; u < n; ++u) {
    size[u] = graph.node_size(u);
    auto nbrs = graph.neighbors(u);
    auto w = graph.weights(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (partition[nbrs[i]] == partition[u]) external[u] += w[i];
    }
  }
  const std::vector<double> node_external = external;

  NeighborWeights to(n);
  std::vector<int> candidates;
  std::vector<double> gains;
  for (int v : RandomOrder(n, rng)) {
    if (count[refined[v]] != 1) continue;
    const double sv = graph.node_size(v);
    const double parent = community_size[partition[v]];
    if (node_external[v] < gamma * sv * (parent - sv) - kTolerance) continue;

    to.Collect(graph, v, refined);
    const int own = refined[v];
    candidates.assign(1, own);
    gains.assign(1, 0.0);
    for (int r : to.touched()) {
      if (r == own) continue;
      // Only sub-communities of the same parent; refined ids are node ids.
      if (partition[r] != partition[v]) continue;
      if (external[r] < gamma * size[r] * (parent - size[r]) - kTolerance) continue;
      const double gain = to[r] - gamma * sv * size[r];
      if (gain < -kTolerance) continue;
      candidates.push_back(r);
      gains.push_back(gain);
    }
    if (candidates.size() == 1) continue;

    const double max_gain = *std::max_element(gains.begin(), gains.end());
    double total = 0;
    for (double& g : gains) {
      g = std::exp((g - max_gain) / randomness);
      total += g;
    }
    double u = rng.NextDouble() * total;
    size_t pick = 0;
    while (pick + 1 < candidates.size() && u >= gains[pick]) {
      u -= gains[pick];
      ++pick;
    }
    const int target = candidates[pick];
    if (target == own) continue;

    refined[v] = target;
    size[own] -= sv;
    --count[own];
    size[target] += sv;
    ++count[target];
    external[target] += node_external[v] - 2 * to[target];
  }
  return refined;
}

// Either moves a random node into the community of one of its neighbors, or
// dissolves both communities into singletons. Lets the next pass leave a plateau
// that strictly improving moves cannot cross.
void Perturb(const WeightedGraph& graph, SplitMix64& rng,
             std::vector<int>& membership) {
  const int n = graph.num_nodes();
  const int v = static_cast<int>(rng.NextBelow(n));
  const int first = membership[v];
  int second = first;
  auto nbrs = graph.neighbors(v);
  if (!nbrs.empty()) second = membership[nbrs[rng.NextBelow(nbrs.size())]];
  if (second != first && rng.NextBelow(2) == 0) {
    membership[v] = second;
    return;
  }
  std::vector<bool> used(n, false);
  for (int c : membership) {
    if (c != first && c != second) used[c] = true;
  }
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (membership[u] != first && membership[u] != second) continue;
    while (used[next]) ++next;
    used[next] = true;
    membership[u] = next;
  }
}

// One Leiden run from `membership`; updates it in place.
void LeidenPass(const WeightedGraph& original, double gamma, double randomness,
                SplitMix64& rng, std::vector<int>& membership) {
  WeightedGraph aggregated;
  const WeightedGraph* graph = &original;
  std::vector<int> partition = membership;
  Compact(partition);
  std::vector<int> node_to_agg(original.num_nodes());
  std::iota(node_to_agg.begin(), node_to_agg.end(), 0);

  while (true) {
    MoveNodes(*graph, gamma, rng, partition);
    const int k = Compact(partition);
    if (k == graph->num_nodes()) break;

    std::vector<int> refined = Refine(*graph, partition, gamma, randomness, rng);
    const int k_refined = Compact(refined);
    std::vector<int> next_partition;
    WeightedGraph next;
    if (k_refined < graph->num_nodes()) {
      next = graph->Aggregate(refined);
      next_partition.assign(k_refined, 0);
      for (int u = 0; u < graph->num_nodes(); ++u) {
        next_partition[refined[u]] = partition[u];
      }
      for (int& a : node_to_agg) a = refined[a];
    } else {
      next = graph->Aggregate(partition);
      next_partition.resize(k);
      std::iota(next_partition.begin(), next_partition.end(), 0);
      for (int& a : node_to_agg) a = partition[a];
    }
    aggregated = std::move(next);
    graph = &aggregated;
    partition = std::move(next_partition);
  }
  for (int u = 0; u < original.num_nodes(); ++u) {
    membership[u] = partition[node_to_agg[u]];
  }
}

}  // namespace

Partition MergeSmallClusters(const WeightedGraph& graph,
                             std::vector<int> membership, double resolution,
                             double min_cluster_size) {
  Compact(membership);
  const WeightedGraph clusters = graph.Aggregate(membership);
  const int k = clusters.num_nodes();
  std::vector<double> size(k);
  std::vector<std::map<int, double>> links(k);
  for (int c = 0; c < k; ++c) {
    size[c] = clusters.node_size(c);
    auto nbrs = clusters.neighbors(c);
    auto w = clusters.weights(c);
    for (size_t i = 0; i < nbrs.size(); ++i) links[c][nbrs[i]] = w[i];
  }
  std::vector<int> merged_into(k);
  std::iota(merged_into.begin(), merged_into.end(), 0);
  std::vector<bool> residual(k, false);

  std::set<std::pair<double, int>> small;
  for (int c = 0; c < k; ++c) {
    if (size[c] < min_cluster_size) small.emplace(size[c], c);
  }
  while (!small.empty()) {
    const int a = small.begin()->second;
    small.erase(small.begin());
    if (links[a].empty()) {
      residual[a] = true;
      continue;
    }
    int best = -1;
    double best_gain = 0;
    for (auto [b, w] : links[a]) {
      const double gain = w - resolution * size[a] * size[b];
      if (best == -1 || gain > best_gain + kTolerance) {
        best = b;
        best_gain = gain;
      }
    }
    small.erase({size[best], best});
    for (auto [x, w] : links[a]) {
      links[x].erase(a);
      if (x == best) continue;
      links[best][x] += w;
      links[x][best] += w;
    }
    links[a].clear();
    size[best] += size[a];
    size[a] = 0;
    merged_into[a] = best;
    if (size[best] < min_cluster_size) small.emplace(size[best], best);
  }

  auto root = [&](int c) {
    while (merged_into[c] != c) c = merged_into[c];
    return c;
  };
  for (int& c : membership) c = root(c);

  Partition result;
  std::vector<int> old_label = membership;
  result.num_clusters = CanonicalizeMembership(graph, membership);
  result.residual.assign(result.num_clusters, false);
  for (size_t u = 0; u < membership.size(); ++u) {
    if (residual[old_label[u]]) result.residual[membership[u]] = true;
  }
  result.quality = CpmQuality(graph, membership, resolution);
  result.membership = std::move(membership);
  return result;
}

absl::StatusOr<Partition> Leiden(const WeightedGraph& graph,
                                 const LeidenOptions& options) {
  if (!(options.resolution > 0)) {
    return absl::InvalidArgumentError("resolution must be > 0");
  }
  if (graph.num_nodes() == 0) {
    return absl::InvalidArgumentError("graph has no nodes");
  }
  if (options.random_starts < 1 || options.max_iterations < 1 ||
      !(options.randomness > 0)) {
    return absl::InvalidArgumentError(
        "random_starts, max_iterations and randomness must be positive");
  }
  if (options.perturbations < 0) {
    return absl::InvalidArgumentError("perturbations must be >= 0");
  }
  const int n = graph.num_nodes();
  SplitMix64 seeds(options.seed);
  std::vector<int> best;
  double best_quality = 0;
  for (int start = 0; start < options.random_starts; ++start) {
    SplitMix64 rng = seeds.Split();
    std::vector<int> membership(n);
    std::iota(membership.begin(), membership.end(), 0);
    double quality = CpmQuality(graph, membership, options.resolution);
    int stale = 0;
    for (int pass = 0;
         pass < options.max_iterations && stale <= options.perturbations;
         ++pass) {
      std::vector<int> candidate = membership;
      if (stale > 0) Perturb(graph, rng, candidate);
      LeidenPass(graph, options.resolution, options.randomness, rng, candidate);
      const double q = CpmQuality(graph, candidate, options.resolution);
      if (q <= quality + kTolerance) {
        ++stale;
        continue;
      }
      stale = 0;
      membership = std::move(candidate);
      quality = q;
    }
    if (best.empty() || quality > best_quality + kTolerance) {
      best = std::move(membership);
      best_quality = quality;
    }
  }
  // A disconnected community always gains from being split.
  SplitDisconnected(graph, best);
  return MergeSmallClusters(graph, std::move(best), options.resolution,
                            options.min_cluster_size);
}

}  // namespace mapcompare::cluster
