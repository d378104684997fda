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
// Reference computations used to check the library. Each one is written from
// the definitions directly, with no shared code paths.

#ifndef MAPCOMPARE_TESTS_ORACLES_H_
#define MAPCOMPARE_TESTS_ORACLES_H_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mapcompare::testing {

using DenseMatrix = std::vector<std::vector<double>>;

// Terms surviving the share cut then the top-k cut, by plain counting.
std::set<std::string> VocabularyOracle(
    const std::vector<std::vector<std::string>>& docs, double max_doc_share,
    int drop_top_k);

// Undirected in-corpus citation pairs {a, b} with a < b lexicographically.
std::set<std::pair<std::string, std::string>> CitationEdgesOracle(
    const std::vector<std::string>& ids,
    const std::vector<std::vector<std::string>>& references);

// CPM quality of a partition of an unweighted graph on n nodes.
double CpmOracle(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& membership, double resolution);

// Maximum CPM quality over every set partition of {0..n-1}.
double BestCpmOracle(int n, const std::vector<std::pair<int, int>>& edges,
                     double resolution);

// Weighted variant over a dense symmetric weight matrix with unit node sizes.
// Returns the best quality and one partition attaining it.
std::pair<double, std::vector<int>> BestWeightedCpmOracle(const DenseMatrix& weights,
                                                          double resolution);

struct NaiveCrossMap {
  DenseMatrix p_ct;  // C x T
  DenseMatrix p_tc;  // T x C
};

// Double loop over documents; cluster index -1 means unassigned.
NaiveCrossMap CrossMapOracle(const DenseMatrix& q, const std::vector<int>& cluster,
                             int num_clusters);

struct CensusCount {
  int one_to_one = 0;
  int one_to_many = 0;
  int many_to_many = 0;
  int unique_topics = 0;
  int unique_clusters = 0;
  friend bool operator==(const CensusCount&, const CensusCount&) = default;
};

// Edges are (topic, cluster) pairs. Components found by flood fill and typed
// from their node and edge counts.
CensusCount CensusOracle(int num_topics, int num_clusters,
                         const std::vector<std::pair<int, int>>& edges);

// Sum of the two KL terms against the midpoint, natural log.
double JensenShannonOracle(const std::vector<double>& p, const std::vector<double>& q);

std::vector<double> RandomDistribution(std::mt19937_64& rng, int size,
                                       double zero_probability = 0.0);

}  // namespace mapcompare::testing

#endif  // MAPCOMPARE_TESTS_ORACLES_H_
