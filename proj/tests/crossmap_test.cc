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
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mapcompare/crossmap/crossmap.h"
#include "mapcompare/crossmap/crossmap_io.h"
#include "mapcompare/crossmap/relations.h"
#include "mapcompare/matrix.h"
#include "oracles.h"

namespace mapcompare::crossmap {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::DenseMatrix;

Matrix ToMatrix(const DenseMatrix& rows) {
  Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<int> Iota(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

CrossMap FourDocExample() {
  const DenseMatrix q = {{0.8, 0.2}, {0.6, 0.4}, {0.1, 0.9}, {0.3, 0.7}};
  const std::vector<int> cluster = {0, 0, 1, 1};
  return *Compute(ToMatrix(q), cluster, {0, 1});
}

RelationGraph Shape(int topics, int clusters, const std::vector<std::pair<int, int>>& tc) {
  RelationGraph g;
  g.num_topics = topics;
  g.num_clusters = clusters;
  for (auto [t, c] : tc) g.edges.push_back({.cluster = c, .topic = t});
  std::sort(g.edges.begin(), g.edges.end(), [](const RelationEdge& a, const RelationEdge& b) {
    return std::pair(a.cluster, a.topic) < std::pair(b.cluster, b.topic);
  });
  g.components = Classify(g);
  return g;
}

std::vector<std::pair<int, int>> TopicClusterEdges(const RelationGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const RelationEdge& e : g.edges) out.push_back({e.topic, e.cluster});
  return out;
}

testing::CensusCount AsCount(const Census& c) {
  return {c.one_to_one, c.one_to_many, c.many_to_many, c.unique_topics, c.unique_clusters};
}

TEST(ComputeTest, FourDocumentExampleMatchesOracle) {
  const DenseMatrix q = {{0.8, 0.2}, {0.6, 0.4}, {0.1, 0.9}, {0.3, 0.7}};
  const CrossMap cm = FourDocExample();
  const testing::NaiveCrossMap oracle = testing::CrossMapOracle(q, {0, 0, 1, 1}, 2);
  const DenseMatrix expected_ct = {{0.7, 0.3}, {0.2, 0.8}};
  const DenseMatrix expected_tc = {{0.7778, 0.2222}, {0.2727, 0.7273}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_NEAR(oracle.p_ct[a][b], expected_ct[a][b], 1e-12);
      EXPECT_NEAR(oracle.p_tc[a][b], expected_tc[a][b], 1e-4);
      EXPECT_NEAR(cm.p_ct(a, b), oracle.p_ct[a][b], 1e-12);
      EXPECT_NEAR(cm.p_tc(a, b), oracle.p_tc[a][b], 1e-12);
    }
  }
  EXPECT_NEAR(cm.unmapped_mass[0], 0.0, 1e-12);
}

TEST(ComputeTest, PerfectAgreementGivesIdentity) {
  DenseMatrix q;
  std::vector<int> cluster;
  for (int i = 0; i < 12; ++i) {
    q.push_back({0, 0, 0});
    q.back()[i % 3] = 1;
    cluster.push_back(i % 3);
  }
  auto cm = Compute(ToMatrix(q), cluster, {10, 11, 12});
  ASSERT_TRUE(cm.ok());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(cm->p_ct(a, b), a == b ? 1.0 : 0.0);
      EXPECT_EQ(cm->p_tc(a, b), a == b ? 1.0 : 0.0);
    }
  }
}

TEST(ComputeTest, UniformTopicsGiveUniformRows) {
  DenseMatrix q(9, std::vector<double>(4, 0.25));
  auto cm = Compute(ToMatrix(q), std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 1, 2});
  ASSERT_TRUE(cm.ok());
  for (int c = 0; c < 3; ++c) {
    for (int t = 0; t < 4; ++t) EXPECT_DOUBLE_EQ(cm->p_ct(c, t), 0.25);
  }
}

TEST(ComputeTest, EmptyClusterIsDegenerateAndUnassignedMassIsUnmapped) {
  const DenseMatrix q = {{1, 0}, {0.5, 0.5}, {0, 1}};
  auto cm = Compute(ToMatrix(q), std::vector<int>{0, -1, 0}, {4, 9});
  ASSERT_TRUE(cm.ok());
  EXPECT_THAT(cm->degenerate, ElementsAre(false, true));
  EXPECT_EQ(cm->p_ct(1, 0), 0.0);
  EXPECT_EQ(cm->p_ct(1, 1), 0.0);
  EXPECT_NEAR(cm->unmapped_mass[0], 0.5 / 1.5, 1e-12);
  EXPECT_NEAR(cm->unmapped_mass[1], 0.5 / 1.5, 1e-12);
}

TEST(ComputeTest, DimensionMismatchIsAnError) {
  const DenseMatrix q = {{1, 0}, {0, 1}};
  auto cm = Compute(ToMatrix(q), std::vector<int>{0, 0, 0}, {0});
  ASSERT_FALSE(cm.ok());
  EXPECT_THAT(std::string(cm.status().message()), HasSubstr("rows"));
  EXPECT_FALSE(Compute(ToMatrix(q), std::vector<int>{0, 3}, {0}).ok());
}

TEST(ComputeTest, RestrictToClustersMapsSelectedToRows) {
  const std::vector<int> assignment = {5, 2, 7, 2, 0};
  const std::vector<int> selected = {2, 7};
  EXPECT_THAT(RestrictToClusters(assignment, selected), ElementsAre(-1, 0, 1, 0, -1));
}

TEST(ComputeTest, RandomInstancesMatchDoubleLoopOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const int topics = 1 + static_cast<int>(rng() % 8);
    const int clusters = 1 + static_cast<int>(rng() % 6);
    DenseMatrix q;
    std::vector<int> cluster;
    for (int i = 0; i < n; ++i) {
      q.push_back(testing::RandomDistribution(rng, topics, 0.2));
      cluster.push_back(static_cast<int>(rng() % (clusters + 1)) - 1);
    }
    auto cm = Compute(ToMatrix(q), cluster, Iota(clusters));
    ASSERT_TRUE(cm.ok());
    const testing::NaiveCrossMap oracle = testing::CrossMapOracle(q, cluster, clusters);
    for (int c = 0; c < clusters; ++c) {
      double row = 0;
      for (int t = 0; t < topics; ++t) {
        EXPECT_NEAR(cm->p_ct(c, t), oracle.p_ct[c][t], 1e-12);
        EXPECT_NEAR(cm->p_tc(t, c), oracle.p_tc[t][c], 1e-12);
        EXPECT_GE(cm->p_ct(c, t), 0.0);
        EXPECT_LE(cm->p_ct(c, t), 1.0 + 1e-12);
        row += cm->p_ct(c, t);
      }
      if (!cm->degenerate[c]) EXPECT_NEAR(row, 1.0, 1e-9);
    }
    const bool all_assigned =
        std::none_of(cluster.begin(), cluster.end(), [](int c) { return c < 0; });
    for (int t = 0; t < topics; ++t) {
      if (cm->topic_mass[t] <= 0) continue;
      double col = 0;
      for (int c = 0; c < clusters; ++c) col += cm->p_tc(t, c);
      EXPECT_LE(col, 1.0 + 1e-9);
      if (all_assigned) EXPECT_NEAR(col, 1.0, 1e-9);
      EXPECT_NEAR(cm->unmapped_mass[t], std::max(0.0, 1.0 - col), 1e-12);
    }
  }
}

TEST(RelateTest, HighClusterToTopicThresholdLeavesOneEdge) {
  const RelationGraph g = Relate(FourDocExample(), 0.75, 2.0);
  ASSERT_EQ(g.edges.size(), 1);
  EXPECT_EQ(g.edges[0].cluster, 1);
  EXPECT_EQ(g.edges[0].topic, 1);
  EXPECT_TRUE(g.edges[0].ct_fired);
  EXPECT_FALSE(g.edges[0].tc_fired);
}

TEST(RelateTest, EdgeRuleIsOrOfThresholdsWithGreaterOrEqual) {
  const CrossMap cm = FourDocExample();
  // P_ct(A,T1)=0.7 meets 0.7 exactly; P_tc(T2,A)=0.2222 fires on the topic side.
  const RelationGraph g = Relate(cm, 0.7, 0.2);
  std::set<std::pair<int, int>> edges;
  for (const RelationEdge& e : g.edges) {
    edges.insert({e.cluster, e.topic});
    EXPECT_EQ(e.ct_fired, e.p_ct >= 0.7);
    EXPECT_EQ(e.tc_fired, e.p_tc >= 0.2);
    EXPECT_TRUE(e.ct_fired || e.tc_fired);
  }
  EXPECT_EQ(edges, (std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(Relate(cm, 0.71, 2.0).edges.size(), 1);
}

TEST(RelateTest, NothingAboveHalfGivesNoEdges) {
  DenseMatrix q;
  std::vector<int> cluster;
  for (int i = 0; i < 30; ++i) {
    q.push_back({0.3, 0.3, 0.4});
    cluster.push_back(i % 5);
  }
  auto cm = Compute(ToMatrix(q), cluster, Iota(5));
  ASSERT_TRUE(cm.ok());
  const RelationGraph g = Relate(*cm, 0.5, 2.0);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(TakeCensus(g.components).unique(), 8);
}

TEST(RelateTest, ThresholdOneOnPerfectAgreementIsMatching) {
  DenseMatrix q;
  std::vector<int> cluster;
  for (int i = 0; i < 8; ++i) {
    q.push_back({0, 0, 0, 0});
    q.back()[i % 4] = 1;
    cluster.push_back(i % 4);
  }
  auto cm = Compute(ToMatrix(q), cluster, Iota(4));
  ASSERT_TRUE(cm.ok());
  const RelationGraph g = Relate(*cm, 1.0, 1.0);
  ASSERT_EQ(g.edges.size(), 4);
  for (const RelationEdge& e : g.edges) EXPECT_EQ(e.cluster, e.topic);
  EXPECT_EQ(TakeCensus(g.components).one_to_one, 4);
}

TEST(ClassifyTest, SingleEdgeIsOneToOne) {
  const RelationGraph g = Shape(1, 1, {{0, 0}});
  ASSERT_EQ(g.components.size(), 1);
  EXPECT_EQ(g.components[0].type, RelationType::kOneToOne);
}

TEST(ClassifyTest, ClusterWithThreeLeafTopicsIsOneToMany) {
  const RelationGraph g = Shape(3, 1, {{0, 0}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.components.size(), 1);
  EXPECT_EQ(g.components[0].type, RelationType::kOneToMany);
  EXPECT_EQ(RelationTypeName(RelationType::kOneToMany), "one-to-many");
}

TEST(ClassifyTest, TopicClusterPathIsManyToMany) {
  // T1-C1-T2-C2.
  const RelationGraph g = Shape(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  ASSERT_EQ(g.components.size(), 1);
  EXPECT_EQ(g.components[0].type, RelationType::kManyToMany);
}

TEST(ClassifyTest, IsolatedNodesAreUnique) {
  const RelationGraph g = Shape(3, 2, {{0, 0}});
  const Census census = TakeCensus(g.components);
  EXPECT_EQ(census.one_to_one, 1);
  EXPECT_EQ(census.unique_topics, 2);
  EXPECT_EQ(census.unique_clusters, 1);
}

TEST(ClassifyTest, CensusInvariantUnderRelabeling) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int topics = 1 + static_cast<int>(rng() % 10);
    const int clusters = 1 + static_cast<int>(rng() % 10);
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < topics; ++t) {
      for (int c = 0; c < clusters; ++c) {
        if (rng() % 6 == 0) edges.push_back({t, c});
      }
    }
    std::vector<int> tp = Iota(topics), cp = Iota(clusters);
    std::shuffle(tp.begin(), tp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [t, c] : edges) relabeled.push_back({tp[t], cp[c]});
    EXPECT_EQ(TakeCensus(Shape(topics, clusters, edges).components),
              TakeCensus(Shape(topics, clusters, relabeled).components));
  }
}

CrossMap RandomCrossMap(std::mt19937_64& rng, int clusters, int topics, int docs) {
  DenseMatrix q;
  std::vector<int> cluster;
  for (int i = 0; i < docs; ++i) {
    q.push_back(testing::RandomDistribution(rng, topics, 0.6));
    cluster.push_back(static_cast<int>(rng() % clusters));
  }
  return *Compute(ToMatrix(q), cluster, Iota(clusters));
}

TEST(SweepTest, DefaultGridDescendsFromHalfToFivePercent) {
  const std::vector<double> grid = DefaultSweepGrid();
  ASSERT_EQ(grid.size(), 10);
  EXPECT_DOUBLE_EQ(grid.front(), 0.50);
  EXPECT_DOUBLE_EQ(grid.back(), 0.05);
  for (size_t i = 1; i < grid.size(); ++i) EXPECT_NEAR(grid[i - 1] - grid[i], 0.05, 1e-12);
}

TEST(SweepTest, RejectsBadGrids) {
  std::mt19937_64 rng(1);
  const CrossMap cm = RandomCrossMap(rng, 3, 3, 20);
  const std::vector<double> rising = {0.1, 0.2};
  const std::vector<double> zero = {0.5, 0.0};
  const std::vector<double> above = {1.5};
  EXPECT_FALSE(Sweep(cm, SweepSide::kClusterToTopic, rising).ok());
  EXPECT_FALSE(Sweep(cm, SweepSide::kClusterToTopic, zero).ok());
  EXPECT_FALSE(Sweep(cm, SweepSide::kTopicToCluster, above).ok());
}

TEST(SweepTest, EdgesNestAndCensusMatchesOracle) {
  std::mt19937_64 rng(2024);
  const std::vector<double> grid = DefaultSweepGrid();
  for (int trial = 0; trial < 20; ++trial) {
    const CrossMap cm = RandomCrossMap(rng, 20, 15, 400);
    for (SweepSide side : {SweepSide::kClusterToTopic, SweepSide::kTopicToCluster}) {
      auto steps = Sweep(cm, side, grid);
      ASSERT_TRUE(steps.ok());
      ASSERT_EQ(steps->size(), grid.size());
      std::set<std::pair<int, int>> previous;
      int previous_unique = 1 << 30;
      for (const SweepStep& step : *steps) {
        const auto edges = TopicClusterEdges(step.graph);
        // Independent edge rule read straight off the matrices.
        std::vector<std::pair<int, int>> expected;
        for (int c = 0; c < 20; ++c) {
          for (int t = 0; t < 15; ++t) {
            const double p = side == SweepSide::kClusterToTopic ? cm.p_ct(c, t) : cm.p_tc(t, c);
            if (p >= step.tau) expected.push_back({t, c});
          }
        }
        std::sort(expected.begin(), expected.end());
        std::vector<std::pair<int, int>> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(sorted, expected);
        const std::set<std::pair<int, int>> current(edges.begin(), edges.end());
        EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(),
                                  previous.end()));
        EXPECT_EQ(AsCount(step.census), testing::CensusOracle(15, 20, edges));
        EXPECT_LE(step.census.unique(), previous_unique);
        previous = current;
        previous_unique = step.census.unique();
      }
    }
  }
}

TEST(SweepTest, PerfectAgreementIsAllOneToOne) {
  DenseMatrix q;
  std::vector<int> cluster;
  for (int i = 0; i < 30; ++i) {
    q.push_back(std::vector<double>(5, 0.0));
    q.back()[i % 5] = 1;
    cluster.push_back(i % 5);
  }
  auto cm = Compute(ToMatrix(q), cluster, Iota(5));
  ASSERT_TRUE(cm.ok());
  const std::vector<double> grid = {1.0, 0.5, 0.05};
  for (SweepSide side : {SweepSide::kClusterToTopic, SweepSide::kTopicToCluster}) {
    auto steps = Sweep(*cm, side, grid);
    ASSERT_TRUE(steps.ok());
    for (const SweepStep& step : *steps) {
      EXPECT_EQ(step.census.one_to_one, 5);
      EXPECT_EQ(step.census.unique(), 0);
      EXPECT_EQ(step.census.one_to_many + step.census.many_to_many, 0);
    }
  }
}

TEST(CrossMapIoTest, RoundTripPreservesEverything) {
  std::mt19937_64 rng(3);
  DenseMatrix q;
  std::vector<int> cluster;
  for (int i = 0; i < 50; ++i) {
    q.push_back(testing::RandomDistribution(rng, 4, 0.3));
    cluster.push_back(static_cast<int>(rng() % 4) - 1);
  }
  auto cm = Compute(ToMatrix(q), cluster, {3, 8, 21});
  ASSERT_TRUE(cm.ok());
  auto decoded = DecodeCrossMap(EncodeCrossMap(*cm));
  ASSERT_TRUE(decoded.ok()) << decoded.status();
  EXPECT_EQ(decoded->p_ct, cm->p_ct);
  EXPECT_EQ(decoded->p_tc, cm->p_tc);
  EXPECT_EQ(decoded->cluster_ids, cm->cluster_ids);
  EXPECT_EQ(decoded->topic_mass, cm->topic_mass);
  EXPECT_EQ(decoded->unmapped_mass, cm->unmapped_mass);
  EXPECT_EQ(decoded->degenerate, cm->degenerate);
  EXPECT_EQ(decoded->num_docs, cm->num_docs);
  EXPECT_EQ(TopicKey(2), "T2");
  EXPECT_EQ(ClusterKey(21), "C21");
}

TEST(CrossMapIoTest, RelationJsonCarriesTypesAndProbabilities) {
  const CrossMap cm = FourDocExample();
  const RelationGraph g = Relate(cm, 0.75, 2.0);
  const nlohmann::json j = RelationGraphToJson(g, cm);
  ASSERT_TRUE(j.contains("edges"));
  ASSERT_EQ(j["edges"].size(), 1);
  const std::string dump = j.dump();
  EXPECT_THAT(dump, HasSubstr("one-to-one"));
  EXPECT_THAT(dump, HasSubstr("\"C1\""));
  EXPECT_THAT(dump, HasSubstr("\"T1\""));
}

}  // namespace
}  // namespace mapcompare::crossmap
