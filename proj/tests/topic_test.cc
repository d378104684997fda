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
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mapcompare/topic/lda.h"
#include "mapcompare/topic/model_io.h"
#include "test_corpora.h"

namespace mapcompare::topic {
namespace {

using ::testing::HasSubstr;
using ::testing::IsEmpty;
using ::testing::Not;

LdaConfig Config(int k, int iterations, uint64_t seed) {
  LdaConfig c;
  c.k = k;
  c.iterations = iterations;
  c.seed = seed;
  return c;
}

void ExpectRowsNormalized(const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    double sum = 0;
    for (double x : m.row(r)) {
      EXPECT_GE(x, 0.0);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9) << "row " << r;
  }
}

TEST(LdaConfigTest, DefaultsAndValidation) {
  LdaConfig c;
  EXPECT_EQ(c.k, 40);
  EXPECT_DOUBLE_EQ(c.EffectiveAlpha(), 1.0 / 40);
  EXPECT_DOUBLE_EQ(c.beta, 0.1);
  EXPECT_EQ(c.iterations, 5000);
  EXPECT_EQ(c.min_probability, 0.0);
  EXPECT_TRUE(c.Validate().ok());

  for (auto mutate : std::vector<std::function<void(LdaConfig&)>>{
           [](LdaConfig& x) { x.k = 0; }, [](LdaConfig& x) { x.alpha = 0.0; },
           [](LdaConfig& x) { x.beta = -1; }, [](LdaConfig& x) { x.iterations = 0; },
           [](LdaConfig& x) { x.min_probability = 1.0; }}) {
    LdaConfig bad;
    mutate(bad);
    EXPECT_FALSE(bad.Validate().ok());
  }
}

TEST(TrainTest, EmptyVocabularyIsAnError) {
  corpus::BowCorpus bow;
  bow.vocab_size = 0;
  bow.docs = {{}};
  auto model = Train(bow, Config(2, 1, 1));
  ASSERT_FALSE(model.ok());
  EXPECT_THAT(std::string(model.status().message()), HasSubstr("V = 0"));
}

TEST(TrainTest, MoreTopicsThanTokensWarnsAndProceeds) {
  corpus::BowCorpus bow;
  bow.vocab_size = 2;
  bow.docs = {{0, 1}};
  auto model = Train(bow, Config(5, 3, 1));
  ASSERT_TRUE(model.ok()) << model.status();
  EXPECT_THAT(model->warnings(), Not(IsEmpty()));
}

TEST(TrainTest, SingleTopicDegeneracy) {
  std::mt19937_64 rng(3);
  const corpus::BowCorpus bow = testing::RandomBow(rng, 30, 20);
  auto model = Train(bow, Config(1, 5, 9));
  ASSERT_TRUE(model.ok());
  for (int d = 0; d < model->num_docs(); ++d) {
    auto row = model->DocTopics(d);
    ASSERT_TRUE(row.ok());
    EXPECT_DOUBLE_EQ((*row)[0], 1.0);
  }
  std::vector<double> counts(bow.vocab_size, 0.0);
  for (const auto& doc : bow.docs) {
    for (int w : doc) counts[w] += 1;
  }
  const double total = static_cast<double>(bow.num_tokens());
  for (int w = 0; w < bow.vocab_size; ++w) {
    EXPECT_NEAR(model->phi()(0, w), (counts[w] + 0.1) / (total + 0.1 * bow.vocab_size),
                1e-15);
  }
}

TEST(TrainTest, AccessorsRejectBadIndices) {
  auto model = Train(testing::TwoBlockCorpus(1), Config(2, 2, 1));
  ASSERT_TRUE(model.ok());
  EXPECT_EQ(model->DocTopics(-1).status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_EQ(model->DocTopics(200).status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_EQ(model->TopicTerms(2).status().code(), absl::StatusCode::kOutOfRange);
  auto phi_row = model->TopicTerms(1);
  ASSERT_TRUE(phi_row.ok());
  EXPECT_EQ(phi_row->data(), model->phi().row(1).data());
}

TEST(TrainTest, TwoBlockRecoveryOnFiveSeeds) {
  int recovered = 0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto model = Train(testing::TwoBlockCorpus(100 + seed), Config(2, 500, seed));
    ASSERT_TRUE(model.ok());
    if (testing::TwoBlockRecovery(*model) >= 0.95) ++recovered;
  }
  EXPECT_GE(recovered, 4);
}

TEST(TrainTest, LikelihoodRisesFromRandomStart) {
  const corpus::BowCorpus bow = testing::TwoBlockCorpus(42);
  double first = 0, last = 0;
  auto model = Train(bow, Config(2, 200, 4), [&](const GibbsSampler& s) {
    if (s.sweeps() == 0) first = s.LogLikelihood();
    last = s.LogLikelihood();
  });
  ASSERT_TRUE(model.ok());
  EXPECT_GT(last, first + 100.0);
}

TEST(TrainTest, DeterministicPerSeed) {
  std::mt19937_64 rng(8);
  const corpus::BowCorpus bow = testing::RandomBow(rng, 60, 40);
  auto a = Train(bow, Config(4, 50, 77));
  auto b = Train(bow, Config(4, 50, 77));
  auto c = Train(bow, Config(4, 50, 78));
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  EXPECT_EQ(a->theta(), b->theta());
  EXPECT_EQ(a->phi(), b->phi());
  EXPECT_EQ(a->assignments(), b->assignments());
  EXPECT_NE(a->assignments(), c->assignments());
}

TEST(TrainTest, MatricesEqualRecountFromAssignments) {
  std::mt19937_64 rng(21);
  const corpus::BowCorpus bow = testing::RandomBow(rng, 80, 50);
  const LdaConfig cfg = Config(5, 30, 3);
  auto model = Train(bow, cfg);
  ASSERT_TRUE(model.ok());
  const int k = cfg.k, v = bow.vocab_size;
  const double alpha = cfg.EffectiveAlpha(), beta = cfg.beta;
  std::vector<std::vector<int>> n_tw(k, std::vector<int>(v, 0));
  std::vector<int> n_t(k, 0);
  for (int d = 0; d < bow.num_docs(); ++d) {
    std::vector<int> n_dt(k, 0);
    ASSERT_EQ(model->assignments()[d].size(), bow.docs[d].size());
    for (size_t i = 0; i < bow.docs[d].size(); ++i) {
      const int t = model->assignments()[d][i];
      ++n_dt[t];
      ++n_tw[t][bow.docs[d][i]];
      ++n_t[t];
    }
    const int n_d = static_cast<int>(bow.docs[d].size());
    for (int t = 0; t < k; ++t) {
      const double expected = n_d == 0 ? 1.0 / k : (n_dt[t] + alpha) / (n_d + k * alpha);
      EXPECT_NEAR(model->theta()(d, t), expected, 1e-15);
    }
    EXPECT_EQ(model->empty_docs()[d], n_d == 0);
  }
  for (int t = 0; t < k; ++t) {
    for (int w = 0; w < v; ++w) {
      EXPECT_NEAR(model->phi()(t, w), (n_tw[t][w] + beta) / (n_t[t] + v * beta), 1e-15);
    }
  }
}

TEST(TrainTest, CountsConservedAtEverySweep) {
  std::mt19937_64 rng(13);
  const corpus::BowCorpus bow = testing::RandomBow(rng, 40, 30);
  int checked = 0;
  auto model = Train(bow, Config(3, 20, 5), [&](const GibbsSampler& s) {
    for (int d = 0; d < s.num_docs(); ++d) {
      int sum = 0;
      for (int t = 0; t < s.num_topics(); ++t) sum += s.doc_topic_count(d, t);
      ASSERT_EQ(sum, s.doc_length(d));
    }
    for (int t = 0; t < s.num_topics(); ++t) {
      int sum = 0;
      for (int w = 0; w < s.vocab_size(); ++w) sum += s.topic_term_count(t, w);
      ASSERT_EQ(sum, s.topic_count(t));
    }
    ++checked;
  });
  ASSERT_TRUE(model.ok());
  EXPECT_EQ(checked, 21);
}

TEST(TrainTest, MinProbabilityFloorZeroesAndRenormalizes) {
  LdaConfig cfg = Config(4, 30, 2);
  cfg.min_probability = 0.2;
  auto model = Train(testing::TwoBlockCorpus(5), cfg);
  ASSERT_TRUE(model.ok());
  ExpectRowsNormalized(model->theta());
  for (int d = 0; d < model->num_docs(); ++d) {
    for (double x : model->theta().row(d)) {
      EXPECT_TRUE(x == 0.0 || x >= 0.2);
    }
  }
}

TEST(TrainTest, EmptyDocumentGetsUniformRowAndFlag) {
  corpus::BowCorpus bow;
  bow.vocab_size = 3;
  bow.docs = {{0, 1, 2}, {}, {2, 2}};
  auto model = Train(bow, Config(4, 10, 1));
  ASSERT_TRUE(model.ok());
  EXPECT_TRUE(model->empty_docs()[1]);
  EXPECT_FALSE(model->empty_docs()[0]);
  for (double x : model->theta().row(1)) EXPECT_DOUBLE_EQ(x, 0.25);
}

TEST(TrainTest, FortyTopicDefaultConfigurationRuns) {
  LdaConfig cfg;  // k = 40, alpha = 1/40, beta = 0.1, 5000 sweeps.
  cfg.seed = 1;
  corpus::BowCorpus bow;
  bow.vocab_size = 60;
  std::mt19937_64 rng(1);
  for (int d = 0; d < 30; ++d) {
    auto& doc = bow.docs.emplace_back();
    for (int i = 0; i < 15; ++i) doc.push_back(static_cast<int>(rng() % 60));
  }
  auto model = Train(bow, cfg);
  ASSERT_TRUE(model.ok());
  EXPECT_EQ(model->num_topics(), 40);
  ExpectRowsNormalized(model->theta());
  ExpectRowsNormalized(model->phi());
}

TEST(ModelIoTest, RoundTripIsExactAndStable) {
  std::mt19937_64 rng(17);
  const corpus::BowCorpus bow = testing::RandomBow(rng, 25, 15);
  LdaConfig cfg = Config(3, 10, 99);
  cfg.alpha = 0.3;
  auto model = Train(bow, cfg);
  ASSERT_TRUE(model.ok());
  ModelBundle bundle{*model, {}, {}};
  for (int d = 0; d < bow.num_docs(); ++d) bundle.doc_ids.push_back("d" + std::to_string(d));
  for (int w = 0; w < bow.vocab_size; ++w) bundle.terms.push_back("term " + std::to_string(w));
  const ModelFiles files = EncodeModel(bundle);
  auto decoded = DecodeModel(files);
  ASSERT_TRUE(decoded.ok()) << decoded.status();
  EXPECT_EQ(decoded->model.theta(), model->theta());
  EXPECT_EQ(decoded->model.phi(), model->phi());
  EXPECT_EQ(decoded->model.assignments(), model->assignments());
  EXPECT_EQ(decoded->model.empty_docs(), model->empty_docs());
  EXPECT_EQ(decoded->model.config().seed, 99u);
  EXPECT_EQ(decoded->model.config().alpha, 0.3);
  EXPECT_EQ(decoded->doc_ids, bundle.doc_ids);
  EXPECT_EQ(decoded->terms, bundle.terms);
  const ModelFiles again = EncodeModel(*decoded);
  EXPECT_EQ(again.theta_tsv, files.theta_tsv);
  EXPECT_EQ(again.phi_tsv, files.phi_tsv);
  EXPECT_EQ(again.model_json, files.model_json);
  EXPECT_THAT(files.model_json, HasSubstr("\"seed\""));
}

TEST(ModelIoTest, CorruptFilesAreRejected) {
  auto model = Train(testing::TwoBlockCorpus(1), Config(2, 2, 1));
  ASSERT_TRUE(model.ok());
  ModelBundle bundle{*model, std::vector<std::string>(200, ""), {}};
  for (int d = 0; d < 200; ++d) bundle.doc_ids[d] = "d" + std::to_string(d);
  for (int w = 0; w < 10; ++w) bundle.terms.push_back("w" + std::to_string(w));
  ModelFiles files = EncodeModel(bundle);
  files.phi_tsv.resize(files.phi_tsv.size() / 2);
  EXPECT_FALSE(DecodeModel(files).ok());
}

}  // namespace
}  // namespace mapcompare::topic
