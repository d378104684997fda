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
#ifndef MAPCOMPARE_TOPIC_LDA_H_
#define MAPCOMPARE_TOPIC_LDA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mapcompare/corpus/vocabulary.h"
#include "mapcompare/matrix.h"
#include "mapcompare/rng.h"

namespace mapcompare::topic {

struct LdaConfig {
  int k = 40;
  // Symmetric document prior; unset means 1/k.
  std::optional<double> alpha;
  double beta = 0.1;
  int iterations = 5000;
  uint64_t seed = 1;
  // theta entries below this are zeroed and the row renormalized.
  double min_probability = 0.0;

  double EffectiveAlpha() const { return alpha.value_or(1.0 / k); }
  absl::Status Validate() const;
};

// Point estimate from the final Gibbs sweep.
class TopicModel {
 public:
  TopicModel() = default;
  TopicModel(LdaConfig config, Matrix theta, Matrix phi,
             std::vector<std::vector<int>> assignments,
             std::vector<bool> empty_docs, std::vector<std::string> warnings);

  int num_docs() const { return theta_.rows(); }
  int num_topics() const { return theta_.cols(); }
  int vocab_size() const { return phi_.cols(); }

  // N x k; row d is the topic distribution of document d.
  const Matrix& theta() const { return theta_; }
  // k x V; row t is the term distribution of topic t.
  const Matrix& phi() const { return phi_; }
  // Final topic label of every token, aligned with the BowCorpus.
  const std::vector<std::vector<int>>& assignments() const { return assignments_; }
  // Documents with no tokens; their theta rows are uniform.
  const std::vector<bool>& empty_docs() const { return empty_docs_; }
  const LdaConfig& config() const { return config_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  absl::StatusOr<std::span<const double>> DocTopics(int doc) const;
  absl::StatusOr<std::span<const double>> TopicTerms(int topic) const;

 private:
  LdaConfig config_;
  Matrix theta_;
  Matrix phi_;
  std::vector<std::vector<int>> assignments_;
  std::vector<bool> empty_docs_;
  std::vector<std::string> warnings_;
};

// Collapsed Gibbs sampler for LDA with symmetric priors. Each token's topic
// is resampled from
//   p(z = t | rest) ~ (n_dt + alpha) * (n_tw + beta) / (n_t + V * beta)
// with the token's own count removed. Tokens are visited in document order,
// then token order, so a fixed seed reproduces every sweep exactly.
class GibbsSampler {
 public:
  static absl::StatusOr<GibbsSampler> Create(const corpus::BowCorpus& bow,
                                             const LdaConfig& config);

  void Sweep();
  int sweeps() const { return sweeps_; }

  // Collapsed joint log p(w, z) under the current assignment.
  double LogLikelihood() const;

  int num_docs() const { return static_cast<int>(doc_offsets_.size()) - 1; }
  int num_topics() const { return k_; }
  int vocab_size() const { return vocab_size_; }

  int doc_topic_count(int doc, int topic) const {
    return doc_topic_[static_cast<size_t>(doc) * k_ + topic];
  }
  int topic_term_count(int topic, int term) const {
    return term_topic_[static_cast<size_t>(term) * k_ + topic];
  }
  int topic_count(int topic) const { return topic_total_[topic]; }
  int doc_length(int doc) const {
    return static_cast<int>(doc_offsets_[doc + 1] - doc_offsets_[doc]);
  }
  std::span<const int> doc_words(int doc) const;
  std::span<const int> doc_assignments(int doc) const;

  TopicModel Finish() const;

 private:
  GibbsSampler(const corpus::BowCorpus& bow, const LdaConfig& config);

  LdaConfig config_;
  int k_;
  int vocab_size_;
  double alpha_;
  double beta_;
  SplitMix64 rng_;
  int sweeps_ = 0;
  std::vector<int64_t> doc_offsets_;
  std::vector<int> words_;
  std::vector<int> topics_;
  std::vector<int> doc_topic_;   // N x k
  std::vector<int> term_topic_;  // V x k
  std::vector<int> topic_total_;
  std::vector<double> weights_;
  std::vector<std::string> warnings_;
};

// Called after initialization (sweep 0) and after every sweep.
using SweepObserver = std::function<void(const GibbsSampler&)>;

absl::StatusOr<TopicModel> Train(const corpus::BowCorpus& bow,
                                 const LdaConfig& config,
                                 const SweepObserver& observer = nullptr);

}  // namespace mapcompare::topic

#endif  // MAPCOMPARE_TOPIC_LDA_H_
