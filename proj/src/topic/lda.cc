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
#include "mapcompare/topic/lda.h"

#include <cmath>
#include <utility>

#include "mapcompare/strings.h"

namespace mapcompare::topic {

absl::Status LdaConfig::Validate() const {
  if (k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (!(EffectiveAlpha() > 0)) {
    return absl::InvalidArgumentError("alpha must be > 0");
  }
  if (!(beta > 0)) return absl::InvalidArgumentError("beta must be > 0");
  if (iterations < 1) {
    return absl::InvalidArgumentError("iterations must be >= 1");
  }
  if (!(min_probability >= 0 && min_probability < 1)) {
    return absl::InvalidArgumentError("min_probability must be in [0, 1)");
  }
  return absl::OkStatus();
}

TopicModel::TopicModel(LdaConfig config, Matrix theta, Matrix phi,
                       std::vector<std::vector<int>> assignments,
                       std::vector<bool> empty_docs,
                       std::vector<std::string> warnings)
    : config_(std::move(config)),
      theta_(std::move(theta)),
      phi_(std::move(phi)),
      assignments_(std::move(assignments)),
      empty_docs_(std::move(empty_docs)),
      warnings_(std::move(warnings)) {}

absl::StatusOr<std::span<const double>> TopicModel::DocTopics(int doc) const {
  if (doc < 0 || doc >= num_docs()) {
    return absl::OutOfRangeError(StrCat("document index ", doc,
                                              " out of range [0, ", num_docs(), ")"));
  }
  return theta_.row(doc);
}

absl::StatusOr<std::span<const double>> TopicModel::TopicTerms(int topic) const {
  if (topic < 0 || topic >= num_topics()) {
    return absl::OutOfRangeError(StrCat(
        "topic index ", topic, " out of range [0, ", num_topics(), ")"));
  }
  return phi_.row(topic);
}

GibbsSampler::GibbsSampler(const corpus::BowCorpus& bow, const LdaConfig& config)
    : config_(config),
      k_(config.k),
      vocab_size_(bow.vocab_size),
      alpha_(config.EffectiveAlpha()),
      beta_(config.beta),
      rng_(config.seed) {
  doc_offsets_.reserve(bow.docs.size() + 1);
  doc_offsets_.push_back(0);
  for (const auto& doc : bow.docs) {
    words_.insert(words_.end(), doc.begin(), doc.end());
    doc_offsets_.push_back(static_cast<int64_t>(words_.size()));
  }
  topics_.resize(words_.size());
  doc_topic_.assign(bow.docs.size() * k_, 0);
  term_topic_.assign(static_cast<size_t>(vocab_size_) * k_, 0);
  topic_total_.assign(k_, 0);
  weights_.resize(k_);

  // Uniform random initial labels, drawn in token order.
  for (int d = 0; d < num_docs(); ++d) {
    for (int64_t i = doc_offsets_[d]; i < doc_offsets_[d + 1]; ++i) {
      const int t = static_cast<int>(rng_.NextBelow(k_));
      topics_[i] = t;
      ++doc_topic_[static_cast<size_t>(d) * k_ + t];
      ++term_topic_[static_cast<size_t>(words_[i]) * k_ + t];
      ++topic_total_[t];
    }
  }
  if (static_cast<int64_t>(k_) > static_cast<int64_t>(words_.size())) {
    warnings_.push_back(StrCat("k = ", k_, " exceeds the token count (",
                                     words_.size(), ")"));
  }
}

absl::StatusOr<GibbsSampler> GibbsSampler::Create(const corpus::BowCorpus& bow,
                                                  const LdaConfig& config) {
  if (absl::Status status = config.Validate(); !status.ok()) return status;
  if (bow.vocab_size <= 0) {
    return absl::InvalidArgumentError("vocabulary is empty (V = 0)");
  }
  if (bow.docs.empty()) {
    return absl::InvalidArgumentError("corpus has no documents");
  }
  for (const auto& doc : bow.docs) {
    for (int w : doc) {
      if (w < 0 || w >= bow.vocab_size) {
        return absl::InvalidArgumentError(
            StrCat("term index ", w, " outside vocabulary of size ",
                         bow.vocab_size));
      }
    }
  }
  return GibbsSampler(bow, config);
}

void GibbsSampler::Sweep() {
  const double v_beta = vocab_size_ * beta_;
  for (int d = 0; d < num_docs(); ++d) {
    int* doc_counts = &doc_topic_[static_cast<size_t>(d) * k_];
    for (int64_t i = doc_offsets_[d]; i < doc_offsets_[d + 1]; ++i) {
      const int w = words_[i];
      int* term_counts = &term_topic_[static_cast<size_t>(w) * k_];
      const int old_topic = topics_[i];
      --doc_counts[old_topic];
      --term_counts[old_topic];
      --topic_total_[old_topic];

      double total = 0;
      for (int t = 0; t < k_; ++t) {
        total += (doc_counts[t] + alpha_) * (term_counts[t] + beta_) /
                 (topic_total_[t] + v_beta);
        weights_[t] = total;
      }
      const double u = rng_.NextDouble() * total;
      int new_topic = 0;
      while (new_topic < k_ - 1 && weights_[new_topic] <= u) ++new_topic;

      topics_[i] = new_topic;
      ++doc_counts[new_topic];
      ++term_counts[new_topic];
      ++topic_total_[new_topic];
    }
  }
  ++sweeps_;
}

double GibbsSampler::LogLikelihood() const {
  const double v_beta = vocab_size_ * beta_;
  const double k_alpha = k_ * alpha_;
  double ll = 0;
  const double lg_beta = std::lgamma(beta_);
  for (int t = 0; t < k_; ++t) {
    ll += std::lgamma(v_beta) - std::lgamma(topic_total_[t] + v_beta);
  }
  for (int count : term_topic_) ll += std::lgamma(count + beta_) - lg_beta;
  const double lg_alpha = std::lgamma(alpha_);
  for (int d = 0; d < num_docs(); ++d) {
    ll += std::lgamma(k_alpha) - std::lgamma(doc_length(d) + k_alpha);
    for (int t = 0; t < k_; ++t) {
      ll += std::lgamma(doc_topic_count(d, t) + alpha_) - lg_alpha;
    }
  }
  return ll;
}

std::span<const int> GibbsSampler::doc_words(int doc) const {
  return {words_.data() + doc_offsets_[doc],
          static_cast<size_t>(doc_length(doc))};
}

std::span<const int> GibbsSampler::doc_assignments(int doc) const {
  return {topics_.data() + doc_offsets_[doc],
          static_cast<size_t>(doc_length(doc))};
}

TopicModel GibbsSampler::Finish() const {
  const int n = num_docs();
  Matrix theta(n, k_);
  std::vector<bool> empty(n, false);
  for (int d = 0; d < n; ++d) {
    const double denom = doc_length(d) + k_ * alpha_;
    std::span<double> row = theta.row(d);
    for (int t = 0; t < k_; ++t) row[t] = (doc_topic_count(d, t) + alpha_) / denom;
    empty[d] = doc_length(d) == 0;
    if (empty[d]) {
      for (double& x : row) x = 1.0 / k_;
      continue;
    }
    if (config_.min_probability > 0) {
      double kept = 0;
      for (double x : row) {
        if (x >= config_.min_probability) kept += x;
      }
      // A row with no entry at the floor is left as is.
      if (kept > 0) {
        for (double& x : row) x = x >= config_.min_probability ? x / kept : 0.0;
      }
    }
  }

  Matrix phi(k_, vocab_size_);
  const double v_beta = vocab_size_ * beta_;
  for (int t = 0; t < k_; ++t) {
    const double denom = topic_total_[t] + v_beta;
    for (int w = 0; w < vocab_size_; ++w) {
      phi(t, w) = (topic_term_count(t, w) + beta_) / denom;
    }
  }

  std::vector<std::vector<int>> assignments(n);
  for (int d = 0; d < n; ++d) {
    auto z = doc_assignments(d);
    assignments[d].assign(z.begin(), z.end());
  }
  return TopicModel(config_, std::move(theta), std::move(phi),
                    std::move(assignments), std::move(empty), warnings_);
}

absl::StatusOr<TopicModel> Train(const corpus::BowCorpus& bow,
                                 const LdaConfig& config,
                                 const SweepObserver& observer) {
  absl::StatusOr<GibbsSampler> sampler = GibbsSampler::Create(bow, config);
  if (!sampler.ok()) return sampler.status();
  if (observer) observer(*sampler);
  for (int i = 0; i < config.iterations; ++i) {
    sampler->Sweep();
    if (observer) observer(*sampler);
  }
  return sampler->Finish();
}

}  // namespace mapcompare::topic
