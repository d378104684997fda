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
#include "test_corpora.h"

#include <algorithm>

namespace mapcompare::testing {

corpus::BowCorpus TwoBlockCorpus(uint64_t seed) {
  std::mt19937_64 rng(seed);
  corpus::BowCorpus bow;
  bow.vocab_size = 10;
  for (int d = 0; d < 200; ++d) {
    const int offset = d < 100 ? 0 : 5;
    std::vector<int>& doc = bow.docs.emplace_back();
    for (int i = 0; i < 20; ++i) doc.push_back(offset + static_cast<int>(rng() % 5));
  }
  return bow;
}

double TwoBlockRecovery(const topic::TopicModel& model) {
  auto block_mass = [&](int topic, int offset) {
    double mass = 0;
    for (int w = offset; w < offset + 5; ++w) mass += model.phi()(topic, w);
    return mass;
  };
  const double straight = std::min(block_mass(0, 0), block_mass(1, 5));
  const double swapped = std::min(block_mass(0, 5), block_mass(1, 0));
  return std::max(straight, swapped);
}

corpus::BowCorpus RandomBow(std::mt19937_64& rng, int max_docs, int max_vocab) {
  corpus::BowCorpus bow;
  bow.vocab_size = 1 + static_cast<int>(rng() % max_vocab);
  const int docs = 1 + static_cast<int>(rng() % max_docs);
  for (int d = 0; d < docs; ++d) {
    std::vector<int>& doc = bow.docs.emplace_back();
    const int len = rng() % 10 == 0 ? 0 : static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) {
      doc.push_back(static_cast<int>(rng() % bow.vocab_size));
    }
  }
  if (bow.num_tokens() == 0) bow.docs[0].push_back(0);
  return bow;
}

std::vector<std::pair<int, int>> RandomEdges(std::mt19937_64& rng, int n, double p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < p) edges.push_back({i, j});
    }
  }
  return edges;
}

}  // namespace mapcompare::testing
