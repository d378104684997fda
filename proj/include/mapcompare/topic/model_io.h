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
#ifndef MAPCOMPARE_TOPIC_MODEL_IO_H_
#define MAPCOMPARE_TOPIC_MODEL_IO_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mapcompare/topic/lda.h"

namespace mapcompare::topic {

// A trained model with the ids it is indexed by.
struct ModelBundle {
  TopicModel model;
  std::vector<std::string> doc_ids;
  std::vector<std::string> terms;
};

// Text export of a model. Numbers use the shortest round-trip decimal form,
// so encode(decode(x)) == x byte for byte.
//
//   theta.tsv        header "doc_id, empty, T0 .. T{k-1}"; one row per
//                    document, empty is 0/1.
//   phi.tsv          header "term, T0 .. T{k-1}"; one row per term (the
//                    transpose of phi, so each column sums to 1).
//   assignments.tsv  "doc_id<TAB>z z z ..." final token topics.
//   model.json       config (k, alpha, beta, iterations, seed,
//                    min_probability), rng name, dimensions, warnings.
struct ModelFiles {
  std::string theta_tsv;
  std::string phi_tsv;
  std::string assignments_tsv;
  std::string model_json;
};

ModelFiles EncodeModel(const ModelBundle& bundle);
absl::StatusOr<ModelBundle> DecodeModel(const ModelFiles& files);

}  // namespace mapcompare::topic

#endif  // MAPCOMPARE_TOPIC_MODEL_IO_H_
