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
#ifndef MAPCOMPARE_TEXT_FORMAT_H_
#define MAPCOMPARE_TEXT_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace mapcompare {

// Shortest decimal representation that parses back to the same double.
std::string FormatDouble(double value);

absl::StatusOr<double> ParseDouble(std::string_view text);
absl::StatusOr<long long> ParseInt(std::string_view text);

// Splits on every tab; keeps empty fields.
std::vector<std::string_view> SplitTabs(std::string_view line);
// Pieces of `text` between occurrences of `delimiter`, empty ones dropped.
std::vector<std::string_view> SplitNonEmpty(std::string_view text, char delimiter);

}  // namespace mapcompare

#endif  // MAPCOMPARE_TEXT_FORMAT_H_
