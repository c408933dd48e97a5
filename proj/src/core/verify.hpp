// Copyright 2026 The rcc-lab Authors.
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

#ifndef RCC_CORE_VERIFY_HPP
#define RCC_CORE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcc {

enum class Suite { Theorem1, Theorem2, Lemma1, Theorem3, Theorem4, NoSignal };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite suite);

struct VerifyOptions {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 2017;
  /// Operations per state (theorem1 forward) or channels shared by all
  /// states (theorem4). Zero selects 100.
  std::uint64_t inner = 0;
  /// (dim_a, dim_b) pairs; empty selects the suite's defaults.
  std::vector<std::pair<int, int>> dims;
  int workers = 0;  // zero selects worker_count()
};

struct VerifyResult {
  Suite suite = Suite::Theorem1;
  std::uint64_t checks = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// Instances left out of the comparison (ambiguity band, zero
  /// probability); only theorem2 treats them as a pass condition.
  std::uint64_t excluded = 0;
  std::uint64_t exhausted = 0;  // theorem1 converse search failures
  std::string metric;           // what max_metric measures
  double max_metric = 0.0;
  double threshold = 0.0;
  double max_excluded_fraction = 1.0;
  std::string worst_case;  // JSON of the instance attaining max_metric
  std::vector<std::string> notes;

  double excluded_fraction() const {
    return checks + excluded == 0 ? 0.0 : static_cast<double>(excluded) / (checks + excluded);
  }
  bool ok() const { return failed == 0 && excluded_fraction() < max_excluded_fraction; }
};

/// Runs the named property sweep. Every instance draws from its own stream
/// derived from (seed, suite, dimension, sample), so results do not depend
/// on the worker count.
VerifyResult run_verify(Suite suite, const VerifyOptions& options);

}  // namespace rcc

#endif  // RCC_CORE_VERIFY_HPP
