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

#ifndef RCC_CORE_EXPERIMENT_HPP
#define RCC_CORE_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "core/io.hpp"

namespace rcc {

/// Worker count: hardware concurrency, capped by RCC_LAB_THREADS when set.
int worker_count();

/// Runs body(worker, begin, end) over contiguous chunks of [0, n).
void parallel_chunks(std::uint64_t n, int workers,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body);

struct ExperimentConfig {
  std::uint64_t samples = 200000;
  std::vector<double> damping_rates{0.1, 0.3, 0.5, 0.7, 0.9};
  std::uint64_t seed = 2017;
  int dim_a = 2;
  int dim_b = 2;
  std::string output_path;
  bool emit_plot = false;
  std::string plot_path;
};

/// Throws InvalidArgument naming the offending field. Output paths are only
/// checked when require_output is set.
void validate(const ExperimentConfig& config, bool require_output = true);

/// Overlays the fields present in j onto base.
ExperimentConfig config_from_json(const io::Json& j, ExperimentConfig base = {});

struct Fig1Row {
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  double r = 0.0;
  double omega0 = 0.0;
  double entanglement = 0.0;
  double avg_rcc = 0.0;
  double avg_rcc_maxent = 0.0;
  std::optional<double> ratio;
};

struct Fig1Summary {
  std::uint64_t rows = 0;
  double max_ratio_deviation = 0.0;  // max |ratio - E| over rows with a ratio
  std::vector<double> rates;
  std::vector<double> mean_avg_rcc;  // per rate
  std::vector<double> stderr_avg_rcc;
  bool strictly_increasing = true;
  /// Set when a mean drops below its predecessor by more than three
  /// combined standard errors.
  bool monotonicity_flagged = false;
};

/// Each sample draws omega0 ~ U[0, 1] and (beta_0, beta_1) as the columns of
/// a Haar unitary from stream (seed, sample), then evaluates the phase
/// damping channel at every rate. Rows are ordered by (sample, rate).
std::vector<Fig1Row> fig1_rows(const ExperimentConfig& config, int workers = worker_count());

Fig1Summary summarize(const std::vector<Fig1Row>& rows, const std::vector<double>& rates);

inline constexpr const char* kFig1CsvHeader =
    "sample,seed,r,omega0,entanglement,avg_rcc,avg_rcc_maxent,ratio";

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows);
void write_fig1_svg(std::ostream& out, const std::vector<Fig1Row>& rows,
                    const std::vector<double>& rates);

/// Validates, computes, and writes the CSV (and SVG when requested).
Fig1Summary run_fig1(const ExperimentConfig& config);

}  // namespace rcc

#endif  // RCC_CORE_EXPERIMENT_HPP
