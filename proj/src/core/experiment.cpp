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

#include "core/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "core/errors.hpp"
#include "core/rcc.hpp"

namespace rcc {

namespace {

[[noreturn]] void bad_config(const std::string& field, const std::string& reason) {
  throw Error(ErrorCode::InvalidArgument, "invalid config: " + field + ": " + reason);
}

std::string num(double x) { return fmt::format("{:.17g}", x); }

}  // namespace

int worker_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("RCC_LAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

void parallel_chunks(std::uint64_t n, int workers,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(workers), 1,
                                                        std::max<std::uint64_t>(n, 1)));
  if (workers == 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(n, chunk * w);
    const std::uint64_t end = std::min(n, begin + chunk);
    pool.emplace_back(body, w, begin, end);
  }
  for (auto& t : pool) t.join();
}

void validate(const ExperimentConfig& config, bool require_output) {
  if (config.samples < 1) bad_config("samples", "must be >= 1");
  if (config.damping_rates.empty()) bad_config("damping_rates", "must not be empty");
  for (double r : config.damping_rates) {
    if (!(r >= 0.0 && r <= 1.0)) bad_config("damping_rates", num(r) + " is outside [0, 1]");
  }
  if (config.dim_a != 2 || config.dim_b != 2) {
    bad_config("dims", "the phase damping experiment is defined on 2x2 only");
  }
  if (!require_output) return;
  if (config.output_path.empty()) bad_config("output_path", "must be set");
  if (config.emit_plot && config.plot_path.empty()) bad_config("plot_path", "must be set");
}

ExperimentConfig config_from_json(const io::Json& j, ExperimentConfig base) {
  if (!j.is_object()) bad_config("config", "expected a JSON object");
  try {
    if (j.contains("samples")) base.samples = j.at("samples").get<std::uint64_t>();
    if (j.contains("damping_rates")) {
      base.damping_rates = j.at("damping_rates").get<std::vector<double>>();
    }
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("dims")) {
      const auto dims = j.at("dims").get<std::vector<int>>();
      if (dims.size() != 2) bad_config("dims", "expected [dim_a, dim_b]");
      base.dim_a = dims[0];
      base.dim_b = dims[1];
    }
    if (j.contains("output_path")) base.output_path = j.at("output_path").get<std::string>();
    if (j.contains("plot_path")) {
      base.plot_path = j.at("plot_path").get<std::string>();
      base.emit_plot = true;
    }
    if (j.contains("emit_plot")) base.emit_plot = j.at("emit_plot").get<bool>();
  } catch (const io::Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("config: ") + e.what());
  }
  return base;
}

std::vector<Fig1Row> fig1_rows(const ExperimentConfig& config, int workers) {
  validate(config, false);
  const std::size_t per_sample = config.damping_rates.size();
  std::vector<KrausOperation> channels;
  for (double r : config.damping_rates) channels.push_back(phase_damping(r));

  std::vector<Fig1Row> rows(config.samples * per_sample);
  parallel_chunks(config.samples, workers, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      SeededRng rng(config.seed, s);
      const double omega0 = rng.uniform();
      const ComplexMatrix beta = haar_random_unitary(2, rng);
      const double weights[] = {omega0, 1.0 - omega0};
      const auto psi = BipartitePureState::from_schmidt(weights, beta);
      for (std::size_t k = 0; k < per_sample; ++k) {
        const FactorizationResult f = factorization_check(psi, channels[k]);
        Fig1Row& row = rows[s * per_sample + k];
        row.sample = s;
        row.seed = config.seed;
        row.r = config.damping_rates[k];
        row.omega0 = omega0;
        row.entanglement = f.entanglement;
        row.avg_rcc = f.average_rcc;
        row.avg_rcc_maxent = f.maxent_average_rcc;
        row.ratio = f.ratio;
      }
    }
  });
  return rows;
}

Fig1Summary summarize(const std::vector<Fig1Row>& rows, const std::vector<double>& rates) {
  Fig1Summary out;
  out.rows = rows.size();
  out.rates = rates;
  std::vector<double> sum(rates.size(), 0.0), sum_sq(rates.size(), 0.0);
  std::vector<std::uint64_t> count(rates.size(), 0);
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const Fig1Row& row = rows[idx];
    if (row.ratio) {
      out.max_ratio_deviation =
          std::max(out.max_ratio_deviation, std::abs(*row.ratio - row.entanglement));
    }
    const std::size_t k = idx % rates.size();
    sum[k] += row.avg_rcc;
    sum_sq[k] += row.avg_rcc * row.avg_rcc;
    ++count[k];
  }
  for (std::size_t k = 0; k < rates.size(); ++k) {
    const double n = static_cast<double>(std::max<std::uint64_t>(count[k], 1));
    const double mean = sum[k] / n;
    const double var = std::max(0.0, sum_sq[k] / n - mean * mean);
    out.mean_avg_rcc.push_back(mean);
    out.stderr_avg_rcc.push_back(std::sqrt(var / n));
  }
  for (std::size_t k = 1; k < rates.size(); ++k) {
    const double drop = out.mean_avg_rcc[k - 1] - out.mean_avg_rcc[k];
    if (!(out.mean_avg_rcc[k] > out.mean_avg_rcc[k - 1])) out.strictly_increasing = false;
    const double noise = 3.0 * std::hypot(out.stderr_avg_rcc[k - 1], out.stderr_avg_rcc[k]);
    if (rates[k] >= rates[k - 1] && drop > noise) out.monotonicity_flagged = true;
  }
  return out;
}

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows) {
  out << kFig1CsvHeader << '\n';
  for (const Fig1Row& row : rows) {
    out << row.sample << ',' << row.seed << ',' << num(row.r) << ',' << num(row.omega0) << ','
        << num(row.entanglement) << ',' << num(row.avg_rcc) << ',' << num(row.avg_rcc_maxent)
        << ',' << (row.ratio ? num(*row.ratio) : std::string()) << '\n';
  }
}

void write_fig1_svg(std::ostream& out, const std::vector<Fig1Row>& rows,
                    const std::vector<double>& rates) {
  constexpr double kWidth = 640, kHeight = 480, kMargin = 50;
  const auto px = [&](double e) { return kMargin + e * (kWidth - 2 * kMargin); };
  const auto py = [&](double v) { return kHeight - kMargin - v * (kHeight - 2 * kMargin); };

  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      kWidth, kHeight, kWidth, kHeight);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << fmt::format(
      "<g stroke=\"black\"><line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>"
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{3}\"/></g>\n",
      kMargin, kHeight - kMargin, kWidth - kMargin, kMargin);
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int t = 0; t <= 5; ++t) {
    const double v = t / 5.0;
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.1f}</text>\n",
                       px(v), kHeight - kMargin + 16, v);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.1f}</text>\n",
                       kMargin - 6, py(v) + 4, v);
  }
  out << fmt::format(
      "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">entanglement E</text>\n",
      kWidth / 2, kHeight - 12);
  out << "</g>\n";

  // Blue: average RCC, darker for larger r. Red: ratio to the partner.
  for (std::size_t k = 0; k < rates.size(); ++k) {
    const double shade = rates.size() > 1 ? static_cast<double>(k) / (rates.size() - 1) : 1.0;
    const int light = static_cast<int>(200 - 170 * shade);
    out << fmt::format("<g fill=\"rgb({},{},255)\" fill-opacity=\"0.6\">\n", light, light);
    for (std::size_t idx = k; idx < rows.size(); idx += rates.size()) {
      out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.2\"/>\n",
                         px(rows[idx].entanglement), py(rows[idx].avg_rcc));
    }
    out << "</g>\n";
  }
  out << "<g fill=\"red\" fill-opacity=\"0.6\">\n";
  for (const Fig1Row& row : rows) {
    if (!row.ratio) continue;
    out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.2\"/>\n", px(row.entanglement),
                       py(*row.ratio));
  }
  out << "</g>\n</svg>\n";
}

Fig1Summary run_fig1(const ExperimentConfig& config) {
  validate(config);
  std::ofstream csv(config.output_path, std::ios::binary | std::ios::trunc);
  if (!csv) throw Error(ErrorCode::Io, "cannot write " + config.output_path);
  std::ofstream svg;
  if (config.emit_plot) {
    svg.open(config.plot_path, std::ios::binary | std::ios::trunc);
    if (!svg) throw Error(ErrorCode::Io, "cannot write " + config.plot_path);
  }
  const std::vector<Fig1Row> rows = fig1_rows(config);
  write_fig1_csv(csv, rows);
  csv.flush();
  if (!csv) throw Error(ErrorCode::Io, "write failed for " + config.output_path);
  if (config.emit_plot) {
    write_fig1_svg(svg, rows, config.damping_rates);
    svg.flush();
    if (!svg) throw Error(ErrorCode::Io, "write failed for " + config.plot_path);
  }
  return summarize(rows, config.damping_rates);
}

}  // namespace rcc
