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

// rcc-lab: command-line driver over the rcc C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcc/rcc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Mirrors the tolerance used for the ratio check in the sweep summary.
constexpr double kRatioTolerance = 1e-9;

int report_error(rcc_status status) {
  std::fprintf(stderr, "rcc-lab: error (%s): %s\n", rcc_status_name(status), rcc_last_error());
  return kExitUsage;
}

bool read_text(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "rcc-lab: error (Io): cannot open '%s'\n", path.c_str());
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

struct Fig1Args {
  std::string config;
  uint64_t samples = 0;
  std::vector<double> rates;
  uint64_t seed = 0;
  std::string out;
  std::string plot;
};

int run_fig1(const Fig1Args& args, const CLI::App& cmd) {
  rcc_fig1_config* config = nullptr;
  rcc_status st = rcc_fig1_config_create(&config);
  if (st != RCC_OK) return report_error(st);

  auto check = [&](rcc_status s) { st = s; return s == RCC_OK; };
  bool ok = true;
  if (!args.config.empty()) {
    std::string text;
    if (!read_text(args.config, text)) {
      rcc_fig1_config_free(config);
      return kExitUsage;
    }
    ok = check(rcc_fig1_config_load_json(config, text.c_str()));
  }
  if (ok && cmd.count("--samples")) ok = check(rcc_fig1_config_set_samples(config, args.samples));
  if (ok && cmd.count("--rates")) {
    ok = check(rcc_fig1_config_set_rates(config, args.rates.data(), args.rates.size()));
  }
  if (ok && cmd.count("--seed")) ok = check(rcc_fig1_config_set_seed(config, args.seed));
  if (ok && cmd.count("--out")) ok = check(rcc_fig1_config_set_output(config, args.out.c_str()));
  if (ok && cmd.count("--plot")) ok = check(rcc_fig1_config_set_plot(config, args.plot.c_str()));

  size_t rate_count = 0;
  if (ok) ok = check(rcc_fig1_config_rate_count(config, &rate_count));
  std::vector<double> means(rate_count);
  rcc_fig1_summary summary{};
  if (ok) ok = check(rcc_fig1_run(config, &summary, means.data()));
  rcc_fig1_config_free(config);
  if (!ok) return report_error(st);

  std::printf("rows: %llu\n", static_cast<unsigned long long>(summary.rows));
  std::printf("mean avg_rcc per rate:");
  for (double m : means) std::printf(" %.6f", m);
  std::printf("\n");
  std::printf("mean avg_rcc strictly increasing: %s%s\n", summary.strictly_increasing ? "yes" : "no",
              summary.monotonicity_flagged ? " (flagged beyond sampling noise)" : "");
  std::printf("max |ratio - E|: %.3e\n", summary.max_ratio_deviation);
  return summary.max_ratio_deviation < kRatioTolerance ? kExitOk : kExitViolation;
}

struct VerifyArgs {
  std::string suite;
  uint64_t samples = 1000;
  uint64_t seed = 2017;
  uint64_t inner = 0;
  std::vector<std::string> dims;
};

bool parse_dims(const std::vector<std::string>& specs, std::vector<int>& out) {
  for (const auto& s : specs) {
    int a = 0;
    int b = 0;
    char x = 0;
    std::istringstream in(s);
    if (!(in >> a >> x >> b) || (x != 'x' && x != 'X') || !in.eof()) {
      std::fprintf(stderr, "rcc-lab: error (InvalidArgument): bad --dims '%s', expected AxB\n",
                   s.c_str());
      return false;
    }
    out.push_back(a);
    out.push_back(b);
  }
  return true;
}

int run_verify(const VerifyArgs& args) {
  std::vector<int> dims;
  if (!parse_dims(args.dims, dims)) return kExitUsage;
  rcc_verify_options options{};
  options.samples = args.samples;
  options.seed = args.seed;
  options.inner = args.inner;
  options.dims = dims.empty() ? nullptr : dims.data();
  options.dim_count = dims.size() / 2;

  rcc_verify_summary summary{};
  char* details = nullptr;
  const rcc_status st = rcc_verify_run(args.suite.c_str(), &options, &summary, &details);
  if (st != RCC_OK) return report_error(st);

  std::printf("suite: %s\n", args.suite.c_str());
  std::printf("checks: %llu  passed: %llu  failed: %llu  excluded: %llu (%.4f%%)  exhausted: %llu\n",
              static_cast<unsigned long long>(summary.checks),
              static_cast<unsigned long long>(summary.passed),
              static_cast<unsigned long long>(summary.failed),
              static_cast<unsigned long long>(summary.excluded), 100.0 * summary.excluded_fraction,
              static_cast<unsigned long long>(summary.exhausted));
  std::printf("max violation metric: %.3e (threshold %.1e)\n", summary.max_metric,
              summary.threshold);
  std::fputs(details, stdout);
  std::printf("result: %s\n", summary.ok ? "PASS" : "FAIL");
  rcc_string_free(details);
  return summary.ok ? kExitOk : kExitViolation;
}

int run_compute(const std::string& state_path, const std::string& channel_path) {
  std::string state_text;
  std::string channel_text;
  if (!read_text(state_path, state_text) || !read_text(channel_path, channel_text)) {
    return kExitUsage;
  }
  rcc_state* state = nullptr;
  rcc_channel* channel = nullptr;
  rcc_report* report = nullptr;
  char* json = nullptr;
  rcc_status st = rcc_state_from_json(state_text.c_str(), &state);
  if (st == RCC_OK) st = rcc_channel_from_json(channel_text.c_str(), &channel);
  if (st == RCC_OK) st = rcc_compute(state, channel, &report);
  if (st == RCC_OK) st = rcc_report_to_json(report, &json);
  int code = kExitOk;
  if (st == RCC_OK) {
    std::printf("%s\n", json);
  } else {
    code = report_error(st);
  }
  rcc_string_free(json);
  rcc_report_free(report);
  rcc_channel_free(channel);
  rcc_state_free(state);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remote creation of coherence: sweeps, property checks and single computations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rcc_version());

  Fig1Args fig1;
  auto* fig1_cmd = app.add_subcommand("fig1", "Monte Carlo sweep over phase damping rates");
  fig1_cmd->add_option("--config", fig1.config, "JSON config file")->check(CLI::ExistingFile);
  fig1_cmd->add_option("--samples", fig1.samples, "Number of random states")
      ->check(CLI::PositiveNumber);
  fig1_cmd->add_option("--rates", fig1.rates, "Damping rates in [0,1]")->delimiter(',');
  fig1_cmd->add_option("--seed", fig1.seed, "Base seed");
  fig1_cmd->add_option("--out", fig1.out, "CSV output path");
  fig1_cmd->add_option("--plot", fig1.plot, "Optional SVG output path");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property sweep");
  verify_cmd->add_option("suite", verify.suite, "theorem1|theorem2|lemma1|theorem3|theorem4|nosignal")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma1", "theorem3", "theorem4", "nosignal"}));
  verify_cmd->add_option("--samples", verify.samples, "Number of random instances")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Base seed");
  verify_cmd->add_option("--inner", verify.inner, "Inner loop size (0: suite default)");
  verify_cmd->add_option("--dims", verify.dims, "Dimension pairs such as 2x2,3x3")->delimiter(',');

  std::string state_path;
  std::string channel_path;
  auto* compute_cmd = app.add_subcommand("compute", "Average coherence created on A");
  compute_cmd->add_option("--state", state_path, "State JSON file")->required();
  compute_cmd->add_option("--channel", channel_path, "Channel JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*fig1_cmd) return run_fig1(fig1, *fig1_cmd);
  if (*verify_cmd) return run_verify(verify);
  return run_compute(state_path, channel_path);
}
