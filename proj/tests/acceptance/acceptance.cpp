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

// One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "../support.hpp"
#include "core/coherence.hpp"
#include "core/experiment.hpp"
#include "core/rcc.hpp"
#include "core/verify.hpp"

namespace {

using namespace rcc;

int g_failures = 0;

void report(bool pass, const std::string& name, const std::string& detail, double seconds) {
  std::printf("%s  %-36s %s  [%.1fs]\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_e(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void theorem4() {
  Stopwatch t;
  VerifyOptions opt;
  opt.samples = 10000;
  opt.inner = 100;
  const VerifyResult r = run_verify(Suite::Theorem4, opt);
  const bool pass = r.ok() && r.checks == 1000000 && r.max_metric < 1e-9;
  report(pass, "factorization 2x2",
         "max |avg - E*avg(partner)| = " + fmt_e(r.max_metric) + " < 1e-9 over " +
             std::to_string(r.checks) + " (state, channel) pairs",
         t.seconds());
}

void fig1() {
  Stopwatch t;
  const auto dir = std::filesystem::temp_directory_path() / "rcc_acceptance_fig1";
  std::filesystem::create_directories(dir);
  ExperimentConfig c;
  c.samples = 20000;
  c.damping_rates = {0.1, 0.3, 0.5, 0.7, 0.9};
  c.seed = 2017;
  c.output_path = (dir / "run1.csv").string();
  const Fig1Summary first = run_fig1(c);
  c.output_path = (dir / "run2.csv").string();
  const Fig1Summary second = run_fig1(c);
  const std::string a = slurp(dir / "run1.csv");
  const std::string b = slurp(dir / "run2.csv");
  std::filesystem::remove_all(dir);

  const bool identical = !a.empty() && a == b;
  const bool pass = first.rows == 100000 && first.max_ratio_deviation < 1e-9 &&
                    first.strictly_increasing && identical &&
                    second.max_ratio_deviation == first.max_ratio_deviation;
  std::string means;
  for (double m : first.mean_avg_rcc) means += (means.empty() ? "" : ",") + fmt_e(m);
  report(pass, "damping sweep reproduction",
         "rows=" + std::to_string(first.rows) + " max |ratio - E| = " +
             fmt_e(first.max_ratio_deviation) + " < 1e-9; means " + means +
             (first.strictly_increasing ? " strictly increasing" : " NOT increasing") +
             "; CSV " + (identical ? "byte-identical" : "DIFFERS") + " across runs",
         t.seconds());
}

void theorem1() {
  Stopwatch t;
  VerifyOptions opt;
  opt.samples = 1000;
  opt.inner = 100;
  const VerifyResult r = run_verify(Suite::Theorem1, opt);
  const bool pass = r.ok() && r.exhausted == 0 && r.max_metric < 1e-8 &&
                    r.checks + r.excluded == 1000 * 100 + 1000;
  std::string notes;
  for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
  report(pass, "incoherent-quantum characterization",
         "forward max coherence = " + fmt_e(r.max_metric) + " < 1e-8; " + notes, t.seconds());
}

void theorem2() {
  Stopwatch t;
  VerifyOptions opt;
  opt.samples = 10000;
  opt.dims = {{2, 2}, {3, 3}};
  const VerifyResult r = run_verify(Suite::Theorem2, opt);
  const bool pass = r.failed == 0 && r.excluded_fraction() < 0.01 && r.checks == 20000;
  report(pass, "commutator predicate agreement",
         std::to_string(r.failed) + " disagreements over " + std::to_string(r.checks) +
             " pairs; excluded fraction " + fmt_e(r.excluded_fraction()) + " < 1e-2",
         t.seconds());
}

void bounds() {
  Stopwatch t;
  VerifyOptions opt;
  opt.samples = 10000;
  opt.dims = {{2, 2}, {3, 3}, {4, 4}};
  const VerifyResult l = run_verify(Suite::Lemma1, opt);
  const VerifyResult o = run_verify(Suite::Theorem3, opt);
  const bool pass = l.ok() && o.ok() && l.checks == 30000 && o.checks == 30000 &&
                    l.max_metric <= 1e-10 && o.max_metric <= 1e-10;
  report(pass, "bound ordering",
         "per-outcome excess " + fmt_e(l.max_metric) + ", average<=tighter<=dimension bound excess " +
             fmt_e(o.max_metric) + " (tol 1e-10) over 3x10^4 instances each",
         t.seconds());
}

// Averages by three independent routes must agree with the hand values.
double worst_closed_form_error() {
  double worst = 0.0;
  auto check = [&](const BipartitePureState& psi, const KrausOperation& ch, double expected,
                   std::optional<double> expected_e) {
    const RccReport fast = average_rcc(psi, ch);
    double generic = 0.0;
    for (const auto& f : ch.kraus()) {
      const KrausOperation branch(ch.dim_b(), {f});
      const ComplexMatrix m = unnormalized_post_state_a(psi.projector(), 2, 2, branch);
      if (m.trace().real() < 1e-14) continue;
      const PostState p = post_operation_state_a_generic(psi, branch);
      generic += p.probability * l1_coherence(p.state_a);
    }
    const double oracle = test::oracle_average(psi, ch);
    for (double v : {fast.average_rcc, generic, oracle}) {
      worst = std::max(worst, std::abs(v - expected));
    }
    if (expected_e) worst = std::max(worst, std::abs(fast.entanglement - *expected_e));
  };
  for (double r : {0.25, 0.5, 0.75}) {
    check(test::hadamard_beta_state(0.5), phase_damping(r), r, 1.0);
  }
  check(test::hadamard_beta_state(0.9), phase_damping(0.5), 0.3, 0.6);
  return worst;
}

void closed_forms() {
  Stopwatch t;
  const double err = worst_closed_form_error();
  report(err < 1e-12, "closed-form oracles",
         "max error " + fmt_e(err) + " < 1e-12 (fast, generic and index-sum paths)", t.seconds());
}

void no_signaling() {
  Stopwatch t;
  VerifyOptions opt;
  opt.samples = 1000;
  const VerifyResult r = run_verify(Suite::NoSignal, opt);
  const bool pass = r.ok() && r.max_metric < 1e-10;
  report(pass, "no-signaling",
         "max |tr_B[(1 x $) rho] - rho_A| = " + fmt_e(r.max_metric) + " < 1e-10 over " +
             std::to_string(r.checks) + " (state, channel) pairs",
         t.seconds());
}

}  // namespace

int main() {
  theorem4();
  fig1();
  theorem1();
  theorem2();
  bounds();
  closed_forms();
  no_signaling();
  std::printf("%s: %d failing criteria\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
  return g_failures == 0 ? 0 : 1;
}
