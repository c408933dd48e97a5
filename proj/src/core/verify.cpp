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

#include "core/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <tuple>

#include <fmt/format.h>

#include "core/coherence.hpp"
#include "core/errors.hpp"
#include "core/experiment.hpp"
#include "core/io.hpp"
#include "core/rcc.hpp"
#include "core/sampling.hpp"

namespace rcc {

namespace {

using Dims = std::pair<int, int>;

// Running counts for one sweep. The retained worst case is the failing
// instance with the largest metric, or the largest metric when none failed;
// ties go to the smaller key so merging chunks is order independent.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t excluded = 0;
  std::uint64_t exhausted = 0;
  bool has_worst = false;
  bool worst_failed = false;
  double max_metric = -std::numeric_limits<double>::infinity();
  std::uint64_t worst_key = 0;
  std::string worst;

  bool beats(bool fail, double metric, std::uint64_t key) const {
    if (!has_worst) return true;
    return std::make_tuple(fail, metric, ~key) > std::make_tuple(worst_failed, max_metric, ~worst_key);
  }

  void observe(double metric, bool pass, std::uint64_t key,
               const std::function<io::Json()>& describe) {
    ++checks;
    pass ? ++passed : ++failed;
    if (beats(!pass, metric, key)) {
      has_worst = true;
      worst_failed = !pass;
      max_metric = metric;
      worst_key = key;
      io::Json j = describe();
      j["metric"] = metric;
      j["passed"] = pass;
      worst = io::to_text(j, -1);
    }
  }

  void merge(const Tally& o) {
    checks += o.checks;
    passed += o.passed;
    failed += o.failed;
    excluded += o.excluded;
    exhausted += o.exhausted;
    if (o.has_worst && beats(o.worst_failed, o.max_metric, o.worst_key)) {
      has_worst = true;
      worst_failed = o.worst_failed;
      max_metric = o.max_metric;
      worst_key = o.worst_key;
      worst = o.worst;
    }
  }
};

std::uint64_t stream_for(Suite suite, std::size_t dim_index, unsigned part, std::uint64_t index) {
  return (static_cast<std::uint64_t>(suite) << 56) | (static_cast<std::uint64_t>(dim_index) << 48) |
         (static_cast<std::uint64_t>(part) << 44) | (index & ((1ULL << 44) - 1));
}

std::uint64_t key_for(std::size_t dim_index, std::uint64_t sample, std::uint64_t inner = 0) {
  return (static_cast<std::uint64_t>(dim_index) << 56) | (sample << 16) | inner;
}

io::Json instance(Suite suite, const Dims& dims, std::uint64_t seed, std::uint64_t sample) {
  return {{"suite", suite_name(suite)},
          {"dims", {dims.first, dims.second}},
          {"seed", seed},
          {"sample", sample}};
}

io::Json mixed_json(const DensityMatrix& rho) { return {{"density", io::density_to_json(rho)}}; }

// Runs per_sample(tally, sample) over all samples of one dimension pair in
// parallel chunks and merges the per-worker tallies.
Tally sweep(std::uint64_t samples, int workers,
            const std::function<void(Tally&, std::uint64_t)>& per_sample) {
  std::vector<Tally> parts(static_cast<std::size_t>(std::max(workers, 1)));
  parallel_chunks(samples, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) per_sample(parts[static_cast<std::size_t>(w)], s);
  });
  Tally total;
  for (const auto& t : parts) total.merge(t);
  return total;
}

double coherence_of(const ComplexMatrix& unnormalized) {
  return l1_coherence(unnormalized) / unnormalized.trace().real();
}

std::vector<Dims> default_dims(Suite suite) {
  switch (suite) {
    case Suite::Theorem1:
    case Suite::Theorem4: return {{2, 2}};
    case Suite::Theorem2:
    case Suite::NoSignal: return {{2, 2}, {3, 3}};
    case Suite::Lemma1:
    case Suite::Theorem3: return {{2, 2}, {3, 3}, {4, 4}};
  }
  return {{2, 2}};
}

void run_theorem1(const VerifyOptions& opt, const std::vector<Dims>& dims, int workers,
                  VerifyResult& out) {
  const std::uint64_t ops = opt.inner == 0 ? 100 : opt.inner;
  Tally forward, converse;
  double min_best = std::numeric_limits<double>::infinity();
  for (std::size_t di = 0; di < dims.size(); ++di) {
    const auto [da, db] = dims[di];
    forward.merge(sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
      SeededRng rng(opt.seed, stream_for(Suite::Theorem1, di, 0, s));
      const DensityMatrix rho = random_incoherent_quantum(da, db, rng);
      for (std::uint64_t k = 0; k < ops; ++k) {
        const KrausOperation op = random_operation(db, rng);
        const ComplexMatrix post = unnormalized_post_state_a(rho.matrix(), da, db, op);
        if (post.trace().real() < tolerance::kZeroProbability) {
          ++t.excluded;
          continue;
        }
        const double c = coherence_of(post);
        t.observe(c, c < 1e-8, key_for(di, s, k), [&] {
          io::Json j = instance(Suite::Theorem1, dims[di], opt.seed, s);
          j["part"] = "forward";
          j["operation_index"] = k;
          j["state"] = mixed_json(rho);
          j["channel"] = io::operation_to_json(op);
          return j;
        });
      }
    }));
    std::vector<double> best(opt.samples, 0.0);
    converse.merge(sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
      SeededRng rng(opt.seed, stream_for(Suite::Theorem1, di, 1, s));
      const DensityMatrix rho = random_non_incoherent_quantum(da, db, rng);
      double found = 0.0;
      bool ok = false;
      try {
        if (const auto res = find_creating_operation(rho, da, db)) {
          found = res->coherence;
          ok = found > kCreatingThreshold;
        }
      } catch (const SearchExhausted& e) {
        found = e.best_coherence();
        ++t.exhausted;
      }
      best[s] = found;
      // Metric: shortfall below the threshold (negative when found).
      t.observe(kCreatingThreshold - found, ok, key_for(di, s), [&] {
        io::Json j = instance(Suite::Theorem1, dims[di], opt.seed, s);
        j["part"] = "converse";
        j["best_coherence"] = found;
        j["state"] = mixed_json(rho);
        return j;
      });
    }));
    for (double b : best) min_best = std::min(min_best, b);
  }
  out.checks = forward.checks + converse.checks;
  out.passed = forward.passed + converse.passed;
  out.failed = forward.failed + converse.failed;
  out.excluded = forward.excluded;
  out.exhausted = converse.exhausted;
  out.metric = "max post-coherence over incoherent-quantum states";
  out.max_metric = forward.max_metric;
  out.threshold = 1e-8;
  out.worst_case = converse.failed > 0 ? converse.worst : forward.worst;
  out.notes.push_back(fmt::format("forward: {}/{} operations left A incoherent", forward.passed,
                                  forward.checks));
  out.notes.push_back(fmt::format(
      "converse: {}/{} states yielded a creating projector, min best coherence {:.6g}, "
      "search exhausted {}",
      converse.passed, converse.checks, min_best, converse.exhausted));
}

KrausOperation theorem2_operation(const BipartitePureState& psi, std::uint64_t s,
                                  SeededRng& rng) {
  const int db = psi.dim_b();
  const auto inert_values = [&] {
    std::vector<double> n(static_cast<std::size_t>(db));
    for (auto& v : n) v = rng.uniform();
    return n;
  };
  switch (s % 3) {
    case 0: return random_operation(db, rng);
    case 1: return inert_operation(psi, inert_values());
    default: {
      // A small admixture of a generic operation breaks commutation.
      const KrausOperation inert = inert_operation(psi, inert_values());
      const KrausOperation generic = random_operation(db, rng);
      const ComplexMatrix n = 0.99 * inert.n_operator() + 0.01 * generic.n_operator();
      return KrausOperation(db, {psd_sqrt(n)}, "near_inert");
    }
  }
}

Tally run_theorem2_dims(const VerifyOptions& opt, std::size_t di, const Dims& dims, int workers) {
  return sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
    SeededRng rng(opt.seed, stream_for(Suite::Theorem2, di, 0, s));
    const BipartitePureState psi = random_incoherent_a_state(dims.first, dims.second, rng);
    const KrausOperation op = theorem2_operation(psi, s, rng);
    const Theorem2Verdict verdict = theorem2_predicate(psi, op, 1e-9);
    const ComplexMatrix post = unnormalized_post_state_a(psi.projector(), dims.first, dims.second, op);
    if (post.trace().real() < tolerance::kZeroProbability) {
      ++t.excluded;
      return;
    }
    const double c = coherence_of(post);
    if (c >= 1e-9 && c <= 1e-6) {
      ++t.excluded;
      return;
    }
    const bool direct = c > 1e-6;
    t.observe(verdict.creates ? 0.0 : c, direct == verdict.creates, key_for(di, s), [&] {
      io::Json j = instance(Suite::Theorem2, dims, opt.seed, s);
      j["predicate"] = verdict.creates;
      j["coherence"] = c;
      j["state"] = io::state_to_json(psi);
      j["channel"] = io::operation_to_json(op);
      return j;
    });
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Theorem1, Suite::Theorem2, Suite::Lemma1, Suite::Theorem3,
                  Suite::Theorem4, Suite::NoSignal}) {
    if (name == suite_name(s)) return s;
  }
  return std::nullopt;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::Theorem1: return "theorem1";
    case Suite::Theorem2: return "theorem2";
    case Suite::Lemma1: return "lemma1";
    case Suite::Theorem3: return "theorem3";
    case Suite::Theorem4: return "theorem4";
    case Suite::NoSignal: return "nosignal";
  }
  return "unknown";
}

VerifyResult run_verify(Suite suite, const VerifyOptions& opt) {
  const std::vector<Dims> dims = opt.dims.empty() ? default_dims(suite) : opt.dims;
  for (const auto& [da, db] : dims) {
    if (da < 1 || db < 1 || da > 8 || db > 8) {
      throw Error(ErrorCode::InvalidArgument, "verify: dimensions must lie in [1, 8]");
    }
    if ((suite == Suite::Theorem2 || suite == Suite::Lemma1 || suite == Suite::Theorem3 ||
         suite == Suite::Theorem4) && db < da) {
      throw Error(ErrorCode::InvalidArgument, "verify: this suite needs dim_b >= dim_a");
    }
    if (suite == Suite::Theorem4 && (da != 2 || db != 2)) {
      throw Error(ErrorCode::WrongDimension, "verify theorem4: only 2x2 is defined");
    }
  }
  const int workers = opt.workers > 0 ? opt.workers : worker_count();
  VerifyResult out;
  out.suite = suite;

  if (suite == Suite::Theorem1) {
    run_theorem1(opt, dims, workers, out);
    return out;
  }

  Tally total;
  for (std::size_t di = 0; di < dims.size(); ++di) {
    const Dims d = dims[di];
    const auto [da, db] = d;
    switch (suite) {
      case Suite::Theorem2:
        total.merge(run_theorem2_dims(opt, di, d, workers));
        break;
      case Suite::Lemma1:
        total.merge(sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
          SeededRng rng(opt.seed, stream_for(suite, di, 0, s));
          const BipartitePureState psi = random_incoherent_a_state(da, db, rng);
          const KrausOperation op = random_operation(db, rng);
          double achieved = 0.0, bound = 0.0;
          try {
            achieved = l1_coherence(post_operation_state_a_generic(psi, op).state_a);
            bound = lemma1_bound(psi, op);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ZeroProbability) throw;
            ++t.excluded;
            return;
          }
          t.observe(achieved - bound, achieved <= bound + 1e-10, key_for(di, s), [&] {
            io::Json j = instance(suite, d, opt.seed, s);
            j["achieved"] = achieved;
            j["bound"] = bound;
            j["state"] = io::state_to_json(psi);
            j["channel"] = io::operation_to_json(op);
            return j;
          });
        }));
        break;
      case Suite::Theorem3:
        total.merge(sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
          SeededRng rng(opt.seed, stream_for(suite, di, 0, s));
          const BipartitePureState psi = random_incoherent_a_state(da, db, rng);
          const Channel channel = s % 2 == 0 ? Channel(random_tp_channel(db, rng))
                                             : Channel(random_ensemble(db, rng));
          const RccReport r = average_rcc(psi, channel);
          const double th3 = r.theorem3_bound.value();
          const double violation =
              std::max({r.average_rcc - r.tighter_bound, r.tighter_bound - th3,
                        r.average_rcc - th3});
          t.observe(violation, violation <= 1e-10, key_for(di, s), [&] {
            io::Json j = instance(suite, d, opt.seed, s);
            j["average_rcc"] = r.average_rcc;
            j["tighter_bound"] = r.tighter_bound;
            j["theorem3_bound"] = th3;
            j["state"] = io::state_to_json(psi);
            j["channel"] = io::channel_to_json(channel);
            return j;
          });
        }));
        break;
      case Suite::Theorem4: {
        const std::uint64_t count = opt.inner == 0 ? 100 : opt.inner;
        std::vector<KrausOperation> channels;
        for (std::uint64_t k = 0; k < count; ++k) {
          SeededRng rng(opt.seed, stream_for(suite, di, 1, k));
          channels.push_back(random_tp_channel(db, rng));
        }
        total.merge(sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
          SeededRng rng(opt.seed, stream_for(suite, di, 0, s));
          const BipartitePureState psi = random_incoherent_a_state(da, db, rng);
          for (std::uint64_t k = 0; k < count; ++k) {
            const FactorizationResult f = factorization_check(psi, channels[k]);
            const double dev = std::abs(f.average_rcc - f.entanglement * f.maxent_average_rcc);
            t.observe(dev, f.holds, key_for(di, s, k), [&] {
              io::Json j = instance(suite, d, opt.seed, s);
              j["channel_index"] = k;
              j["average_rcc"] = f.average_rcc;
              j["entanglement"] = f.entanglement;
              j["maxent_average_rcc"] = f.maxent_average_rcc;
              j["state"] = io::state_to_json(psi);
              j["channel"] = io::operation_to_json(channels[k]);
              return j;
            });
          }
        }));
        break;
      }
      case Suite::NoSignal:
        total.merge(sweep(opt.samples, workers, [&](Tally& t, std::uint64_t s) {
          SeededRng rng(opt.seed, stream_for(suite, di, 0, s));
          const DensityMatrix rho = random_density(da * db, rng);
          const KrausOperation op = random_tp_channel(db, rng);
          const ComplexMatrix after = unnormalized_post_state_a(rho.matrix(), da, db, op);
          const double dev = max_abs(after - partial_trace(rho.matrix(), da, db, Subsystem::A));
          t.observe(dev, dev < 1e-10, key_for(di, s), [&] {
            io::Json j = instance(suite, d, opt.seed, s);
            j["state"] = mixed_json(rho);
            j["channel"] = io::operation_to_json(op);
            return j;
          });
        }));
        break;
      case Suite::Theorem1:
        break;
    }
  }

  out.checks = total.checks;
  out.passed = total.passed;
  out.failed = total.failed;
  out.excluded = total.excluded;
  out.max_metric = total.has_worst ? total.max_metric : 0.0;
  out.worst_case = total.worst;
  switch (suite) {
    case Suite::Theorem2:
      out.metric = "max post-coherence where the predicate reports no creation";
      out.threshold = 1e-9;
      out.max_excluded_fraction = 0.01;
      out.notes.push_back(fmt::format("{} disagreements, {} instances in the ambiguity band",
                                      total.failed, total.excluded));
      break;
    case Suite::Lemma1:
      out.metric = "max (achieved coherence - per-outcome bound)";
      out.threshold = 1e-10;
      break;
    case Suite::Theorem3:
      out.metric = "max ordering violation of average <= tighter <= theorem-3 bound";
      out.threshold = 1e-10;
      break;
    case Suite::Theorem4:
      out.metric = "max |avg(psi) - E avg(partner)|";
      out.threshold = 1e-9;
      break;
    case Suite::NoSignal:
      out.metric = "max |tr_B[(1 (x) $) rho] - rho_A|";
      out.threshold = 1e-10;
      break;
    case Suite::Theorem1:
      break;
  }
  return out;
}

}  // namespace rcc
