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

#include "rcc/rcc.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "core/coherence.hpp"
#include "core/errors.hpp"
#include "core/experiment.hpp"
#include "core/io.hpp"
#include "core/rcc.hpp"
#include "core/verify.hpp"

struct rcc_state {
  rcc::BipartitePureState value;
};

struct rcc_density {
  rcc::DensityMatrix value;
  int dim_a;
  int dim_b;
};

struct rcc_channel {
  rcc::Channel value;
};

struct rcc_report {
  rcc::RccReport value;
};

struct rcc_fig1_config {
  rcc::ExperimentConfig value;
};

namespace {

thread_local std::string g_last_error;

rcc_status fail(rcc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body and converts any exception into a status code.
template <typename F>
rcc_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return RCC_OK;
  } catch (const rcc::Error& e) {
    return fail(static_cast<rcc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RCC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RCC_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw rcc::Error(rcc::ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
  }
}

rcc::ComplexMatrix read_matrix(int rows, int cols, const double* data) {
  rcc::ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t k = 2 * (static_cast<std::size_t>(r) * cols + c);
      m(r, c) = rcc::Complex(data[k], data[k + 1]);
    }
  }
  return m;
}

void write_matrix(const rcc::ComplexMatrix& m, double* out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::size_t k = 2 * static_cast<std::size_t>(r * m.cols() + c);
      out[k] = m(r, c).real();
      out[k + 1] = m(r, c).imag();
    }
  }
}

void require_dim(int d, const char* name) {
  if (d < 1 || d > 64) {
    throw rcc::Error(rcc::ErrorCode::InvalidArgument, std::string(name) + " must lie in [1, 64]");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Make>
rcc_status make_channel(rcc_channel** out, Make&& make) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new rcc_channel{rcc::Channel(make())};
  });
}

const rcc::KrausOperation& single_operation(const rcc_channel* channel) {
  const auto* op = std::get_if<rcc::KrausOperation>(&channel->value);
  if (op == nullptr) {
    throw rcc::Error(rcc::ErrorCode::InvalidArgument,
                     "expected a single operation, got an ensemble");
  }
  return *op;
}

double or_nan(const std::optional<double>& x) {
  return x ? *x : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

extern "C" {

const char* rcc_version(void) { return "0.1.0"; }

const char* rcc_status_name(rcc_status status) {
  switch (status) {
    case RCC_OK: return "OK";
    case RCC_ERR_INTERNAL: return "Internal";
    default:
      if (status >= RCC_ERR_INVALID_ARGUMENT && status <= RCC_ERR_IO) {
        return rcc::to_string(static_cast<rcc::ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* rcc_last_error(void) { return g_last_error.c_str(); }

void rcc_string_free(char* s) { std::free(s); }

rcc_status rcc_state_create(int dim_a, int dim_b, const double* amplitudes, rcc_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(amplitudes, "amplitudes");
    require_dim(dim_a, "dim_a");
    require_dim(dim_b, "dim_b");
    const rcc::ComplexMatrix v = read_matrix(dim_a * dim_b, 1, amplitudes);
    *out = new rcc_state{rcc::BipartitePureState(dim_a, dim_b, v.col(0))};
  });
}

rcc_status rcc_state_from_json(const char* json, rcc_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(json, "json");
    *out = new rcc_state{rcc::io::state_from_json(rcc::io::parse(json, "state"))};
  });
}

rcc_status rcc_state_to_json(const rcc_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = dup_string(rcc::io::to_text(rcc::io::state_to_json(state->value)));
  });
}

void rcc_state_free(rcc_state* state) { delete state; }

rcc_status rcc_state_dims(const rcc_state* state, int* dim_a, int* dim_b) {
  return guarded([&] {
    require(state, "state");
    if (dim_a) *dim_a = state->value.dim_a();
    if (dim_b) *dim_b = state->value.dim_b();
  });
}

rcc_status rcc_state_concurrence(const rcc_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = rcc::concurrence(state->value);
  });
}

rcc_status rcc_state_schmidt_weights(const rcc_state* state, double* weights, size_t capacity,
                                     size_t* count) {
  return guarded([&] {
    require(state, "state");
    const auto& w = state->value.schmidt().weights;
    if (count) *count = w.size();
    if (weights) {
      for (std::size_t k = 0; k < std::min(capacity, w.size()); ++k) weights[k] = w[k];
    }
  });
}

rcc_status rcc_state_reduced_a(const rcc_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    write_matrix(rcc::reduced_a(state->value).matrix(), out);
  });
}

rcc_status rcc_state_partner(const rcc_state* state, rcc_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(state, "state");
    *out = new rcc_state{rcc::maximally_entangled_partner(state->value)};
  });
}

rcc_status rcc_density_create(int dim_a, int dim_b, const double* entries, rcc_density** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(entries, "entries");
    require_dim(dim_a, "dim_a");
    require_dim(dim_b, "dim_b");
    const int n = dim_a * dim_b;
    *out = new rcc_density{rcc::validate_density(read_matrix(n, n, entries)), dim_a, dim_b};
  });
}

void rcc_density_free(rcc_density* density) { delete density; }

rcc_status rcc_density_is_incoherent_quantum(const rcc_density* density, double tol, int* out) {
  return guarded([&] {
    require(density, "density");
    require(out, "out");
    *out = rcc::is_incoherent_quantum(density->value, density->dim_a, density->dim_b, tol) ? 1 : 0;
  });
}

rcc_status rcc_find_creating_operation(const rcc_density* density, rcc_channel** out,
                                       double* coherence) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(density, "density");
    const auto found =
        rcc::find_creating_operation(density->value, density->dim_a, density->dim_b);
    if (coherence) *coherence = found ? found->coherence : 0.0;
    if (found) *out = new rcc_channel{rcc::Channel(found->operation)};
  });
}

rcc_status rcc_l1_coherence(int dim, const double* entries, double* out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    require_dim(dim, "dim");
    *out = rcc::l1_coherence(rcc::validate_density(read_matrix(dim, dim, entries)));
  });
}

rcc_status rcc_channel_create(int dim_b, size_t count, const double* kraus, const char* label,
                              rcc_channel** out) {
  return make_channel(out, [&] {
    require(kraus, "kraus");
    require_dim(dim_b, "dim_b");
    std::vector<rcc::ComplexMatrix> ops;
    const std::size_t stride = 2 * static_cast<std::size_t>(dim_b) * dim_b;
    for (std::size_t n = 0; n < count; ++n) {
      ops.push_back(read_matrix(dim_b, dim_b, kraus + n * stride));
    }
    return rcc::KrausOperation(dim_b, std::move(ops), label ? label : "");
  });
}

rcc_status rcc_channel_from_json(const char* json, rcc_channel** out) {
  return make_channel(out, [&] {
    require(json, "json");
    return rcc::io::channel_from_json(rcc::io::parse(json, "channel"));
  });
}

rcc_status rcc_channel_to_json(const rcc_channel* channel, char** out) {
  return guarded([&] {
    require(channel, "channel");
    require(out, "out");
    *out = dup_string(rcc::io::to_text(rcc::io::channel_to_json(channel->value)));
  });
}

void rcc_channel_free(rcc_channel* channel) { delete channel; }

rcc_status rcc_channel_phase_damping(double r, rcc_channel** out) {
  return make_channel(out, [&] { return rcc::phase_damping(r); });
}
rcc_status rcc_channel_depolarizing(double p, rcc_channel** out) {
  return make_channel(out, [&] { return rcc::depolarizing(p); });
}
rcc_status rcc_channel_bit_flip(double p, rcc_channel** out) {
  return make_channel(out, [&] { return rcc::bit_flip(p); });
}
rcc_status rcc_channel_phase_flip(double p, rcc_channel** out) {
  return make_channel(out, [&] { return rcc::phase_flip(p); });
}
rcc_status rcc_channel_bit_phase_flip(double p, rcc_channel** out) {
  return make_channel(out, [&] { return rcc::bit_phase_flip(p); });
}

rcc_status rcc_channel_projective_measurement(int dim, const double* basis, rcc_channel** out) {
  return make_channel(out, [&] {
    require(basis, "basis");
    require_dim(dim, "dim");
    return rcc::projective_measurement(read_matrix(dim, dim, basis));
  });
}

rcc_status rcc_channel_inert(const rcc_state* state, const double* n_values, size_t count,
                             rcc_channel** out) {
  return make_channel(out, [&] {
    require(state, "state");
    require(n_values, "n_values");
    return rcc::inert_operation(state->value, std::span<const double>(n_values, count));
  });
}

rcc_status rcc_channel_is_ensemble(const rcc_channel* channel, int* out) {
  return guarded([&] {
    require(channel, "channel");
    require(out, "out");
    *out = std::holds_alternative<rcc::ChannelEnsemble>(channel->value) ? 1 : 0;
  });
}

rcc_status rcc_channel_is_trace_preserving(const rcc_channel* channel, double tol, int* out) {
  return guarded([&] {
    require(channel, "channel");
    require(out, "out");
    // Ensembles are trace preserving as a whole by construction.
    *out = std::holds_alternative<rcc::ChannelEnsemble>(channel->value) ||
                   rcc::is_trace_preserving(std::get<rcc::KrausOperation>(channel->value), tol)
               ? 1
               : 0;
  });
}

rcc_status rcc_theorem2_predicate(const rcc_state* state, const rcc_channel* channel, double tol,
                                  int* creates, int* witness) {
  return guarded([&] {
    require(state, "state");
    require(channel, "channel");
    const auto verdict = rcc::theorem2_predicate(state->value, single_operation(channel), tol);
    if (creates) *creates = verdict.creates ? 1 : 0;
    if (witness) *witness = verdict.witness.value_or(-1);
  });
}

rcc_status rcc_compute(const rcc_state* state, const rcc_channel* channel, rcc_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(state, "state");
    require(channel, "channel");
    *out = new rcc_report{rcc::average_rcc(state->value, channel->value)};
  });
}

void rcc_report_free(rcc_report* report) { delete report; }

rcc_status rcc_report_to_json(const rcc_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(rcc::io::to_text(rcc::io::report_to_json(report->value)));
  });
}

rcc_status rcc_report_average(const rcc_report* report, double* average, double* entanglement) {
  return guarded([&] {
    require(report, "report");
    if (average) *average = report->value.average_rcc;
    if (entanglement) *entanglement = report->value.entanglement;
  });
}

rcc_status rcc_report_outcome_count(const rcc_report* report, size_t* count) {
  return guarded([&] {
    require(report, "report");
    require(count, "count");
    *count = report->value.outcomes.size();
  });
}

rcc_status rcc_report_outcome(const rcc_report* report, size_t index, double* probability,
                              double* coherence, int* zero_probability) {
  return guarded([&] {
    require(report, "report");
    if (index >= report->value.outcomes.size()) {
      throw rcc::Error(rcc::ErrorCode::InvalidArgument, "outcome index out of range");
    }
    const auto& rec = report->value.outcomes[index];
    if (probability) *probability = rec.probability;
    if (coherence) *coherence = rec.coherence;
    if (zero_probability) *zero_probability = rec.zero_probability ? 1 : 0;
  });
}

rcc_status rcc_report_bounds(const rcc_report* report, double* tighter, double* theorem3,
                             double* maxent_average) {
  return guarded([&] {
    require(report, "report");
    if (tighter) *tighter = report->value.tighter_bound;
    if (theorem3) *theorem3 = or_nan(report->value.theorem3_bound);
    if (maxent_average) *maxent_average = or_nan(report->value.maxent_average_rcc);
  });
}

rcc_status rcc_report_factorization(const rcc_report* report, double* ratio, int* holds) {
  return guarded([&] {
    require(report, "report");
    if (ratio) *ratio = or_nan(report->value.factorization_ratio);
    if (holds) {
      *holds = report->value.factorization_holds ? (*report->value.factorization_holds ? 1 : 0)
                                                 : -1;
    }
  });
}

rcc_status rcc_fig1_config_create(rcc_fig1_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new rcc_fig1_config{};
  });
}

void rcc_fig1_config_free(rcc_fig1_config* config) { delete config; }

rcc_status rcc_fig1_config_load_json(rcc_fig1_config* config, const char* json) {
  return guarded([&] {
    require(config, "config");
    require(json, "json");
    config->value = rcc::config_from_json(rcc::io::parse(json, "config"), config->value);
  });
}

rcc_status rcc_fig1_config_set_samples(rcc_fig1_config* config, uint64_t samples) {
  return guarded([&] {
    require(config, "config");
    config->value.samples = samples;
  });
}

rcc_status rcc_fig1_config_set_rates(rcc_fig1_config* config, const double* rates, size_t count) {
  return guarded([&] {
    require(config, "config");
    require(rates, "rates");
    config->value.damping_rates.assign(rates, rates + count);
  });
}

rcc_status rcc_fig1_config_set_seed(rcc_fig1_config* config, uint64_t seed) {
  return guarded([&] {
    require(config, "config");
    config->value.seed = seed;
  });
}

rcc_status rcc_fig1_config_set_output(rcc_fig1_config* config, const char* csv_path) {
  return guarded([&] {
    require(config, "config");
    require(csv_path, "csv_path");
    config->value.output_path = csv_path;
  });
}

rcc_status rcc_fig1_config_set_plot(rcc_fig1_config* config, const char* svg_path) {
  return guarded([&] {
    require(config, "config");
    config->value.emit_plot = svg_path != nullptr;
    config->value.plot_path = svg_path ? svg_path : "";
  });
}

rcc_status rcc_fig1_config_rate_count(const rcc_fig1_config* config, size_t* count) {
  return guarded([&] {
    require(config, "config");
    require(count, "count");
    *count = config->value.damping_rates.size();
  });
}

rcc_status rcc_fig1_run(const rcc_fig1_config* config, rcc_fig1_summary* summary,
                        double* mean_avg_rcc) {
  return guarded([&] {
    require(config, "config");
    const rcc::Fig1Summary s = rcc::run_fig1(config->value);
    if (summary) {
      summary->rows = s.rows;
      summary->max_ratio_deviation = s.max_ratio_deviation;
      summary->strictly_increasing = s.strictly_increasing ? 1 : 0;
      summary->monotonicity_flagged = s.monotonicity_flagged ? 1 : 0;
    }
    if (mean_avg_rcc) {
      std::copy(s.mean_avg_rcc.begin(), s.mean_avg_rcc.end(), mean_avg_rcc);
    }
  });
}

rcc_status rcc_verify_run(const char* suite, const rcc_verify_options* options,
                          rcc_verify_summary* summary, char** details) {
  return guarded([&] {
    require(suite, "suite");
    require(options, "options");
    const auto parsed = rcc::parse_suite(suite);
    if (!parsed) {
      throw rcc::Error(rcc::ErrorCode::InvalidArgument, std::string("unknown suite '") + suite +
                                                            "'");
    }
    rcc::VerifyOptions opt;
    opt.samples = options->samples;
    opt.seed = options->seed;
    opt.inner = options->inner;
    if (options->dims != nullptr) {
      for (std::size_t k = 0; k < options->dim_count; ++k) {
        opt.dims.emplace_back(options->dims[2 * k], options->dims[2 * k + 1]);
      }
    }
    const rcc::VerifyResult r = rcc::run_verify(*parsed, opt);
    if (summary) {
      summary->checks = r.checks;
      summary->passed = r.passed;
      summary->failed = r.failed;
      summary->excluded = r.excluded;
      summary->exhausted = r.exhausted;
      summary->max_metric = r.max_metric;
      summary->threshold = r.threshold;
      summary->excluded_fraction = r.excluded_fraction();
      summary->ok = r.ok() ? 1 : 0;
    }
    if (details) {
      std::string text = "metric: " + r.metric + "\n";
      for (const auto& note : r.notes) text += note + "\n";
      text += "worst case: " + (r.worst_case.empty() ? std::string("none") : r.worst_case) + "\n";
      *details = dup_string(text);
    }
  });
}

}  // extern "C"
