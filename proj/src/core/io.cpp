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

#include "core/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "core/errors.hpp"

namespace rcc::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int positive_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 4096) {
    fail(where + "." + key, "expected a positive integer");
  }
  return v.get<int>();
}

Complex complex_entry(const Json& e, const std::string& where) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    fail(where, "expected a [re, im] pair of numbers");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json optional_number(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

KrausOperation operation_from_json(const Json& j, const std::string& where) {
  const int dim_b = positive_int(j, "dim_b", where);
  const Json& list = field(j, "kraus", where);
  if (!list.is_array()) fail(where + ".kraus", "expected an array of matrices");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t n = 0; n < list.size(); ++n) {
    kraus.push_back(matrix_from_json(list[n], where + ".kraus[" + std::to_string(n) + "]"));
  }
  std::string label;
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) fail(where + ".label", "expected a string");
    label = it->get<std::string>();
  }
  return KrausOperation(dim_b, std::move(kraus), std::move(label));
}

void write_text(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      out += fmt::format("{:.17g}", j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Scalar arrays such as [re, im] pairs stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_structured();
      });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write_text(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        write_text(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string to_text(const Json& j, int indent) {
  std::string out;
  write_text(out, j, indent, 0);
  return out;
}

Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, source + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  const int rows = positive_int(j, "rows", where);
  const int cols = positive_int(j, "cols", where);
  const Json& entries = field(j, "entries", where);
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * cols) {
    fail(where + ".entries", "expected " + std::to_string(rows * cols) + " entries");
  }
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(r) * cols + c;
      m(r, c) = complex_entry(entries[k], where + ".entries[" + std::to_string(k) + "]");
    }
  }
  if (!all_finite(m)) fail(where, "non-finite entry");
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

BipartitePureState state_from_json(const Json& j) {
  const int dim_a = positive_int(j, "dim_a", "state");
  const int dim_b = positive_int(j, "dim_b", "state");
  const Json& amps = field(j, "amplitudes", "state");
  if (!amps.is_array() || amps.size() != static_cast<std::size_t>(dim_a) * dim_b) {
    fail("state.amplitudes", "expected " + std::to_string(dim_a * dim_b) + " amplitudes");
  }
  ComplexVector v(dim_a * dim_b);
  for (std::size_t k = 0; k < amps.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) =
        complex_entry(amps[k], "state.amplitudes[" + std::to_string(k) + "]");
  }
  return BipartitePureState(dim_a, dim_b, std::move(v));
}

Json state_to_json(const BipartitePureState& psi) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    amps.push_back(complex_to_json(psi.amplitudes()(k)));
  }
  return {{"dim_a", psi.dim_a()}, {"dim_b", psi.dim_b()}, {"amplitudes", std::move(amps)}};
}

Channel channel_from_json(const Json& j) {
  if (!j.is_object()) fail("channel", "expected an object");
  if (const auto it = j.find("operations"); it != j.end()) {
    if (!it->is_array()) fail("channel.operations", "expected an array");
    std::vector<KrausOperation> ops;
    for (std::size_t k = 0; k < it->size(); ++k) {
      ops.push_back(
          operation_from_json((*it)[k], "channel.operations[" + std::to_string(k) + "]"));
    }
    return ChannelEnsemble(std::move(ops));
  }
  return operation_from_json(j, "channel");
}

Json operation_to_json(const KrausOperation& op) {
  Json kraus = Json::array();
  for (const auto& f : op.kraus()) kraus.push_back(matrix_to_json(f));
  return {{"dim_b", op.dim_b()}, {"label", op.label()}, {"kraus", std::move(kraus)}};
}

Json channel_to_json(const Channel& channel) {
  if (const auto* op = std::get_if<KrausOperation>(&channel)) return operation_to_json(*op);
  Json ops = Json::array();
  for (const auto& op : std::get<ChannelEnsemble>(channel).operations()) {
    ops.push_back(operation_to_json(op));
  }
  return {{"operations", std::move(ops)}};
}

Json density_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

Json report_to_json(const RccReport& report) {
  Json outcomes = Json::array();
  Json lemma1 = Json::array();
  for (const auto& rec : report.outcomes) {
    outcomes.push_back({{"label", rec.label},
                        {"probability", rec.probability},
                        {"coherence", rec.coherence},
                        {"zero_probability", rec.zero_probability},
                        {"state_a", rec.state_a ? density_to_json(*rec.state_a) : Json(nullptr)},
                        {"lemma1_bound", optional_number(rec.lemma1_bound)}});
    lemma1.push_back(optional_number(rec.lemma1_bound));
  }
  Json holds = report.factorization_holds ? Json(*report.factorization_holds) : Json(nullptr);
  return {{"dim_a", report.dim_a},
          {"dim_b", report.dim_b},
          {"outcomes", std::move(outcomes)},
          {"average_rcc", report.average_rcc},
          {"entanglement", report.entanglement},
          {"lemma1_bounds", std::move(lemma1)},
          {"theorem3_bound", optional_number(report.theorem3_bound)},
          {"tighter_bound", report.tighter_bound},
          {"maxent_average_rcc", optional_number(report.maxent_average_rcc)},
          {"factorization_ratio", optional_number(report.factorization_ratio)},
          {"factorization_holds", std::move(holds)}};
}

}  // namespace rcc::io
