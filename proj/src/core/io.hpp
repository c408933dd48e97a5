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

#ifndef RCC_CORE_IO_HPP
#define RCC_CORE_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "core/channel.hpp"
#include "core/rcc.hpp"

namespace rcc::io {

using Json = nlohmann::ordered_json;

/// Parses text or throws Parse with the line/column and the source name.
Json parse(std::string_view text, const std::string& source);
std::string read_file(const std::string& path);

// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
ComplexMatrix matrix_from_json(const Json& j, const std::string& where = "matrix");
Json matrix_to_json(const ComplexMatrix& m);

// {"dim_a": n, "dim_b": m, "amplitudes": [[re, im], ...]}, index i*dim_b + j.
BipartitePureState state_from_json(const Json& j);
Json state_to_json(const BipartitePureState& psi);

// {"dim_b": n, "label": "...", "kraus": [matrix, ...]} or
// {"operations": [channel, ...]} for an ensemble.
Channel channel_from_json(const Json& j);
Json operation_to_json(const KrausOperation& op);
Json channel_to_json(const Channel& channel);

/// Serializes with every floating-point number at 17 significant digits.
std::string to_text(const Json& j, int indent = 2);

Json density_to_json(const DensityMatrix& rho);
Json report_to_json(const RccReport& report);

}  // namespace rcc::io

#endif  // RCC_CORE_IO_HPP
