// Copyright 2026 The gqt Authors
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

#pragma once

// JSON encodings of the library types. Doubles are written in shortest
// round-trip form, so every dump parses back bit-exactly. Complex numbers
// are [re, im] pairs; matrices are row-major arrays of rows.

#include <string>

#include "json.hpp"

#include "gqt/dhsp.hpp"
#include "gqt/gqft.hpp"
#include "gqt/haar.hpp"
#include "gqt/phasemat.hpp"
#include "gqt/qstate.hpp"
#include "gqt/rotft.hpp"

namespace gqt::json_io {

using Json = nlohmann::ordered_json;

/// Basis/ordering note embedded in every matrix dump.
inline constexpr const char* kConvention =
    "row-major, entries[y][x] = <y|U|x>, basis index k = sum_i x_i 2^i "
    "(qubit i has weight 2^i)";

/// Parses text; malformed JSON throws InvalidInput.
Json parse(const std::string& text);
Json read_file(const std::string& path);

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const PhaseMatrix& pm);
PhaseMatrix phase_matrix_from_json(const Json& j);

/// {"n", "phi", optional "regime", "cell_fns", "row_fns", "row_support_cap"}.
/// Without "regime" the spec is triangular when check_triangular passes and
/// general otherwise.
Json to_json(const GqftSpec& spec);
GqftSpec gqft_spec_from_json(const Json& j);

/// {"n", "variant", "theta": [{"i","j","t0","t1"}...], "alpha0": [...]}.
Json to_json(const RotSpec& spec);
RotSpec rot_spec_from_json(const Json& j);

/// {"n", "gates": [{"kind", "target", "controls", "u", ...}...]}.
Json to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

/// {"n", "convention", "entries"}.
Json to_json(const DenseUnitary& m);
DenseUnitary dense_from_json(const Json& j);

Json to_json(const ValidityReport& rep);
Json to_json(const Histogram& h);
Json amplitudes_to_json(const QState& s);

/// Matrix as CSV (12 significant digits; not round-trip exact).
std::string dense_to_csv(const DenseUnitary& m, const std::string& kind);

}  // namespace gqt::json_io
