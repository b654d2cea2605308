// Copyright 2026 The latdet Authors
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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latdet/linalg.hpp"

namespace latdet {

enum class LatticeFormat { Json, Text };

/// JSON: {"n": N, "m": M, "basis": [["1", "-2", ...], ...]} with coordinates
/// as decimal strings. Text: one vector per line, whitespace separated;
/// blank lines and lines starting with '#' are ignored.
std::string write_lattice(const Basis& basis, LatticeFormat format);
nlohmann::json lattice_to_json(const Basis& basis);

/// Parses either format (JSON when the first non-blank character is '{').
/// Throws Parse on malformed input and the Basis errors on invalid bases.
Basis parse_lattice(std::string_view text);
Basis lattice_from_json(const nlohmann::json& j);

/// Vector list in either format without the basis checks; used for d-vector
/// files, where dependence is reported by the consumer.
std::vector<IntVector> parse_vectors(std::string_view text);

nlohmann::json matrix_to_json(const IntMatrix& m);

/// "3/4", "-2", "0.75" or "1e-2"-free decimal forms; Parse on anything else.
Rational parse_rational(std::string_view text);

}  // namespace latdet
