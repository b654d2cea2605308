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

#include <span>
#include <vector>

#include "latdet/linalg.hpp"

namespace latdet {

// Double-precision mirrors of the exact routines. They carry no authority;
// they exist so the exact results can be compared against a float route.

/// Squared Gram-Schmidt norms computed with modified Gram-Schmidt plus one
/// re-orthogonalization pass.
std::vector<double> gso_qstar_double(std::span<const IntVector> vectors);

/// det(V^T V) by partial-pivot Gaussian elimination on the float Gram matrix.
double det_squared_double(std::span<const IntVector> vectors);

/// Double approximation of an exact rational, exponent-safe for large operands.
double to_double(const Rational& q);

/// log2 of a positive rational, safe for values far outside double range.
double log2_of(const Rational& q);

}  // namespace latdet
