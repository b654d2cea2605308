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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "latdet/linalg.hpp"

namespace latdet {

/// Limits for the brute-force routines. A zero radius_sq selects each
/// routine's default radius.
struct EnumBudget {
  std::size_t max_dim = 6;
  std::uint64_t max_vectors = 1'000'000;
  Rational radius_sq = 0;
};

/// All nonzero v in L with ||v||^2 <= radius_sq, one of each +-pair (the one
/// whose first nonzero coordinate is positive), sorted by squared norm and
/// then lexicographically.
std::vector<IntVector> enumerate_short_vectors(const Basis& basis, const Rational& radius_sq,
                                               const EnumBudget& budget = {});

struct MinimaResult {
  std::vector<Integer> lambda_sq;  // nondecreasing
  std::vector<IntVector> witnesses;
};

/// First k successive minima (squared) with independent witnesses.
MinimaResult successive_minima(const Basis& basis, std::size_t k, const EnumBudget& budget = {});

/// Smallest squared determinant over independent k-subsets of the short
/// vectors within the radius (default lambda_k^2). An upper bound on the
/// lattice-wide minimum.
Integer min_subdet_bruteforce(const Basis& basis, std::size_t k, const EnumBudget& budget = {});

using DSetSink = std::function<void(const IntMatrix& coeffs, std::span<const IntVector> dvecs)>;

/// Every full-column-rank n x k coefficient matrix V with entries in
/// [-coeff_bound, coeff_bound], once per column set (columns in increasing
/// lexicographic order), together with D = B V. Returns the number emitted.
/// Throws BudgetExceeded once more than max_sets column sets are visited.
std::uint64_t enumerate_d_sets(const Basis& basis, std::size_t k, std::int64_t coeff_bound,
                               const DSetSink& sink, std::uint64_t max_sets = 100'000'000);

}  // namespace latdet
