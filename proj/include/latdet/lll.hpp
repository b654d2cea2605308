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

#include <cstdint>
#include <vector>

#include "latdet/comparison.hpp"
#include "latdet/linalg.hpp"

namespace latdet {

/// Lovász constant. Only 3/4 is accepted by the bound checks.
class ReductionParams {
 public:
  ReductionParams() = default;
  explicit ReductionParams(Rational delta);

  const Rational& delta() const noexcept { return delta_; }

  static Rational standard_delta() { return Rational(3, 4); }

 private:
  Rational delta_{3, 4};
};

struct ReductionStats {
  std::uint64_t swaps = 0;
  std::uint64_t size_reductions = 0;
};

struct ReductionResult {
  Basis reduced;
  IntMatrix transform;  // columns: coordinates of the output vectors in the input basis
  ReductionStats stats;
};

/// Classic LLL exchange algorithm in exact arithmetic.
ReductionResult lll_reduce(const Basis& basis, const ReductionParams& params = {});

enum class ViolationKind { SizeReduction, Lovasz };

/// One failed LLL condition. Indices are 1-based: for SizeReduction,
/// |mu_{j,i}| exceeds 1/2 by `excess`; for Lovasz (i = j - 1), the
/// right-hand side delta*q*_{j-1} exceeds the left by `excess`.
struct Violation {
  ViolationKind kind;
  std::size_t i;
  std::size_t j;
  Rational excess;
};

std::vector<Violation> is_lll_reduced(const Basis& basis, const ReductionParams& params = {});

/// q*_i <= 2^(j-i) q*_j for every 1 <= i <= j <= n, one GSO_GROWTH entry per
/// pair (k field holds i). Reports regardless of whether the basis is reduced.
std::vector<PoweredComparison> gso_growth_ok(const GsoData& gso);

/// ||b_i||^2 <= 2^(i-1) q*_i for every i, one BIBD entry per index.
std::vector<PoweredComparison> bibd_ok(const Basis& basis, const GsoData& gso);

/// Rounds to the nearest integer, ties toward zero.
Integer round_half_toward_zero(const Rational& q);

}  // namespace latdet
