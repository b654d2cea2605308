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
#include <span>
#include <vector>

#include "latdet/linalg.hpp"

namespace latdet {

/// Vectors d_1..d_k of a lattice together with their integral coordinates:
/// base * coeffs = dvecs, coeffs is n x k.
struct SublatticeSelection {
  Basis base;
  std::vector<IntVector> dvecs;
  IntMatrix coeffs;
};

/// Solves B V = D exactly. Rejects vectors outside the real span
/// (NotInSpan), non-integral coordinates (NotInLattice) and a dependent
/// family (Dependent).
SublatticeSelection solve_coordinates(const Basis& base, std::span<const IntVector> dvecs);

struct ColumnOp {
  enum class Kind { Swap, Negate, AddMultiple };
  Kind kind;
  std::size_t target;  // column changed (first column for Swap)
  std::size_t source;  // second column for Swap, added column for AddMultiple
  Integer factor;      // multiplier for AddMultiple
};

/// Apply one elementary column operation in place.
void apply(IntMatrix& m, const ColumnOp& op);

/// Staircase form of a coefficient matrix: column i of vbar has its last
/// nonzero entry at row pivots[i] (1-based) and pivots strictly increase.
struct StaircaseResult {
  IntMatrix vbar;
  std::vector<IntVector> dbar;  // filled only by the selection overload
  std::vector<std::size_t> pivots;
  IntMatrix colop_transform;  // vbar = V * colop_transform
  std::vector<ColumnOp> ops;  // the elementary operations, in order
};

/// Throws RankDeficient when V does not have full column rank.
StaircaseResult staircase_reduce(const IntMatrix& v);
/// Also carries the operations over to the lattice vectors: dbar = D * T.
StaircaseResult staircase_reduce(const SublatticeSelection& selection);

/// Squared determinant of the lattice spanned by the vectors; Dependent if
/// they are not independent.
Integer sublattice_det_squared(std::span<const IntVector> dvecs);

/// Smallest product of k of the q*_i, i.e. the minimum over increasing index
/// subsets of prod ||b*_{i_j}||^2.
Rational lemma1_bound(const GsoData& gso, std::size_t k);

}  // namespace latdet
