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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "latdet/comparison.hpp"
#include "latdet/linalg.hpp"
#include "latdet/oracle.hpp"

namespace latdet {

/// Integer power p and base-2 exponent e of the powered restatement
/// X^p <= 2^e * Y^p of an inequality.
struct PoweredForm {
  unsigned power;
  unsigned long exponent;
  bool operator==(const PoweredForm&) const = default;
};

/// Requires 1 <= k <= j <= n (IndexOrder otherwise). Inequalities that have
/// no j take j = k; for GSO_GROWTH (k, j) play the role of (i, j) and for
/// BIBD k is the index i.
PoweredForm powered_form(InequalityId id, std::size_t n, std::size_t k, std::size_t j);
inline PoweredForm powered_form(InequalityId id, std::size_t n, std::size_t k) {
  return powered_form(id, n, k, k);
}

/// Basis-side quantities of a reduced basis, computed once and shared by all
/// checks against it. Construction fails with DeltaMismatch unless delta is
/// 3/4, and with NotReduced if the basis is not LLL-reduced at 3/4.
class ReducedBasisBounds {
 public:
  explicit ReducedBasisBounds(Basis reduced, const Rational& delta = Rational(3, 4));

  const Basis& basis() const noexcept { return basis_; }
  const GsoData& gso() const noexcept { return gso_; }
  std::size_t n() const noexcept { return basis_.size(); }

  /// S_k = (det L(b_1..b_k))^2 = prod_{i<=k} q*_i.
  const Rational& prefix_det_squared(std::size_t k) const;
  /// P_k = prod_{i<=k} ||b_i||^2.
  const Integer& prefix_norm_product(std::size_t k) const;

  // The remaining members take the squared sublattice determinant T of the
  // d-vectors rather than the vectors, so callers that already know T
  // (e.g. exhaustive sweeps) skip the membership solve.

  /// T1_1..T1_5 for k vectors with squared determinant t.
  std::vector<PoweredComparison> theorem1(const Integer& t, std::size_t k) const;
  /// T2_6, T2_7 for j vectors with squared determinant t_j.
  std::vector<PoweredComparison> theorem2(const Integer& t_j, std::size_t k, std::size_t j) const;
  /// LLL1..LLL3 with d of squared norm d_norm_sq.
  std::vector<PoweredComparison> classic(const Integer& d_norm_sq) const;
  PoweredComparison bibd2(std::size_t k) const;
  std::vector<PoweredComparison> successive(std::span<const Integer> lambda_sq) const;

 private:
  Basis basis_;
  GsoData gso_;
  std::vector<Rational> prefix_det_sq_;
  std::vector<Integer> prefix_norm_prod_;
};

struct BoundReport {
  std::string label;
  std::uint64_t seed = 0;
  std::uint64_t basis_hash = 0;
  Rational delta{3, 4};
  std::vector<PoweredComparison> comparisons;

  bool all_hold() const noexcept;
};

/// FNV-1a over the decimal coordinates; stable across platforms.
std::uint64_t basis_hash(const Basis& basis);

/// T1_1..T1_5 for k = dvecs.size(); vectors must be independent lattice vectors.
BoundReport check_theorem1(const ReducedBasisBounds& ctx, std::span<const IntVector> dvecs);
BoundReport check_theorem1(const Basis& reduced, std::span<const IntVector> dvecs,
                           const Rational& delta = Rational(3, 4));

/// j = dvecs.size(); IndexOrder unless 1 <= k <= j.
BoundReport check_theorem2(const ReducedBasisBounds& ctx, std::span<const IntVector> dvecs, std::size_t k);
BoundReport check_theorem2(const Basis& reduced, std::span<const IntVector> dvecs, std::size_t k,
                           const Rational& delta = Rational(3, 4));

/// LLL1..LLL3; d must be a nonzero lattice vector.
BoundReport check_classic(const ReducedBasisBounds& ctx, std::span<const Integer> d);
BoundReport check_classic(const Basis& reduced, std::span<const Integer> d,
                          const Rational& delta = Rational(3, 4));

PoweredComparison check_bibd2(const Basis& reduced, std::size_t k, const Rational& delta = Rational(3, 4));

BoundReport check_successive(const Basis& reduced, const MinimaResult& minima,
                             const Rational& delta = Rational(3, 4));

/// lemma1_bound(gso(basis), k) <= T for any basis, reduced or not.
PoweredComparison check_lemma1(const Basis& basis, std::span<const IntVector> dvecs);

/// Relative float discrepancy between det L(b_1..b_k) and
/// prod ||b_i|| * prod sin(theta_i), with sin(theta_i) = ||b*_i|| / ||b_i||.
double angle_identity_residual(const Basis& basis, std::size_t k);

nlohmann::json to_json(const PoweredComparison& c);
nlohmann::json to_json(const BoundReport& report);

}  // namespace latdet
