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

#include "latdet/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "latdet/lll.hpp"
#include "latdet/shadow.hpp"
#include "latdet/sublattice.hpp"

namespace latdet {

PoweredForm powered_form(InequalityId id, std::size_t n, std::size_t k, std::size_t j) {
  if (k < 1 || k > j || j > n) throw Error(ErrorCode::IndexOrder, "need 1 <= k <= j <= n");
  const unsigned long N = n, K = k, J = j;
  switch (id) {
    case InequalityId::T1_1: return {static_cast<unsigned>(4 * K), 2 * K * (N - K) + K * (K - 1)};
    case InequalityId::T1_2: return {2, K * (N - K)};
    case InequalityId::T1_3: return {static_cast<unsigned>(4 * N), N * K * (N - K)};
    case InequalityId::T1_4: return {4, 2 * K * (N - K) + K * (K - 1)};
    case InequalityId::T1_5: return {static_cast<unsigned>(4 * N), N * K * (N - 1)};
    case InequalityId::T2_6: return {static_cast<unsigned>(4 * J), 2 * J * K * (N - J) + J * K * (J - K)};
    case InequalityId::T2_7: return {static_cast<unsigned>(4 * J), 2 * J * K * (N - J) + J * K * (J - 1)};
    case InequalityId::LLL1: return {static_cast<unsigned>(4 * N), N * (N - 1)};
    case InequalityId::LLL2: return {2, N - 1};
    case InequalityId::LLL3: return {4, N * (N - 1)};
    case InequalityId::BIBD2: return {4, K * (N - 1)};
    case InequalityId::SUCC: return {2, 2 * (N - 1)};
    case InequalityId::LEMMA1: return {2, 0};
    case InequalityId::GSO_GROWTH: return {2, J - K};
    case InequalityId::BIBD: return {2, K - 1};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown inequality");
}

// ---------------------------------------------------------------------------

namespace {

PoweredComparison compare(InequalityId id, std::size_t n, std::size_t k, std::size_t j,
                          Rational lhs_p, const Rational& rhs_base_p) {
  const PoweredForm f = powered_form(id, n, k, j);
  return make_comparison(id, n, k, j, f.power, std::move(lhs_p), Rational(pow2(f.exponent)) * rhs_base_p);
}

void require_standard_delta(const Rational& delta) {
  if (delta != ReductionParams::standard_delta())
    throw Error(ErrorCode::DeltaMismatch, "bounds assume delta = 3/4, got " + delta.get_str());
}

}  // namespace

ReducedBasisBounds::ReducedBasisBounds(Basis reduced, const Rational& delta)
    : basis_(std::move(reduced)) {
  require_standard_delta(delta);
  if (!is_lll_reduced(basis_, ReductionParams(delta)).empty())
    throw Error(ErrorCode::NotReduced, "basis is not LLL-reduced at delta = 3/4");
  gso_ = latdet::gso(basis_);
  Rational s = 1;
  Integer p = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    s *= gso_.qstar[i];
    p *= squared_norm(std::span<const Integer>(basis_[i]));
    prefix_det_sq_.push_back(s);
    prefix_norm_prod_.push_back(p);
  }
}

const Rational& ReducedBasisBounds::prefix_det_squared(std::size_t k) const {
  if (k < 1 || k > n()) throw Error(ErrorCode::IndexOrder, "prefix length out of range");
  return prefix_det_sq_[k - 1];
}

const Integer& ReducedBasisBounds::prefix_norm_product(std::size_t k) const {
  if (k < 1 || k > n()) throw Error(ErrorCode::IndexOrder, "prefix length out of range");
  return prefix_norm_prod_[k - 1];
}

std::vector<PoweredComparison> ReducedBasisBounds::theorem1(const Integer& t, std::size_t k) const {
  const std::size_t N = n();
  if (k < 1 || k > N) throw Error(ErrorCode::IndexOrder, "need 1 <= k <= n");
  const Rational q1 = squared_norm(std::span<const Integer>(basis_[0]));
  const Rational& sk = prefix_det_squared(k);
  const Rational& sn = prefix_det_squared(N);
  const Rational pk = prefix_norm_product(k);
  const Rational t2 = pow(Rational(t), 2);
  const Rational sn_2k = pow(sn, 2 * k);
  return {
      compare(InequalityId::T1_1, N, k, k, pow(q1, 2 * k), t2),
      compare(InequalityId::T1_2, N, k, k, sk, Rational(t)),
      compare(InequalityId::T1_3, N, k, k, pow(sk, 2 * N), sn_2k),
      compare(InequalityId::T1_4, N, k, k, pow(pk, 2), t2),
      compare(InequalityId::T1_5, N, k, k, pow(pk, 2 * N), sn_2k),
  };
}

std::vector<PoweredComparison> ReducedBasisBounds::theorem2(const Integer& t_j, std::size_t k,
                                                            std::size_t j) const {
  const std::size_t N = n();
  if (k < 1 || k > j || j > N) throw Error(ErrorCode::IndexOrder, "need 1 <= k <= j <= n");
  const Rational t_2k = pow(Rational(t_j), 2 * k);
  return {
      compare(InequalityId::T2_6, N, k, j, pow(prefix_det_squared(k), 2 * j), t_2k),
      compare(InequalityId::T2_7, N, k, j, pow(Rational(prefix_norm_product(k)), 2 * j), t_2k),
  };
}

std::vector<PoweredComparison> ReducedBasisBounds::classic(const Integer& d_norm_sq) const {
  const std::size_t N = n();
  const Rational q1 = squared_norm(std::span<const Integer>(basis_[0]));
  const Rational sn2 = pow(prefix_det_squared(N), 2);
  return {
      compare(InequalityId::LLL1, N, N, N, pow(q1, 2 * N), sn2),
      compare(InequalityId::LLL2, N, 1, 1, q1, Rational(d_norm_sq)),
      compare(InequalityId::LLL3, N, N, N, pow(Rational(prefix_norm_product(N)), 2), sn2),
  };
}

PoweredComparison ReducedBasisBounds::bibd2(std::size_t k) const {
  return compare(InequalityId::BIBD2, n(), k, k, pow(Rational(prefix_norm_product(k)), 2),
                 pow(prefix_det_squared(k), 2));
}

std::vector<PoweredComparison> ReducedBasisBounds::successive(std::span<const Integer> lambda_sq) const {
  const std::size_t N = n();
  if (lambda_sq.size() != N) throw Error(ErrorCode::DimensionMismatch, "need one minimum per basis vector");
  std::vector<PoweredComparison> out;
  for (std::size_t i = 0; i < N; ++i)
    out.push_back(compare(InequalityId::SUCC, N, i + 1, i + 1,
                          Rational(squared_norm(std::span<const Integer>(basis_[i]))), Rational(lambda_sq[i])));
  return out;
}

// ---------------------------------------------------------------------------

bool BoundReport::all_hold() const noexcept {
  for (const auto& c : comparisons)
    if (!c.holds) return false;
  return true;
}

std::uint64_t basis_hash(const Basis& basis) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](std::string_view s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  for (const auto& v : basis.vectors()) {
    for (const auto& x : v) {
      feed(x.get_str());
      feed(",");
    }
    feed(";");
  }
  return h;
}

namespace {

BoundReport make_report(const ReducedBasisBounds& ctx, std::string label) {
  BoundReport r;
  r.label = std::move(label);
  r.basis_hash = basis_hash(ctx.basis());
  return r;
}

}  // namespace

BoundReport check_theorem1(const ReducedBasisBounds& ctx, std::span<const IntVector> dvecs) {
  solve_coordinates(ctx.basis(), dvecs);
  BoundReport r = make_report(ctx, "theorem1");
  r.comparisons = ctx.theorem1(sublattice_det_squared(dvecs), dvecs.size());
  return r;
}

BoundReport check_theorem1(const Basis& reduced, std::span<const IntVector> dvecs, const Rational& delta) {
  return check_theorem1(ReducedBasisBounds(reduced, delta), dvecs);
}

BoundReport check_theorem2(const ReducedBasisBounds& ctx, std::span<const IntVector> dvecs, std::size_t k) {
  if (k < 1 || k > dvecs.size()) throw Error(ErrorCode::IndexOrder, "need 1 <= k <= j");
  solve_coordinates(ctx.basis(), dvecs);
  BoundReport r = make_report(ctx, "theorem2");
  r.comparisons = ctx.theorem2(sublattice_det_squared(dvecs), k, dvecs.size());
  return r;
}

BoundReport check_theorem2(const Basis& reduced, std::span<const IntVector> dvecs, std::size_t k,
                           const Rational& delta) {
  return check_theorem2(ReducedBasisBounds(reduced, delta), dvecs, k);
}

BoundReport check_classic(const ReducedBasisBounds& ctx, std::span<const Integer> d) {
  const Integer dn = squared_norm(d);
  if (dn == 0) throw Error(ErrorCode::ZeroVector, "d must be nonzero");
  const IntVector dv(d.begin(), d.end());
  solve_coordinates(ctx.basis(), std::span<const IntVector>(&dv, 1));
  BoundReport r = make_report(ctx, "classic");
  r.comparisons = ctx.classic(dn);
  return r;
}

BoundReport check_classic(const Basis& reduced, std::span<const Integer> d, const Rational& delta) {
  return check_classic(ReducedBasisBounds(reduced, delta), d);
}

PoweredComparison check_bibd2(const Basis& reduced, std::size_t k, const Rational& delta) {
  return ReducedBasisBounds(reduced, delta).bibd2(k);
}

BoundReport check_successive(const Basis& reduced, const MinimaResult& minima, const Rational& delta) {
  ReducedBasisBounds ctx(reduced, delta);
  BoundReport r = make_report(ctx, "successive");
  r.comparisons = ctx.successive(minima.lambda_sq);
  return r;
}

PoweredComparison check_lemma1(const Basis& basis, std::span<const IntVector> dvecs) {
  solve_coordinates(basis, dvecs);
  const std::size_t k = dvecs.size();
  return compare(InequalityId::LEMMA1, basis.size(), k, k, lemma1_bound(gso(basis), k),
                 Rational(sublattice_det_squared(dvecs)));
}

double angle_identity_residual(const Basis& basis, std::size_t k) {
  const auto prefix = basis.prefix(k);
  const double det_k = std::sqrt(to_double(Rational(det_squared(prefix))));
  if (det_k == 0) throw Error(ErrorCode::Dependent, "prefix vectors are dependent");
  const std::vector<double> qstar = gso_qstar_double(prefix);
  double product = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const double norm = std::sqrt(to_double(Rational(squared_norm(std::span<const Integer>(prefix[i])))));
    product *= norm;
    if (i > 0) product *= std::sqrt(qstar[i]) / norm;  // sin of the angle to span(b_1..b_{i-1})
  }
  return std::fabs(det_k - product) / det_k;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const PoweredComparison& c) {
  return nlohmann::json{
      {"inequality", std::string(to_string(c.id))},
      {"n", c.n},
      {"k", c.k},
      {"j", c.j},
      {"power", c.power},
      {"holds", c.holds},
      {"slack", c.slack},
      {"lhs_p", c.lhs_p.get_str()},
      {"rhs_p", c.rhs_p.get_str()},
  };
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json comparisons = nlohmann::json::array();
  for (const auto& c : report.comparisons) comparisons.push_back(to_json(c));
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(report.basis_hash));
  return nlohmann::json{
      {"label", report.label},
      {"seed", report.seed},
      {"basis_hash", hash},
      {"delta", report.delta.get_str()},
      {"all_hold", report.all_hold()},
      {"comparisons", std::move(comparisons)},
  };
}

}  // namespace latdet
