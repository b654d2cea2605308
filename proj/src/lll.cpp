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

#include "latdet/lll.hpp"

#include <cassert>
#include <utility>

namespace latdet {

ReductionParams::ReductionParams(Rational delta) : delta_(std::move(delta)) {
  if (delta_ <= Rational(1, 4) || delta_ > 1)
    throw Error(ErrorCode::InvalidArgument, "delta must lie in (1/4, 1]");
}

Integer round_half_toward_zero(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational frac = q - f;
  const Rational half(1, 2);
  if (frac > half) return f + 1;
  if (frac < half) return f;
  return q > 0 ? f : Integer(f + 1);
}

namespace {

class Reducer {
 public:
  Reducer(const Basis& basis, const ReductionParams& params)
      : b_(basis.vectors().begin(), basis.vectors().end()),
        u_(IntMatrix::identity(basis.size())),
        delta_(params.delta()) {
    GsoData g = gso(basis);
    mu_ = std::move(g.mu);
    q_ = std::move(g.qstar);
  }

  ReductionResult run() {
    const std::size_t n = b_.size();
    std::size_t k = 1;
    while (k < n) {
      for (std::size_t i = k; i-- > 0;) size_reduce(k, i);
      const Rational& m = mu_[k][k - 1];
      if (q_[k] + m * m * q_[k - 1] >= delta_ * q_[k - 1]) {
        ++k;
      } else {
        swap(k);
        k = k > 1 ? k - 1 : 1;
      }
    }
    return ReductionResult{Basis(std::move(b_)), std::move(u_), stats_};
  }

 private:
  void size_reduce(std::size_t k, std::size_t i) {
    if (abs(mu_[k][i]) <= Rational(1, 2)) return;
    const Integer r = round_half_toward_zero(mu_[k][i]);
    for (std::size_t x = 0; x < b_[k].size(); ++x) b_[k][x] -= r * b_[i][x];
    u_.add_column_multiple(k, i, -r);
    for (std::size_t l = 0; l < i; ++l) mu_[k][l] -= r * mu_[i][l];
    mu_[k][i] -= r;
    ++stats_.size_reductions;
  }

  // Exchange b_{k-1} and b_k with the standard mu / q* update.
  void swap(std::size_t k) {
    const std::size_t n = b_.size();
    const Rational m = mu_[k][k - 1];
    const Rational bq = q_[k] + m * m * q_[k - 1];
    mu_[k][k - 1] = m * q_[k - 1] / bq;
    q_[k] = q_[k - 1] * q_[k] / bq;
    q_[k - 1] = bq;
    std::swap(b_[k], b_[k - 1]);
    u_.swap_columns(k, k - 1);
    for (std::size_t l = 0; l + 1 < k; ++l) std::swap(mu_[k][l], mu_[k - 1][l]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational t = mu_[i][k];
      mu_[i][k] = mu_[i][k - 1] - m * t;
      mu_[i][k - 1] = t + mu_[k][k - 1] * mu_[i][k];
    }
    ++stats_.swaps;
#ifndef NDEBUG
    const GsoData full = gso(std::span<const IntVector>(b_));
    for (std::size_t i = 0; i < n; ++i) {
      assert(full.qstar[i] == q_[i]);
      for (std::size_t j = 0; j < i; ++j) assert(full.mu[i][j] == mu_[i][j]);
    }
#endif
  }

  std::vector<IntVector> b_;
  IntMatrix u_;
  Rational delta_;
  std::vector<std::vector<Rational>> mu_;
  std::vector<Rational> q_;
  ReductionStats stats_;
};

}  // namespace

ReductionResult lll_reduce(const Basis& basis, const ReductionParams& params) {
  return Reducer(basis, params).run();
}

std::vector<Violation> is_lll_reduced(const Basis& basis, const ReductionParams& params) {
  const GsoData g = gso(basis);
  const std::size_t n = basis.size();
  const Rational half(1, 2);
  std::vector<Violation> out;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Rational a = abs(g.mu[j][i]);
      if (a > half) out.push_back({ViolationKind::SizeReduction, i + 1, j + 1, a - half});
    }
    const Rational& m = g.mu[j][j - 1];
    Rational lhs = g.qstar[j] + m * m * g.qstar[j - 1];
    Rational rhs = params.delta() * g.qstar[j - 1];
    if (lhs < rhs) out.push_back({ViolationKind::Lovasz, j, j + 1, rhs - lhs});
  }
  return out;
}

std::vector<PoweredComparison> gso_growth_ok(const GsoData& gso) {
  const std::size_t n = gso.qstar.size();
  std::vector<PoweredComparison> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      out.push_back(make_comparison(InequalityId::GSO_GROWTH, n, i + 1, j + 1, 2, gso.qstar[i],
                                    Rational(pow2(j - i)) * gso.qstar[j]));
  return out;
}

std::vector<PoweredComparison> bibd_ok(const Basis& basis, const GsoData& gso) {
  const std::size_t n = basis.size();
  std::vector<PoweredComparison> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(make_comparison(InequalityId::BIBD, n, i + 1, i + 1, 2,
                                  Rational(squared_norm(std::span<const Integer>(basis[i]))),
                                  Rational(pow2(i)) * gso.qstar[i]));
  return out;
}

}  // namespace latdet
