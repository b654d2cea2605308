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

#include "latdet/sublattice.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "latdet/lll.hpp"

namespace latdet {

namespace {

// Solves the square system a x = rhs (a invertible) by Gauss-Jordan over Q.
std::vector<RatVector> solve_square(std::vector<RatVector> a, std::vector<RatVector> rhs) {
  const std::size_t n = a.size();
  const std::size_t k = rhs.empty() ? 0 : rhs[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::Dependent, "singular Gram matrix");
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t x = c; x < n; ++x) a[c][x] *= inv;
    for (std::size_t x = 0; x < k; ++x) rhs[c][x] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t x = c; x < n; ++x) a[r][x] -= f * a[c][x];
      for (std::size_t x = 0; x < k; ++x) rhs[r][x] -= f * rhs[c][x];
    }
  }
  return rhs;
}

std::optional<std::size_t> last_nonzero_row(const IntMatrix& m, std::size_t c) {
  for (std::size_t r = m.rows(); r-- > 0;)
    if (m(r, c) != 0) return r;
  return std::nullopt;
}

}  // namespace

SublatticeSelection solve_coordinates(const Basis& base, std::span<const IntVector> dvecs) {
  if (dvecs.empty()) throw Error(ErrorCode::EmptyInput, "no sublattice vectors given");
  const std::size_t n = base.size();
  const std::size_t m = base.dim();
  const std::size_t k = dvecs.size();
  for (const auto& d : dvecs)
    if (d.size() != m) throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from the basis");

  // Normal equations G x = B^T d; G is invertible because B has full rank.
  const IntMatrix g = gram_matrix(base.vectors());
  std::vector<RatVector> a(n, RatVector(n));
  std::vector<RatVector> rhs(n, RatVector(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g(i, j);
    for (std::size_t c = 0; c < k; ++c) rhs[i][c] = inner_product(std::span<const Integer>(base[i]), dvecs[c]);
  }
  const std::vector<RatVector> x = solve_square(std::move(a), std::move(rhs));

  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < m; ++r) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += x[i][c] * base[i][r];
      if (s != dvecs[c][r]) throw Error(ErrorCode::NotInSpan, "vector is outside the span of the basis");
    }

  IntMatrix v(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      if (x[i][c].get_den() != 1) throw Error(ErrorCode::NotInLattice, "non-integral coordinate");
      v(i, c) = x[i][c].get_num();
    }

  if (rank(dvecs) < k) throw Error(ErrorCode::Dependent, "sublattice vectors are linearly dependent");
  return SublatticeSelection{base, std::vector<IntVector>(dvecs.begin(), dvecs.end()), std::move(v)};
}

void apply(IntMatrix& m, const ColumnOp& op) {
  switch (op.kind) {
    case ColumnOp::Kind::Swap: m.swap_columns(op.target, op.source); break;
    case ColumnOp::Kind::Negate: m.negate_column(op.target); break;
    case ColumnOp::Kind::AddMultiple: m.add_column_multiple(op.target, op.source, op.factor); break;
  }
}

StaircaseResult staircase_reduce(const IntMatrix& v) {
  const std::size_t k = v.cols();
  if (k == 0 || v.rows() == 0) throw Error(ErrorCode::EmptyInput, "empty coefficient matrix");
  if (k > v.rows()) throw Error(ErrorCode::RankDeficient, "more columns than rows");

  StaircaseResult out{v, {}, std::vector<std::size_t>(k), IntMatrix::identity(k), {}};
  auto record = [&](ColumnOp op) {
    apply(out.vbar, op);
    apply(out.colop_transform, op);
    out.ops.push_back(std::move(op));
  };

  // Euclidean elimination on columns that share their last nonzero row.
  for (;;) {
    for (std::size_t c = 0; c < k; ++c) {
      auto t = last_nonzero_row(out.vbar, c);
      if (!t) throw Error(ErrorCode::RankDeficient, "coefficient matrix lacks full column rank");
      out.pivots[c] = *t;
    }
    std::optional<std::pair<std::size_t, std::size_t>> clash;
    for (std::size_t a = 0; a < k && !clash; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (out.pivots[a] == out.pivots[b]) {
          clash = {a, b};
          break;
        }
    if (!clash) break;

    const std::size_t t = out.pivots[clash->first];
    std::size_t small = clash->first, large = clash->second;
    while (out.vbar(t, small) != 0 && out.vbar(t, large) != 0) {
      if (abs(out.vbar(t, small)) > abs(out.vbar(t, large))) std::swap(small, large);
      const Integer q = round_half_toward_zero(Rational(out.vbar(t, large), out.vbar(t, small)));
      record({ColumnOp::Kind::AddMultiple, large, small, Integer(-q)});
    }
  }

  // Order columns by pivot row.
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t best = i;
    for (std::size_t c = i + 1; c < k; ++c)
      if (out.pivots[c] < out.pivots[best]) best = c;
    if (best != i) {
      record({ColumnOp::Kind::Swap, i, best, 0});
      std::swap(out.pivots[i], out.pivots[best]);
    }
  }
  for (auto& p : out.pivots) ++p;
  return out;
}

StaircaseResult staircase_reduce(const SublatticeSelection& selection) {
  StaircaseResult out = staircase_reduce(selection.coeffs);
  out.dbar = combine(selection.dvecs, out.colop_transform);
  return out;
}

Integer sublattice_det_squared(std::span<const IntVector> dvecs) {
  Integer t = det_squared(dvecs);
  if (t == 0) throw Error(ErrorCode::Dependent, "sublattice vectors are linearly dependent");
  return t;
}

Rational lemma1_bound(const GsoData& gso, std::size_t k) {
  if (k == 0 || k > gso.qstar.size()) throw Error(ErrorCode::InvalidArgument, "k out of range");
  std::vector<Rational> q = gso.qstar;
  std::partial_sort(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k), q.end());
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= q[i];
  return out;
}

}  // namespace latdet
