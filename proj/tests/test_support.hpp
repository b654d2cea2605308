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

// Helpers and independent brute-force oracles shared by the test binaries.
// Nothing here calls into the routines it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <vector>

#include "latdet/linalg.hpp"

namespace latdet::testing {

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<IntVector> rows(std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<IntVector> out;
  for (auto r : rs) out.push_back(iv(r));
  return out;
}

inline Basis basis(std::initializer_list<std::initializer_list<long>> rs) { return Basis(rows(rs)); }

inline IntMatrix matrix(std::initializer_list<std::initializer_list<long>> rs) {
  auto r = rows(rs);
  return IntMatrix::from_rows(r);
}

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(V^T V) with the Gram entries formed directly and expanded by Leibniz.
inline Rational leibniz_det_squared(const std::vector<IntVector>& vs) {
  const std::size_t k = vs.size();
  std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t c = 0; c < vs[i].size(); ++c) s += vs[i][c] * vs[j][c];
      g[i][j] = s;
    }
  return leibniz_det(g);
}

/// Minimum over all increasing index subsets of size k of the product.
inline Rational subset_min_product(const std::vector<Rational>& q, std::size_t k) {
  const std::size_t n = q.size();
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Rational p = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) p *= q[i];
    if (!best || p < *best) best = p;
  }
  return *best;
}

/// Every lattice vector with coefficients in [-c, c]^n, zero excluded.
inline std::vector<IntVector> box_vectors(const std::vector<IntVector>& b, long c) {
  const std::size_t n = b.size(), m = b[0].size();
  std::vector<long> x(n, -c);
  std::vector<IntVector> out;
  for (;;) {
    IntVector v(m);
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] != 0) zero = false;
      for (std::size_t d = 0; d < m; ++d) v[d] += x[i] * b[i][d];
    }
    if (!zero) out.push_back(v);
    std::size_t p = n;
    while (p > 0 && x[p - 1] == c) x[--p] = -c;
    if (p == 0) break;
    ++x[p - 1];
  }
  return out;
}

/// Coefficient radius that provably covers ||v||^2 <= r: |x_i| <= sqrt(r (G^-1)_ii).
inline long coefficient_box(const std::vector<IntVector>& b, double r) {
  const std::size_t n = b.size();
  std::vector<std::vector<double>> g(n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t c = 0; c < b[i].size(); ++c) s += b[i][c].get_d() * b[j][c].get_d();
      g[i][j] = s;
    }
    g[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r2 = c + 1; r2 < n; ++r2)
      if (std::fabs(g[r2][c]) > std::fabs(g[p][c])) p = r2;
    std::swap(g[p], g[c]);
    const double piv = g[c][c];
    for (auto& x : g[c]) x /= piv;
    for (std::size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == c) continue;
      const double f = g[r2][c];
      for (std::size_t x = 0; x < 2 * n; ++x) g[r2][x] -= f * g[c][x];
    }
  }
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, g[i][n + i]);
  return static_cast<long>(std::ceil(std::sqrt(r * worst))) + 1;
}

inline Integer norm_sq(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

inline IntVector canonical_sign(IntVector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
  if (lead != v.end() && *lead < 0)
    for (auto& x : v) x = -x;
  return v;
}

}  // namespace latdet::testing
