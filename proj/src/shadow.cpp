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

#include "latdet/shadow.hpp"

#include <cmath>
#include <utility>

namespace latdet {

namespace {

std::vector<std::vector<double>> to_double_rows(std::span<const IntVector> vectors) {
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<double> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.get_d());
    rows.push_back(std::move(r));
  }
  return rows;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double log2_of_mpz(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

}  // namespace

std::vector<double> gso_qstar_double(std::span<const IntVector> vectors) {
  auto rows = to_double_rows(vectors);
  std::vector<std::vector<double>> bstar;
  std::vector<double> q;
  for (auto& r : rows) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < bstar.size(); ++j) {
        double c = dot(r, bstar[j]) / q[j];
        for (std::size_t x = 0; x < r.size(); ++x) r[x] -= c * bstar[j][x];
      }
    q.push_back(dot(r, r));
    bstar.push_back(r);
  }
  return q;
}

double det_squared_double(std::span<const IntVector> vectors) {
  auto rows = to_double_rows(vectors);
  const std::size_t k = rows.size();
  std::vector<std::vector<double>> g(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(rows[i], rows[j]);
  double det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::fabs(g[r][c]) > std::fabs(g[p][c])) p = r;
    if (g[p][c] == 0) return 0;
    if (p != c) {
      std::swap(g[p], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      double f = g[r][c] / g[c][c];
      for (std::size_t x = c; x < k; ++x) g[r][x] -= f * g[c][x];
    }
  }
  return det;
}

double to_double(const Rational& q) {
  if (q == 0) return 0;
  double l = log2_of(abs(q));
  if (l > 1000 || l < -1000) return sgn(q) * std::exp2(l);
  return q.get_d();
}

double log2_of(const Rational& q) {
  if (q <= 0) return -INFINITY;
  return log2_of_mpz(q.get_num()) - log2_of_mpz(q.get_den());
}

}  // namespace latdet
