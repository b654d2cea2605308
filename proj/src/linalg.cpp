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

#include "latdet/linalg.hpp"

#include <string>
#include <utility>

namespace latdet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::Dependent: return "DEPENDENT";
    case ErrorCode::NotInLattice: return "NOT_IN_LATTICE";
    case ErrorCode::NotInSpan: return "NOT_IN_SPAN";
    case ErrorCode::RankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::IndexOrder: return "INDEX_ORDER";
    case ErrorCode::DeltaMismatch: return "DELTA_MISMATCH";
    case ErrorCode::NotReduced: return "NOT_REDUCED";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::RankRetryExhausted: return "RANK_RETRY_EXHAUSTED";
    case ErrorCode::ZeroVector: return "ZERO_VECTOR";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_)
      throw Error(ErrorCode::DimensionMismatch, "columns of unequal length");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw Error(ErrorCode::DimensionMismatch, "rows of unequal length");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Integer determinant(const IntMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign > 0 ? det : Integer(-det);
}

// ---------------------------------------------------------------------------
// Basis

Basis::Basis(std::vector<IntVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw Error(ErrorCode::EmptyInput, "basis needs at least one vector");
  dim_ = vectors_[0].size();
  if (dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "vectors must have dimension >= 1");
  for (const auto& v : vectors_)
    if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "basis vectors of unequal dimension");
  if (vectors_.size() > dim_)
    throw Error(ErrorCode::Dependent, "more vectors than the ambient dimension");
  if (det_squared(vectors_) == 0) throw Error(ErrorCode::Dependent, "basis vectors are linearly dependent");
}

std::span<const IntVector> Basis::prefix(std::size_t k) const {
  if (k == 0 || k > vectors_.size()) throw Error(ErrorCode::IndexOrder, "prefix length out of range");
  return std::span<const IntVector>(vectors_).first(k);
}

// ---------------------------------------------------------------------------
// Vector arithmetic

namespace {

template <typename T>
T dot(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "inner product of unequal dimensions");
  T acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

void check_same_dim(std::span<const IntVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::EmptyInput, "no vectors given");
  for (const auto& v : vectors)
    if (v.size() != vectors[0].size())
      throw Error(ErrorCode::DimensionMismatch, "vectors of unequal dimension");
}

// Orthogonalizes `span` in place order; returns {bstar, qstar} or throws.
void orthogonalize(std::span<const RatVector> span, std::vector<RatVector>& bstar, std::vector<Rational>& qstar) {
  for (const auto& s : span) {
    RatVector r = s;
    for (std::size_t j = 0; j < bstar.size(); ++j) {
      Rational coef = inner_product(std::span<const Rational>(s), bstar[j]) / qstar[j];
      if (coef == 0) continue;
      for (std::size_t c = 0; c < r.size(); ++c) r[c] -= coef * bstar[j][c];
    }
    Rational q = squared_norm(std::span<const Rational>(r));
    if (q == 0) throw Error(ErrorCode::Dependent, "spanning vectors are linearly dependent");
    bstar.push_back(std::move(r));
    qstar.push_back(std::move(q));
  }
}

}  // namespace

Integer inner_product(std::span<const Integer> u, std::span<const Integer> v) { return dot(u, v); }
Rational inner_product(std::span<const Rational> u, std::span<const Rational> v) { return dot(u, v); }
Integer squared_norm(std::span<const Integer> v) { return dot(v, v); }
Rational squared_norm(std::span<const Rational> v) { return dot(v, v); }

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntMatrix gram_matrix(std::span<const IntVector> vectors) {
  check_same_dim(vectors);
  const std::size_t k = vectors.size();
  IntMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      g(i, j) = inner_product(std::span<const Integer>(vectors[i]), vectors[j]);
      if (i != j) g(j, i) = g(i, j);
    }
  return g;
}

Integer det_squared(std::span<const IntVector> vectors) {
  return determinant(gram_matrix(vectors));
}

std::size_t rank(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  check_same_dim(vectors);
  IntMatrix a = IntMatrix::from_rows(vectors);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

GsoData gso(const Basis& basis) { return gso(basis.vectors()); }

GsoData gso(std::span<const IntVector> vectors) {
  check_same_dim(vectors);
  const std::size_t n = vectors.size();
  GsoData out;
  out.mu.assign(n, std::vector<Rational>(n));
  out.bstar.reserve(n);
  out.qstar.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector r = to_rational(vectors[i]);
    for (std::size_t j = 0; j < i; ++j) {
      Rational m = 0;
      for (std::size_t c = 0; c < r.size(); ++c) m += vectors[i][c] * out.bstar[j][c];
      m /= out.qstar[j];
      if (m != 0)
        for (std::size_t c = 0; c < r.size(); ++c) r[c] -= m * out.bstar[j][c];
      out.mu[i][j] = std::move(m);
    }
    out.mu[i][i] = 1;
    Rational q = squared_norm(std::span<const Rational>(r));
    if (q == 0) throw Error(ErrorCode::Dependent, "vectors are linearly dependent");
    out.bstar.push_back(std::move(r));
    out.qstar.push_back(std::move(q));
  }
  return out;
}

RatVector project_complement(std::span<const Rational> v, std::span<const RatVector> span) {
  for (const auto& s : span)
    if (s.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "span vector dimension differs");
  std::vector<RatVector> bstar;
  std::vector<Rational> qstar;
  orthogonalize(span, bstar, qstar);
  RatVector r(v.begin(), v.end());
  for (std::size_t j = 0; j < bstar.size(); ++j) {
    Rational coef = inner_product(v, std::span<const Rational>(bstar[j])) / qstar[j];
    if (coef == 0) continue;
    for (std::size_t c = 0; c < r.size(); ++c) r[c] -= coef * bstar[j][c];
  }
  return r;
}

RatVector project_complement(std::span<const Integer> v, std::span<const IntVector> span) {
  std::vector<RatVector> rspan;
  rspan.reserve(span.size());
  for (const auto& s : span) rspan.push_back(to_rational(s));
  RatVector rv = to_rational(v);
  return project_complement(std::span<const Rational>(rv), std::span<const RatVector>(rspan));
}

std::vector<IntVector> combine(std::span<const IntVector> vectors, const IntMatrix& coeffs) {
  if (coeffs.rows() != vectors.size())
    throw Error(ErrorCode::DimensionMismatch, "coefficient rows must match vector count");
  if (vectors.empty()) return {};
  const std::size_t m = vectors[0].size();
  std::vector<IntVector> out(coeffs.cols(), IntVector(m));
  for (std::size_t c = 0; c < coeffs.cols(); ++c)
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      const Integer& f = coeffs(r, c);
      if (f == 0) continue;
      for (std::size_t x = 0; x < m; ++x) out[c][x] += f * vectors[r][x];
    }
  return out;
}

}  // namespace latdet
