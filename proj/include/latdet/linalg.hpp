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

#include <gmpxx.h>

#include "latdet/error.hpp"

namespace latdet {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major integer matrix. Used for coefficient matrices (B·V = D)
/// and unimodular transforms, so the column operations are first class.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::span<const IntVector> columns);
  static IntMatrix from_rows(std::span<const IntVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  void swap_columns(std::size_t a, std::size_t b);
  void negate_column(std::size_t c);
  // column dst += factor * column src
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by Bareiss fraction-free elimination (row pivoting on
/// zero pivots). Throws DimensionMismatch for non-square input.
Integer determinant(const IntMatrix& a);

/// Ordered list of linearly independent integer vectors b_1..b_n in Z^m.
/// The constructor enforces n >= 1, equal dimensions, n <= m and
/// independence (nonzero Gram determinant).
class Basis {
 public:
  explicit Basis(std::vector<IntVector> vectors);

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const IntVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const IntVector> vectors() const noexcept { return vectors_; }

  /// Leading vectors b_1..b_k.
  std::span<const IntVector> prefix(std::size_t k) const;

  bool operator==(const Basis& rhs) const { return vectors_ == rhs.vectors_; }

 private:
  std::vector<IntVector> vectors_;
  std::size_t dim_ = 0;
};

/// Exact Gram-Schmidt data. mu is n x n lower triangular with unit diagonal,
/// so b_i = sum_{j<=i} mu[i][j] * bstar[j].
struct GsoData {
  std::vector<RatVector> bstar;
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> qstar;  // squared norms of bstar
};

Integer inner_product(std::span<const Integer> u, std::span<const Integer> v);
Rational inner_product(std::span<const Rational> u, std::span<const Rational> v);
Integer squared_norm(std::span<const Integer> v);
Rational squared_norm(std::span<const Rational> v);

RatVector to_rational(std::span<const Integer> v);

/// Gram matrix G_ij = <v_i, v_j>.
IntMatrix gram_matrix(std::span<const IntVector> vectors);

/// det(V^T V) for the listed vectors, i.e. the squared determinant of the
/// lattice they generate; zero iff dependent.
Integer det_squared(std::span<const IntVector> vectors);

/// Exact rank of the listed vectors.
std::size_t rank(std::span<const IntVector> vectors);

GsoData gso(const Basis& basis);
/// Same as above for a raw list; throws Dependent if some qstar vanishes.
GsoData gso(std::span<const IntVector> vectors);

/// Component of v orthogonal to the span of the given (independent) vectors.
RatVector project_complement(std::span<const Rational> v, std::span<const RatVector> span);
RatVector project_complement(std::span<const Integer> v, std::span<const IntVector> span);

/// Column c of the result is sum_r coeffs(r, c) * vectors[r].
std::vector<IntVector> combine(std::span<const IntVector> vectors, const IntMatrix& coeffs);

}  // namespace latdet
