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

#include "latdet/generators.hpp"

#include <limits>
#include <utility>

namespace latdet {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do draw = engine_();
  while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over a combination of both inputs
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Basis gen_random_basis(std::size_t n, std::size_t m, std::uint64_t entry_bound, std::uint64_t seed) {
  if (n == 0 || n > m) throw Error(ErrorCode::InvalidArgument, "need 1 <= n <= m");
  if (entry_bound == 0) throw Error(ErrorCode::InvalidArgument, "entry bound must be positive");
  Rng rng(seed);
  const auto b = static_cast<std::int64_t>(entry_bound);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<IntVector> rows(n, IntVector(m));
    for (auto& row : rows)
      for (auto& x : row) x = static_cast<long>(rng.uniform(-b, b));
    if (rank(rows) == n) return Basis(std::move(rows));
  }
  throw Error(ErrorCode::RankRetryExhausted, "no full-rank draw in 100 attempts");
}

ScrambleResult gen_unimodular_scramble(const Basis& basis, std::uint64_t seed, std::size_t steps) {
  const std::size_t n = basis.size();
  Rng rng(seed);
  IntMatrix t = IntMatrix::identity(n);
  std::vector<ColumnOp> log;
  log.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const std::int64_t kind = n == 1 ? 1 : rng.uniform(0, 2);
    ColumnOp op{ColumnOp::Kind::Negate, a, a, 0};
    if (kind != 1) {
      auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
      if (b >= a) ++b;
      op.source = b;
      if (kind == 0) {
        op.kind = ColumnOp::Kind::Swap;
      } else {
        op.kind = ColumnOp::Kind::AddMultiple;
        op.factor = rng.uniform(0, 1) == 0 ? -1 : 1;
      }
    }
    apply(t, op);
    log.push_back(std::move(op));
  }
  return ScrambleResult{Basis(combine(basis.vectors(), t)), std::move(t), std::move(log)};
}

Basis gen_knapsack(std::span<const Integer> weights, const Integer& modulus) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "no weights");
  std::vector<IntVector> rows(n, IntVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] == 0) throw Error(ErrorCode::InvalidArgument, "weights must be nonzero");
    rows[i][i] = 1;
    rows[i][n] = modulus * weights[i];
  }
  return Basis(std::move(rows));
}

IntMatrix random_full_rank_coeffs(Rng& rng, std::size_t n, std::size_t k, std::uint64_t bound) {
  if (k == 0 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be positive");
  const auto b = static_cast<std::int64_t>(bound);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    IntMatrix v(n, k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < k; ++c) v(r, c) = static_cast<long>(rng.uniform(-b, b));
    if (rank(v.columns()) == k) return v;
  }
  throw Error(ErrorCode::RankRetryExhausted, "no full-rank coefficient draw");
}

}  // namespace latdet
