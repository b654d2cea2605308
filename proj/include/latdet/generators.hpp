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
#include <random>
#include <span>
#include <vector>

#include "latdet/linalg.hpp"
#include "latdet/sublattice.hpp"

namespace latdet {

/// Seeded generator. Bounded draws use rejection sampling on the raw
/// mt19937_64 stream, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Independent per-trial seed derived from (seed, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// n independent vectors in Z^m with entries uniform in [-entry_bound,
/// entry_bound]; resamples dependent draws, RankRetryExhausted after 100.
Basis gen_random_basis(std::size_t n, std::size_t m, std::uint64_t entry_bound, std::uint64_t seed);

struct ScrambleResult {
  Basis basis;
  IntMatrix transform;  // input * transform = output, unimodular
  std::vector<ColumnOp> log;
};

/// Applies `steps` random elementary column operations (swap, negate, add
/// +-1 times another column).
ScrambleResult gen_unimodular_scramble(const Basis& basis, std::uint64_t seed, std::size_t steps);

/// Subset-sum lattice: vector i is e_i in Z^(n+1) with last coordinate
/// modulus * weights[i].
Basis gen_knapsack(std::span<const Integer> weights, const Integer& modulus);

/// n x k matrix with entries in [-bound, bound] and full column rank.
IntMatrix random_full_rank_coeffs(Rng& rng, std::size_t n, std::size_t k, std::uint64_t bound);

}  // namespace latdet
