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

#include "latdet/comparison.hpp"

#include <cmath>
#include <utility>

#include "latdet/shadow.hpp"

namespace latdet {

namespace {
constexpr std::array<std::string_view, 15> kNames = {
    "T1_1", "T1_2", "T1_3", "T1_4", "T1_5", "T2_6", "T2_7", "LLL1",
    "LLL2", "LLL3", "BIBD2", "SUCC", "LEMMA1", "GSO_GROWTH", "BIBD",
};
}  // namespace

std::string_view to_string(InequalityId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<InequalityId> parse_inequality(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAllInequalities[i];
  return std::nullopt;
}

Integer pow2(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

PoweredComparison make_comparison(InequalityId id, std::size_t n, std::size_t k, std::size_t j,
                                  unsigned power, Rational lhs_p, Rational rhs_p) {
  PoweredComparison c;
  c.id = id;
  c.n = n;
  c.k = k;
  c.j = j;
  c.power = power;
  c.holds = lhs_p <= rhs_p;
  if (lhs_p > 0 && rhs_p > 0)
    c.slack = std::exp2((log2_of(lhs_p) - log2_of(rhs_p)) / power);
  else
    c.slack = lhs_p > 0 ? INFINITY : 0.0;
  if (c.holds && c.slack > 1.0) c.slack = 1.0;
  c.lhs_p = std::move(lhs_p);
  c.rhs_p = std::move(rhs_p);
  return c;
}

}  // namespace latdet
