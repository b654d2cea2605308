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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "latdet/linalg.hpp"

namespace latdet {

enum class InequalityId {
  T1_1, T1_2, T1_3, T1_4, T1_5,
  T2_6, T2_7,
  LLL1, LLL2, LLL3,
  BIBD2, SUCC, LEMMA1, GSO_GROWTH, BIBD,
};

inline constexpr std::array<InequalityId, 15> kAllInequalities = {
    InequalityId::T1_1, InequalityId::T1_2, InequalityId::T1_3, InequalityId::T1_4,
    InequalityId::T1_5, InequalityId::T2_6, InequalityId::T2_7, InequalityId::LLL1,
    InequalityId::LLL2, InequalityId::LLL3, InequalityId::BIBD2, InequalityId::SUCC,
    InequalityId::LEMMA1, InequalityId::GSO_GROWTH, InequalityId::BIBD,
};

std::string_view to_string(InequalityId id) noexcept;
std::optional<InequalityId> parse_inequality(std::string_view name) noexcept;

/// An inequality X <= 2^(e/p) * Y restated as X^p <= 2^e * Y^p so both
/// sides are exact rationals. rhs_p already contains the 2^e factor.
struct PoweredComparison {
  InequalityId id;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t j = 0;
  unsigned power = 1;
  Rational lhs_p;
  Rational rhs_p;
  bool holds = false;
  double slack = 0;  // (lhs_p / rhs_p)^(1/p); informational only
};

PoweredComparison make_comparison(InequalityId id, std::size_t n, std::size_t k, std::size_t j,
                                  unsigned power, Rational lhs_p, Rational rhs_p);

Integer pow2(unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace latdet
