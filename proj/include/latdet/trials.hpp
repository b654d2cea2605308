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
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latdet/comparison.hpp"
#include "latdet/linalg.hpp"

namespace latdet {

std::set<InequalityId> default_checks();

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::vector<std::pair<std::size_t, std::size_t>> dims{{4, 4}};  // (n, m), cycled by trial index
  std::uint64_t entry_bound = 50;
  std::size_t d_samples_per_lattice = 5;
  std::uint64_t coeff_bound = 3;
  Rational delta{3, 4};
  std::set<InequalityId> checks = default_checks();
  std::size_t threads = 1;
  std::optional<Basis> lattice;  // fixed lattice for every trial instead of random draws
};

/// Validates the invariants (n <= m, trials >= 1, ...); InvalidArgument.
void validate(const TrialConfig& config);

struct TrialRow {
  std::size_t trial;
  std::uint64_t seed;
  std::size_t m;
  PoweredComparison comparison;
};

struct TrialError {
  std::size_t trial;
  std::uint64_t seed;
  ErrorCode code;
  std::string message;
};

struct CampaignResult {
  std::vector<TrialRow> rows;  // sorted by (trial, inequality)
  std::vector<TrialError> errors;
  std::size_t violations = 0;

  bool all_hold() const noexcept { return violations == 0 && errors.empty(); }
};

/// Per trial: draw (or take) a lattice, reduce it, sample d-configurations
/// and evaluate the selected checks. Trial failures are collected, not
/// thrown. Output is identical for any thread count.
CampaignResult run_trials(const TrialConfig& config);

/// Columns: trial, seed, n, m, k, j, inequality, power, holds, slack.
void write_csv(std::ostream& os, const CampaignResult& result);
nlohmann::json to_json(const CampaignResult& result);

std::string format_slack(double slack);

}  // namespace latdet
