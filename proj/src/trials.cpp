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

#include "latdet/trials.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "latdet/bounds.hpp"
#include "latdet/generators.hpp"
#include "latdet/lll.hpp"
#include "latdet/oracle.hpp"

namespace latdet {

std::set<InequalityId> default_checks() {
  return {InequalityId::T1_1, InequalityId::T1_2, InequalityId::T1_3, InequalityId::T1_4,
          InequalityId::T1_5, InequalityId::T2_6, InequalityId::T2_7, InequalityId::LLL1,
          InequalityId::LLL2, InequalityId::LLL3, InequalityId::BIBD2, InequalityId::LEMMA1};
}

void validate(const TrialConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (config.dims.empty() && !config.lattice) throw Error(ErrorCode::InvalidArgument, "no dimensions given");
  for (const auto& [n, m] : config.dims)
    if (n < 1 || n > m) throw Error(ErrorCode::InvalidArgument, "dimensions need 1 <= n <= m");
  if (config.entry_bound < 1) throw Error(ErrorCode::InvalidArgument, "entry bound must be positive");
  if (config.coeff_bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be positive");
  ReductionParams{config.delta};
}

namespace {

struct TrialOutcome {
  std::vector<TrialRow> rows;
  std::optional<TrialError> error;
};

bool needs_reduced_context(const std::set<InequalityId>& checks) {
  return std::any_of(checks.begin(), checks.end(), [](InequalityId id) {
    return id != InequalityId::LEMMA1 && id != InequalityId::GSO_GROWTH && id != InequalityId::BIBD;
  });
}

void run_one(const TrialConfig& config, std::size_t trial, TrialOutcome& out) {
  const std::uint64_t seed = trial_seed(config.seed, trial);
  auto has = [&](InequalityId id) { return config.checks.count(id) != 0; };
  std::vector<PoweredComparison> cmps;
  std::size_t m = 0;
  try {
    Rng rng(seed);
    Basis basis = config.lattice ? *config.lattice
                                 : gen_random_basis(config.dims[trial % config.dims.size()].first,
                                                    config.dims[trial % config.dims.size()].second,
                                                    config.entry_bound, seed);
    m = basis.dim();
    const std::size_t n = basis.size();
    const ReductionResult red = lll_reduce(basis, ReductionParams(config.delta));

    if (has(InequalityId::GSO_GROWTH) || has(InequalityId::BIBD)) {
      const GsoData g = gso(red.reduced);
      if (has(InequalityId::GSO_GROWTH))
        for (auto& c : gso_growth_ok(g)) cmps.push_back(std::move(c));
      if (has(InequalityId::BIBD))
        for (auto& c : bibd_ok(red.reduced, g)) cmps.push_back(std::move(c));
    }

    std::optional<ReducedBasisBounds> ctx;
    if (needs_reduced_context(config.checks)) ctx.emplace(red.reduced, config.delta);

    for (std::size_t s = 0; s < config.d_samples_per_lattice; ++s) {
      const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n)));
      const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)));
      const IntMatrix v = random_full_rank_coeffs(rng, n, j, config.coeff_bound);
      const std::vector<IntVector> d = combine(red.reduced.vectors(), v);
      const std::span<const IntVector> dk = std::span<const IntVector>(d).first(k);

      auto take = [&](std::vector<PoweredComparison> list) {
        for (auto& c : list)
          if (has(c.id)) cmps.push_back(std::move(c));
      };
      if (ctx) {
        if (std::any_of(config.checks.begin(), config.checks.end(), [](InequalityId id) {
              return id >= InequalityId::T1_1 && id <= InequalityId::T1_5;
            }))
          take(check_theorem1(*ctx, dk).comparisons);
        if (has(InequalityId::T2_6) || has(InequalityId::T2_7)) take(check_theorem2(*ctx, d, k).comparisons);
        if (has(InequalityId::LLL1) || has(InequalityId::LLL2) || has(InequalityId::LLL3))
          take(check_classic(*ctx, d[0]).comparisons);
        if (has(InequalityId::BIBD2)) cmps.push_back(ctx->bibd2(k));
      }
      if (has(InequalityId::LEMMA1)) cmps.push_back(check_lemma1(basis, dk));
    }

    if (has(InequalityId::SUCC) && ctx && n <= EnumBudget{}.max_dim) {
      const MinimaResult minima = successive_minima(red.reduced, n);
      for (auto& c : ctx->successive(minima.lambda_sq)) cmps.push_back(std::move(c));
    }
  } catch (const Error& e) {
    out.error = TrialError{trial, seed, e.code(), e.what()};
  }
  out.rows.reserve(cmps.size());
  for (auto& c : cmps) out.rows.push_back(TrialRow{trial, seed, m, std::move(c)});
}

}  // namespace

CampaignResult run_trials(const TrialConfig& config) {
  validate(config);
  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) run_one(config, t, outcomes[t]);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  CampaignResult result;
  for (auto& o : outcomes) {
    std::stable_sort(o.rows.begin(), o.rows.end(), [](const TrialRow& a, const TrialRow& b) {
      return a.comparison.id < b.comparison.id;
    });
    for (auto& r : o.rows) {
      if (!r.comparison.holds) ++result.violations;
      result.rows.push_back(std::move(r));
    }
    if (o.error) result.errors.push_back(std::move(*o.error));
  }
  return result;
}

std::string format_slack(double slack) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", slack);
  return buf;
}

void write_csv(std::ostream& os, const CampaignResult& result) {
  os << "trial,seed,n,m,k,j,inequality,power,holds,slack\n";
  for (const auto& r : result.rows) {
    const auto& c = r.comparison;
    os << r.trial << ',' << r.seed << ',' << c.n << ',' << r.m << ',' << c.k << ',' << c.j << ','
       << to_string(c.id) << ',' << c.power << ',' << (c.holds ? "true" : "false") << ','
       << format_slack(c.slack) << '\n';
  }
}

nlohmann::json to_json(const CampaignResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : result.rows) {
    nlohmann::json row = to_json(r.comparison);
    row["trial"] = r.trial;
    row["seed"] = r.seed;
    row["m"] = r.m;
    rows.push_back(std::move(row));
  }
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : result.errors)
    errors.push_back({{"trial", e.trial}, {"seed", e.seed}, {"code", std::string(to_string(e.code))},
                      {"message", e.message}});
  return nlohmann::json{{"comparisons", result.rows.size()},
                        {"violations", result.violations},
                        {"all_hold", result.all_hold()},
                        {"rows", std::move(rows)},
                        {"errors", std::move(errors)}};
}

}  // namespace latdet
