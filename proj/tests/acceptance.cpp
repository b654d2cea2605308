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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "latdet/bounds.hpp"
#include "latdet/generators.hpp"
#include "latdet/lll.hpp"
#include "latdet/oracle.hpp"
#include "latdet/shadow.hpp"
#include "latdet/sublattice.hpp"
#include "latdet/trials.hpp"
#include "test_support.hpp"

using namespace latdet;
using namespace latdet::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::size_t worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs body(i) for i in [0, count) on all cores.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(worker_count(), count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool is_theorem_or_classic(InequalityId id) { return id >= InequalityId::T1_1 && id <= InequalityId::LLL3; }

Outcome theorem_suite() {
  TrialConfig cfg;
  cfg.seed = 20260101;
  cfg.trials = 1000;
  cfg.dims.clear();
  for (std::size_t n = 2; n <= 8; ++n) {
    cfg.dims.emplace_back(n, n);
    cfg.dims.emplace_back(n, n + 2);
  }
  cfg.entry_bound = 50;
  cfg.d_samples_per_lattice = 5;
  cfg.coeff_bound = 3;
  cfg.checks.clear();
  for (auto id : kAllInequalities)
    if (is_theorem_or_classic(id)) cfg.checks.insert(id);
  cfg.threads = worker_count();
  const CampaignResult r = run_trials(cfg);
  std::size_t counted = 0, violations = 0;
  for (const auto& row : r.rows) {
    if (!is_theorem_or_classic(row.comparison.id)) continue;
    ++counted;
    if (!row.comparison.holds) ++violations;
  }
  return {violations == 0 && r.errors.empty() && counted >= 50000,
          fmt("%zu violations, %zu errors, %zu comparisons", violations, r.errors.size(), counted)};
}

Outcome lemma1_unreduced() {
  std::atomic<std::size_t> failures{0}, cases{0};
  parallel_for(500, [&](std::size_t t) {
    const std::uint64_t seed = trial_seed(777, t);
    const std::size_t n = 2 + t % 7, m = (t / 7) % 2 ? n + 2 : n;
    Basis b = gen_random_basis(n, m, 50, seed);
    GsoData g = gso(b);
    Rng rng(seed);
    for (int s = 0; s < 5; ++s) {
      const auto k = static_cast<std::size_t>(rng.uniform(1, n));
      auto d = combine(b.vectors(), random_full_rank_coeffs(rng, n, k, 3));
      const Rational t_val(sublattice_det_squared(d));
      const Rational bound = lemma1_bound(g, k);
      ++cases;
      if (t_val < bound || bound != subset_min_product(g.qstar, k)) ++failures;
    }
  });
  return {failures == 0, fmt("%zu failures in %zu cases", failures.load(), cases.load())};
}

Outcome exhaustive_small() {
  // 200 distinct bases with entries in {-2..2}: every rank-1 one, then
  // seeded draws of rank 2 and 3, duplicates rejected.
  std::vector<Basis> bases;
  std::set<std::vector<IntVector>> seen;
  for (long x : {-2, -1, 1, 2}) {
    bases.push_back(basis({{x}}));
    seen.insert(rows({{x}}));
  }
  for (std::uint64_t draw = 0; bases.size() < 200; ++draw) {
    const std::size_t n = 2 + draw % 2;
    Basis b = gen_random_basis(n, n, 2, trial_seed(3, draw));
    std::vector<IntVector> key(b.vectors().begin(), b.vectors().end());
    if (seen.insert(key).second) bases.push_back(std::move(b));
  }

  std::atomic<std::uint64_t> dsets{0}, violations{0};
  parallel_for(bases.size(), [&](std::size_t i) {
    const ReducedBasisBounds ctx(lll_reduce(bases[i]).reduced);
    const std::size_t n = ctx.n();
    const Integer lattice_det_sq = det_squared(ctx.basis().vectors());
    for (std::size_t k = 1; k <= n; ++k) {
      std::map<Integer, bool> verdict;  // the five comparisons depend only on T
      std::uint64_t local = 0, bad = 0;
      enumerate_d_sets(ctx.basis(), k, 2, [&](const IntMatrix& v, std::span<const IntVector> d) {
        ++local;
        // For k = n the d-set spans a sublattice of index |det V|.
        Integer t;
        if (k == n) {
          const Integer dv = determinant(v);
          t = dv * dv * lattice_det_sq;
        } else {
          t = sublattice_det_squared(d);
        }
        auto it = verdict.find(t);
        if (it == verdict.end()) {
          bool ok = true;
          for (const auto& c : ctx.theorem1(t, k)) ok = ok && c.holds;
          it = verdict.emplace(t, ok).first;
        }
        if (!it->second) ++bad;
      });
      dsets += local;
      violations += bad;
    }
  });
  return {violations == 0,
          fmt("%llu violating d-sets of %llu over %zu bases", static_cast<unsigned long long>(violations.load()),
              static_cast<unsigned long long>(dsets.load()), bases.size())};
}

Outcome staircase_conformance() {
  std::atomic<std::size_t> failures{0};
  parallel_for(1000, [&](std::size_t t) {
    Rng rng(trial_seed(99, t));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto k = static_cast<std::size_t>(rng.uniform(1, std::min<std::int64_t>(5, n)));
    const IntMatrix v = random_full_rank_coeffs(rng, n, k, 9);
    const Basis b = gen_random_basis(n, n + 1, 50, trial_seed(98, t));
    const auto d = combine(b.vectors(), v);
    bool ok = true;
    try {
      const StaircaseResult s = staircase_reduce(solve_coordinates(b, d));
      std::size_t sum = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (i && s.pivots[i - 1] >= s.pivots[i]) ok = false;
        if (s.pivots[i] < 1 || s.pivots[i] > n) ok = false;
        sum += s.pivots[i];
      }
      if (sum > k * n - k * (k - 1) / 2) ok = false;
      if (abs(determinant(s.colop_transform)) != 1) ok = false;
      if (!(v * s.colop_transform == s.vbar)) ok = false;
      if (sublattice_det_squared(s.dbar) != sublattice_det_squared(d)) ok = false;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++failures;
  });
  return {failures == 0, fmt("%zu of 1000 matrices nonconforming", failures.load())};
}

Outcome specialisations() {
  using I = InequalityId;
  std::size_t table_failures = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    if (!(powered_form(I::T1_1, n, n) == powered_form(I::LLL1, n, n))) ++table_failures;
    const PoweredForm l2 = powered_form(I::LLL2, n, 1);
    if (!(powered_form(I::T1_1, n, 1) == PoweredForm{2 * l2.power, 2 * l2.exponent})) ++table_failures;
    for (std::size_t k = 1; k <= n; ++k) {
      const PoweredForm t2 = powered_form(I::T1_2, n, k);
      if (!(powered_form(I::T2_6, n, k, k) == PoweredForm{unsigned(2 * k) * t2.power, 2 * k * t2.exponent}))
        ++table_failures;
      if (!(powered_form(I::T2_7, n, k, n) == powered_form(I::T1_5, n, k))) ++table_failures;
    }
  }

  std::atomic<std::size_t> mismatches{0}, pairs{0};
  parallel_for(100, [&](std::size_t t) {
    const std::uint64_t seed = trial_seed(55, t);
    const std::size_t n = 2 + t % 7;
    const Basis b = lll_reduce(gen_random_basis(n, n + (t % 2) * 2, 50, seed)).reduced;
    const ReducedBasisBounds ctx(b);
    Rng rng(seed);
    auto get = [](const BoundReport& r, I id) {
      for (const auto& c : r.comparisons)
        if (c.id == id) return c;
      throw Error(ErrorCode::InvalidArgument, "missing comparison");
    };
    auto same = [&](const PoweredComparison& a, const PoweredComparison& c) {
      ++pairs;
      if (a.holds != c.holds) ++mismatches;
    };
    const auto all = std::vector<IntVector>(b.vectors().begin(), b.vectors().end());
    for (std::size_t k = 1; k <= n; ++k) {
      const auto d = combine(b.vectors(), random_full_rank_coeffs(rng, n, k, 3));
      const auto th1 = check_theorem1(ctx, d);
      same(get(check_theorem2(ctx, d, k), I::T2_6), get(th1, I::T1_2));
      const auto prefix = std::vector<IntVector>(all.begin(), all.begin() + k);
      same(get(check_theorem2(ctx, all, k), I::T2_7), get(check_theorem1(ctx, prefix), I::T1_5));
    }
    // T1_1 at k = n against LLL1; T1_1 at k = 1 against LLL2 with the same d.
    same(get(check_theorem1(ctx, all), I::T1_1), get(check_classic(ctx, all[0]), I::LLL1));
    const auto d1 = combine(b.vectors(), random_full_rank_coeffs(rng, n, 1, 3));
    same(get(check_theorem1(ctx, d1), I::T1_1), get(check_classic(ctx, d1[0]), I::LLL2));
  });
  return {table_failures == 0 && mismatches == 0,
          fmt("%zu table mismatches, %zu verdict mismatches in %zu pairs", table_failures, mismatches.load(),
              pairs.load())};
}

Outcome oracle_cross_checks() {
  std::atomic<std::size_t> succ_fail{0}, invariance_fail{0}, subdet_fail{0};
  parallel_for(100, [&](std::size_t t) {
    const std::uint64_t seed = trial_seed(66, t);
    const std::size_t n = 2 + t % 4;
    const Basis b = gen_random_basis(n, n + (t % 2), 50, seed);
    const Basis r = lll_reduce(b).reduced;
    const MinimaResult minima = successive_minima(r, n);
    if (!check_successive(r, minima).all_hold()) ++succ_fail;
    for (std::uint64_t s = 1; s <= 10; ++s)
      if (successive_minima(gen_unimodular_scramble(b, seed + s, 20).basis, n).lambda_sq != minima.lambda_sq) {
        ++invariance_fail;
        break;
      }
    const GsoData g = gso(b);
    for (std::size_t k = 1; k <= n; ++k)
      if (Rational(min_subdet_bruteforce(b, k)) < lemma1_bound(g, k)) ++subdet_fail;
  });
  return {succ_fail == 0 && invariance_fail == 0 && subdet_fail == 0,
          fmt("succ failures %zu, lambda changes %zu, subdet below bound %zu", succ_fail.load(),
              invariance_fail.load(), subdet_fail.load())};
}

Outcome numerical_shadow() {
  std::mutex mu;
  double worst_q = 0, worst_angle = 0;
  parallel_for(1000, [&](std::size_t t) {
    const std::size_t n = 1 + t % 8;
    const Basis b = gen_random_basis(n, n + t % 3, 50, trial_seed(88, t));
    const GsoData g = gso(b);
    const std::vector<double> q = gso_qstar_double(b.vectors());
    double local = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double exact = to_double(g.qstar[i]);
      local = std::max(local, std::fabs(q[i] - exact) / exact);
    }
    double angle = 0;
    if (t < 200) {
      const Basis big = gen_random_basis(n, n + t % 3, 1000, trial_seed(89, t));
      for (std::size_t k = 1; k <= n; ++k) angle = std::max(angle, angle_identity_residual(big, k));
    }
    std::lock_guard lock(mu);
    worst_q = std::max(worst_q, local);
    worst_angle = std::max(worst_angle, angle);
  });
  return {worst_q <= 1e-9 && worst_angle <= 1e-8,
          fmt("max relative qstar error %.3g, max angle residual %.3g", worst_q, worst_angle)};
}

Outcome hand_trace() {
  const ReductionResult r = lll_reduce(basis({{1, 1}, {0, 1}}));
  const bool trace_ok = r.reduced == basis({{0, 1}, {1, 0}}) && r.stats.swaps == 1;
  std::atomic<std::size_t> failures{0};
  parallel_for(20, [&](std::size_t t) {
    const std::size_t n = 1 + t % 8;
    const Basis b = gen_random_basis(n, n + t % 3, 50, trial_seed(11, t));
    const Integer ref = det_squared(b.vectors());
    for (std::uint64_t s = 0; s < 200; ++s)
      if (det_squared(gen_unimodular_scramble(b, trial_seed(12, t * 1000 + s), 30).basis.vectors()) != ref)
        ++failures;
  });
  return {trace_ok && failures == 0,
          fmt("reduced to [(0,1),(1,0)] with %llu swap(s); %zu det^2 changes over 4000 scrambles",
              static_cast<unsigned long long>(r.stats.swaps), failures.load())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"theorem suite on 1000 reduced lattices", theorem_suite},
      {"lemma 1 on 500 unreduced bases", lemma1_unreduced},
      {"exhaustive d-sets on 200 small bases", exhaustive_small},
      {"staircase conformance on 1000 matrices", staircase_conformance},
      {"specialisation identities", specialisations},
      {"oracle cross-checks on 100 lattices", oracle_cross_checks},
      {"floating-point shadow", numerical_shadow},
      {"hand-traced reduction and det invariance", hand_trace},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed;
}
