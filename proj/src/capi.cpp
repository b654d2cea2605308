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

#include "latdet/latdet.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "latdet/bounds.hpp"
#include "latdet/generators.hpp"
#include "latdet/lattice_io.hpp"
#include "latdet/lll.hpp"
#include "latdet/oracle.hpp"
#include "latdet/sublattice.hpp"
#include "latdet/trials.hpp"

struct latdet_basis {
  latdet::Basis basis;
};

struct latdet_reduction {
  latdet::ReductionResult result;
  latdet_basis reduced;
};

namespace {

using namespace latdet;

thread_local std::string g_last_error;

latdet_status status_of(ErrorCode code) {
  // ErrorCode and the public status enumerate the same list, offset by one.
  return static_cast<latdet_status>(static_cast<int>(code) + 1);
}

template <typename F>
latdet_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return LATDET_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LATDET_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LATDET_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Rational delta_or_default(const char* delta) {
  return delta ? parse_rational(delta) : ReductionParams::standard_delta();
}

nlohmann::json strings(const std::vector<Integer>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

nlohmann::json vectors_json(const std::vector<IntVector>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : vs) out.push_back(strings(v));
  return out;
}

std::string format_report(const CampaignResult& result, latdet_format format) {
  if (format == LATDET_FORMAT_CSV) {
    std::ostringstream os;
    write_csv(os, result);
    return os.str();
  }
  if (format != LATDET_FORMAT_JSON) throw Error(ErrorCode::InvalidArgument, "reports are JSON or CSV");
  return to_json(result).dump(2) + "\n";
}

void append(CampaignResult& result, std::size_t trial, std::uint64_t seed, std::size_t m,
            std::vector<PoweredComparison> cmps) {
  for (auto& c : cmps) {
    if (!c.holds) ++result.violations;
    result.rows.push_back(TrialRow{trial, seed, m, std::move(c)});
  }
}

// Theorem, classic, BIBD2 and LEMMA1 rows for one explicit d-set.
void verify_dset(const ReducedBasisBounds& ctx, const std::vector<IntVector>& d, std::size_t k,
                 CampaignResult& result, std::size_t trial, std::uint64_t seed) {
  const std::size_t m = ctx.basis().dim();
  const auto dk = std::span<const IntVector>(d).first(k);
  append(result, trial, seed, m, check_theorem1(ctx, dk).comparisons);
  append(result, trial, seed, m, check_theorem2(ctx, d, k).comparisons);
  append(result, trial, seed, m, check_classic(ctx, d[0]).comparisons);
  append(result, trial, seed, m, {ctx.bibd2(k), check_lemma1(ctx.basis(), dk)});
}

}  // namespace

extern "C" {

const char* latdet_version(void) { return "0.1.0"; }

const char* latdet_status_name(latdet_status status) {
  switch (status) {
    case LATDET_OK: return "OK";
    case LATDET_ERR_NULL_ARGUMENT: return "NULL_ARGUMENT";
    case LATDET_ERR_INTERNAL: return "INTERNAL";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::InvalidArgument))
    return to_string(static_cast<ErrorCode>(code)).data();
  return "UNKNOWN";
}

const char* latdet_last_error(void) { return g_last_error.c_str(); }

void latdet_string_free(char* s) { std::free(s); }

latdet_status latdet_basis_parse(const char* text, latdet_basis** out) {
  if (!text || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new latdet_basis{parse_lattice(text)}; });
}

latdet_status latdet_basis_from_int64(size_t n, size_t m, const int64_t* rows, latdet_basis** out) {
  if (!rows || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<IntVector> vs(n, IntVector(m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < m; ++c) vs[i][c] = static_cast<long>(rows[i * m + c]);
    *out = new latdet_basis{Basis(std::move(vs))};
  });
}

void latdet_basis_free(latdet_basis* basis) { delete basis; }

size_t latdet_basis_rank(const latdet_basis* basis) { return basis ? basis->basis.size() : 0; }

size_t latdet_basis_dim(const latdet_basis* basis) { return basis ? basis->basis.dim() : 0; }

latdet_status latdet_basis_entry(const latdet_basis* basis, size_t i, size_t c, char** out) {
  if (!basis || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (i >= basis->basis.size() || c >= basis->basis.dim())
      throw Error(ErrorCode::InvalidArgument, "entry index out of range");
    *out = dup_string(basis->basis[i][c].get_str());
  });
}

latdet_status latdet_basis_write(const latdet_basis* basis, latdet_format format, char** out) {
  if (!basis || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (format == LATDET_FORMAT_CSV) throw Error(ErrorCode::InvalidArgument, "lattices are JSON or text");
    *out = dup_string(write_lattice(basis->basis, format == LATDET_FORMAT_JSON ? LatticeFormat::Json
                                                                                : LatticeFormat::Text));
  });
}

latdet_status latdet_basis_det_squared(const latdet_basis* basis, char** out) {
  if (!basis || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(det_squared(basis->basis.vectors()).get_str()); });
}

latdet_status latdet_basis_gso(const latdet_basis* basis, char** json_out) {
  if (!basis || !json_out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const GsoData g = gso(basis->basis);
    nlohmann::json q = nlohmann::json::array(), mu = nlohmann::json::array();
    for (std::size_t i = 0; i < g.qstar.size(); ++i) {
      q.push_back(g.qstar[i].get_str());
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < i; ++j) row.push_back(g.mu[i][j].get_str());
      mu.push_back(std::move(row));
    }
    *json_out = dup_string(nlohmann::json{{"qstar", q}, {"mu", mu}}.dump());
  });
}

latdet_status latdet_gen_random(size_t n, size_t m, uint64_t entry_bound, uint64_t seed, latdet_basis** out) {
  if (!out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new latdet_basis{gen_random_basis(n, m, entry_bound, seed)}; });
}

latdet_status latdet_gen_knapsack(const int64_t* weights, size_t count, int64_t modulus, latdet_basis** out) {
  if (!weights || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<Integer> w;
    for (std::size_t i = 0; i < count; ++i) w.emplace_back(static_cast<long>(weights[i]));
    *out = new latdet_basis{gen_knapsack(w, Integer(static_cast<long>(modulus)))};
  });
}

latdet_status latdet_gen_scramble(const latdet_basis* basis, uint64_t seed, size_t steps, latdet_basis** out) {
  if (!basis || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new latdet_basis{gen_unimodular_scramble(basis->basis, seed, steps).basis}; });
}

latdet_status latdet_reduce(const latdet_basis* basis, const char* delta, latdet_reduction** out) {
  if (!basis || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    ReductionResult r = lll_reduce(basis->basis, ReductionParams(delta_or_default(delta)));
    latdet_basis reduced{r.reduced};
    *out = new latdet_reduction{std::move(r), std::move(reduced)};
  });
}

void latdet_reduction_free(latdet_reduction* reduction) { delete reduction; }

const latdet_basis* latdet_reduction_basis(const latdet_reduction* reduction) {
  return reduction ? &reduction->reduced : nullptr;
}

uint64_t latdet_reduction_swaps(const latdet_reduction* reduction) {
  return reduction ? reduction->result.stats.swaps : 0;
}

uint64_t latdet_reduction_size_reductions(const latdet_reduction* reduction) {
  return reduction ? reduction->result.stats.size_reductions : 0;
}

latdet_status latdet_reduction_write(const latdet_reduction* reduction, char** json_out) {
  if (!reduction || !json_out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    nlohmann::json j = lattice_to_json(reduction->result.reduced);
    j["transform"] = matrix_to_json(reduction->result.transform);
    j["swaps"] = reduction->result.stats.swaps;
    j["size_reductions"] = reduction->result.stats.size_reductions;
    *json_out = dup_string(j.dump() + "\n");
  });
}

latdet_status latdet_check_reduced(const latdet_basis* basis, const char* delta, int* is_reduced,
                                   char** violations_json) {
  if (!basis || !is_reduced) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto violations = is_lll_reduced(basis->basis, ReductionParams(delta_or_default(delta)));
    *is_reduced = violations.empty() ? 1 : 0;
    if (violations_json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : violations)
        arr.push_back({{"condition", v.kind == ViolationKind::Lovasz ? "lovasz" : "size"},
                       {"i", v.i},
                       {"j", v.j},
                       {"excess", v.excess.get_str()}});
      *violations_json = dup_string(arr.dump());
    }
  });
}

latdet_status latdet_solve_coordinates(const latdet_basis* basis, const char* dvecs, char** json_out) {
  if (!basis || !dvecs || !json_out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto d = parse_vectors(dvecs);
    const SublatticeSelection sel = solve_coordinates(basis->basis, d);
    nlohmann::json j{{"coeffs", matrix_to_json(sel.coeffs)},
                     {"det_squared", sublattice_det_squared(sel.dvecs).get_str()}};
    *json_out = dup_string(j.dump());
  });
}

latdet_status latdet_staircase(const int64_t* v, size_t rows, size_t cols, char** json_out) {
  if (!v || !json_out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(v[r * cols + c]);
    const StaircaseResult s = staircase_reduce(m);
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : s.ops) {
      switch (op.kind) {
        case ColumnOp::Kind::Swap: ops.push_back({{"op", "swap"}, {"a", op.target}, {"b", op.source}}); break;
        case ColumnOp::Kind::Negate: ops.push_back({{"op", "negate"}, {"column", op.target}}); break;
        case ColumnOp::Kind::AddMultiple:
          ops.push_back({{"op", "add"}, {"target", op.target}, {"source", op.source}, {"factor", op.factor.get_str()}});
          break;
      }
    }
    nlohmann::json j{{"vbar", matrix_to_json(s.vbar)},
                     {"pivots", s.pivots},
                     {"transform", matrix_to_json(s.colop_transform)},
                     {"ops", ops}};
    *json_out = dup_string(j.dump());
  });
}

void latdet_verify_options_init(latdet_verify_options* options) {
  if (!options) return;
  *options = latdet_verify_options{0, 0, 1, 5, 3, nullptr};
}

latdet_status latdet_verify(const latdet_basis* reduced, const char* dvecs, const latdet_verify_options* options,
                            latdet_format format, char** out, int* all_hold) {
  if (!reduced || !out || !all_hold) return LATDET_ERR_NULL_ARGUMENT;
  latdet_verify_options opts;
  latdet_verify_options_init(&opts);
  if (options) opts = *options;
  return guarded([&] {
    const ReducedBasisBounds ctx(reduced->basis, delta_or_default(opts.delta));
    const std::size_t n = ctx.n();
    CampaignResult result;
    if (dvecs) {
      const std::vector<IntVector> d = parse_vectors(dvecs);
      const std::size_t j = d.size();
      const std::size_t k = opts.k ? opts.k : j;
      if (opts.j && opts.j != j) throw Error(ErrorCode::InvalidArgument, "j must equal the number of vectors");
      if (k > j) throw Error(ErrorCode::IndexOrder, "need k <= j");
      verify_dset(ctx, d, k, result, 0, opts.seed);
    } else {
      if (opts.j > n || (opts.k && opts.j && opts.k > opts.j) || opts.k > n)
        throw Error(ErrorCode::IndexOrder, "need 1 <= k <= j <= n");
      for (std::size_t s = 0; s < opts.samples; ++s) {
        const std::uint64_t seed = trial_seed(opts.seed, s);
        Rng rng(seed);
        const std::size_t k = opts.k ? opts.k : static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(opts.j ? opts.j : n)));
        const std::size_t j = opts.j ? opts.j
                                     : static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)));
        const IntMatrix v = random_full_rank_coeffs(rng, n, j, opts.coeff_bound);
        verify_dset(ctx, combine(ctx.basis().vectors(), v), k, result, s, seed);
      }
    }
    *all_hold = result.all_hold() ? 1 : 0;
    *out = dup_string(format_report(result, format));
  });
}

latdet_status latdet_oracle(const latdet_basis* basis, size_t k, const char* radius_sq, char** json_out) {
  if (!basis || !json_out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const Basis& b = basis->basis;
    const std::size_t n = b.size();
    if (k == 0) k = n;
    EnumBudget budget;
    const MinimaResult minima = successive_minima(b, n, budget);
    const Rational radius = radius_sq ? parse_rational(radius_sq) : Rational(minima.lambda_sq.front());
    const auto shortest = enumerate_short_vectors(b, radius, budget);
    const Basis reduced = lll_reduce(b).reduced;
    nlohmann::json succ = nlohmann::json::array();
    for (const auto& c : check_successive(reduced, minima).comparisons) succ.push_back(to_json(c));
    nlohmann::json lambda = nlohmann::json::array();
    for (const auto& x : minima.lambda_sq) lambda.push_back(x.get_str());
    nlohmann::json j{
        {"n", n},
        {"m", b.dim()},
        {"k", k},
        {"radius_sq", radius.get_str()},
        {"short_vectors", vectors_json(shortest)},
        {"lambda_sq", lambda},
        {"witnesses", vectors_json(minima.witnesses)},
        {"successive", succ},
        {"lemma1_bound", lemma1_bound(gso(b), k).get_str()},
        {"min_subdet_squared", min_subdet_bruteforce(b, k, budget).get_str()},
    };
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

void latdet_trial_config_init(latdet_trial_config* config) {
  if (!config) return;
  *config = latdet_trial_config{1, 1, nullptr, 0, 50, 5, 3, nullptr, nullptr, 1, nullptr};
}

latdet_status latdet_run_trials(const latdet_trial_config* config, latdet_format format, char** out,
                                latdet_trial_summary* summary) {
  if (!config || !out) return LATDET_ERR_NULL_ARGUMENT;
  return guarded([&] {
    TrialConfig cfg;
    cfg.seed = config->seed;
    cfg.trials = config->trials;
    if (config->dims_count) {
      require(config->dims, "dims");
      cfg.dims.clear();
      for (std::size_t i = 0; i < config->dims_count; ++i)
        cfg.dims.emplace_back(config->dims[2 * i], config->dims[2 * i + 1]);
    }
    cfg.entry_bound = config->entry_bound;
    cfg.d_samples_per_lattice = config->d_samples;
    cfg.coeff_bound = config->coeff_bound;
    cfg.delta = delta_or_default(config->delta);
    cfg.threads = config->threads;
    if (config->lattice) cfg.lattice = config->lattice->basis;
    if (config->checks) {
      cfg.checks.clear();
      std::string list(config->checks);
      std::istringstream in(list);
      std::string name;
      while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        auto id = parse_inequality(name);
        if (!id) throw Error(ErrorCode::InvalidArgument, "unknown inequality '" + name + "'");
        cfg.checks.insert(*id);
      }
      if (cfg.checks.empty()) throw Error(ErrorCode::InvalidArgument, "empty check list");
    }
    const CampaignResult result = run_trials(cfg);
    if (summary) *summary = latdet_trial_summary{result.rows.size(), result.violations, result.errors.size()};
    *out = dup_string(format_report(result, format));
  });
}

}  // extern "C"
