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

// latdet command-line front end. Talks to the library exclusively through
// the C interface in latdet/latdet.h.
//
// Exit status: 0 every comparison holds, 1 a violation was found,
// 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latdet/latdet.h"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputError {
  std::string message;
};

struct BasisDeleter {
  void operator()(latdet_basis* b) const { latdet_basis_free(b); }
};
struct ReductionDeleter {
  void operator()(latdet_reduction* r) const { latdet_reduction_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { latdet_string_free(s); }
};
using BasisPtr = std::unique_ptr<latdet_basis, BasisDeleter>;
using ReductionPtr = std::unique_ptr<latdet_reduction, ReductionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(latdet_status status) {
  if (status != LATDET_OK)
    throw InputError{std::string(latdet_status_name(status)) + ": " + latdet_last_error()};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path);
  if (!in) throw InputError{"cannot open " + path};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError{"cannot write " + path};
  out << text;
}

BasisPtr load_basis(const std::string& path) {
  latdet_basis* raw = nullptr;
  check(latdet_basis_parse(read_input(path).c_str(), &raw));
  return BasisPtr(raw);
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
  std::size_t n = 0, m = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> n)) throw InputError{"bad --dims '" + text + "'"};
  if (in >> comma) {
    if (comma != ',' || !(in >> m)) throw InputError{"bad --dims '" + text + "'"};
  } else {
    m = n;
  }
  return {n, m};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InputError{"bad integer '" + tok + "'"};
    }
  }
  return out;
}

latdet_format report_format(const std::string& name) { return name == "csv" ? LATDET_FORMAT_CSV : LATDET_FORMAT_JSON; }
latdet_format lattice_format(const std::string& name) { return name == "text" ? LATDET_FORMAT_TEXT : LATDET_FORMAT_JSON; }

struct Options {
  std::string in, out, d_path, format = "json", delta = "3/4", knapsack, checks, radius_sq;
  std::vector<std::string> dims{"4,4"};
  std::uint64_t seed = 1, entry_bound = 50, coeff_bound = 3, modulus = 1;
  std::size_t trials = 1, samples = 5, k = 0, j = 0, scramble = 0, threads = 1;
  bool reduce_first = false;
};

int cmd_gen(const Options& o) {
  latdet_basis* raw = nullptr;
  if (!o.knapsack.empty()) {
    auto w = parse_int_list(o.knapsack);
    check(latdet_gen_knapsack(w.data(), w.size(), static_cast<std::int64_t>(o.modulus), &raw));
  } else {
    auto [n, m] = parse_dims(o.dims.front());
    check(latdet_gen_random(n, m, o.entry_bound, o.seed, &raw));
  }
  BasisPtr basis(raw);
  if (o.scramble) {
    check(latdet_gen_scramble(basis.get(), o.seed, o.scramble, &raw));
    basis.reset(raw);
  }
  char* text = nullptr;
  check(latdet_basis_write(basis.get(), lattice_format(o.format), &text));
  StringPtr owned(text);
  write_output(o.out, text);
  return 0;
}

int cmd_reduce(const Options& o) {
  BasisPtr basis = load_basis(o.in);
  latdet_reduction* raw = nullptr;
  check(latdet_reduce(basis.get(), o.delta.c_str(), &raw));
  ReductionPtr red(raw);
  char* text = nullptr;
  if (o.format == "text")
    check(latdet_basis_write(latdet_reduction_basis(red.get()), LATDET_FORMAT_TEXT, &text));
  else
    check(latdet_reduction_write(red.get(), &text));
  StringPtr owned(text);
  write_output(o.out, text);
  std::fprintf(stderr, "swaps=%llu size_reductions=%llu\n",
               static_cast<unsigned long long>(latdet_reduction_swaps(red.get())),
               static_cast<unsigned long long>(latdet_reduction_size_reductions(red.get())));
  return 0;
}

int cmd_verify(const Options& o) {
  BasisPtr basis = load_basis(o.in);
  ReductionPtr red;
  const latdet_basis* target = basis.get();
  if (o.reduce_first) {
    latdet_reduction* raw = nullptr;
    check(latdet_reduce(basis.get(), "3/4", &raw));
    red.reset(raw);
    target = latdet_reduction_basis(red.get());
  }
  std::string dtext;
  if (!o.d_path.empty()) dtext = read_input(o.d_path);

  latdet_verify_options opts;
  latdet_verify_options_init(&opts);
  opts.k = o.k;
  opts.j = o.j;
  opts.seed = o.seed;
  opts.samples = o.samples;
  opts.coeff_bound = o.coeff_bound;
  opts.delta = o.delta.c_str();
  char* text = nullptr;
  int all_hold = 0;
  check(latdet_verify(target, o.d_path.empty() ? nullptr : dtext.c_str(), &opts, report_format(o.format), &text,
                      &all_hold));
  StringPtr owned(text);
  write_output(o.out, text);
  return all_hold ? 0 : kExitViolation;
}

int cmd_oracle(const Options& o) {
  BasisPtr basis = load_basis(o.in);
  char* text = nullptr;
  check(latdet_oracle(basis.get(), o.k, o.radius_sq.empty() ? nullptr : o.radius_sq.c_str(), &text));
  StringPtr owned(text);
  write_output(o.out, text);
  return 0;
}

int cmd_report(const Options& o) {
  std::vector<std::size_t> dims;
  for (const auto& d : o.dims) {
    auto [n, m] = parse_dims(d);
    dims.push_back(n);
    dims.push_back(m);
  }
  BasisPtr fixed;
  if (!o.in.empty()) fixed = load_basis(o.in);

  latdet_trial_config cfg;
  latdet_trial_config_init(&cfg);
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.dims = dims.data();
  cfg.dims_count = dims.size() / 2;
  cfg.entry_bound = o.entry_bound;
  cfg.d_samples = o.samples;
  cfg.coeff_bound = o.coeff_bound;
  cfg.delta = o.delta.c_str();
  cfg.checks = o.checks.empty() ? nullptr : o.checks.c_str();
  cfg.threads = o.threads;
  cfg.lattice = fixed.get();

  char* text = nullptr;
  latdet_trial_summary summary{};
  check(latdet_run_trials(&cfg, report_format(o.format), &text, &summary));
  StringPtr owned(text);
  write_output(o.out, text);
  std::fprintf(stderr, "comparisons=%zu violations=%zu errors=%zu\n", summary.comparisons, summary.violations,
               summary.errors);
  return summary.violations == 0 && summary.errors == 0 ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice reduction and sublattice determinant bound checks"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed"); };
  auto add_io = [&](CLI::App* c) {
    c->add_option("--in", o.in, "input lattice file (default stdin)");
    c->add_option("--out", o.out, "output path (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "generate a lattice");
  add_seed(gen);
  gen->add_option("--dims", o.dims, "n,m")->expected(1);
  gen->add_option("--entry-bound", o.entry_bound, "entries in [-B, B]");
  gen->add_option("--scramble", o.scramble, "apply this many random unimodular column operations");
  gen->add_option("--knapsack", o.knapsack, "comma separated weights for a subset-sum lattice");
  gen->add_option("--modulus", o.modulus, "weight scale for --knapsack");
  gen->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  gen->add_option("--out", o.out, "output path (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "LLL-reduce a lattice");
  add_io(reduce);
  reduce->add_option("--delta", o.delta, "Lovasz constant");
  reduce->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "check the sublattice determinant bounds on a reduced lattice");
  add_io(verify);
  add_seed(verify);
  verify->add_option("--d", o.d_path, "file of d-vectors (default: sample random d-sets)");
  verify->add_option("--k", o.k, "k (0 = random)");
  verify->add_option("--j", o.j, "j (0 = random)");
  verify->add_option("--trials", o.samples, "number of sampled d-sets");
  verify->add_option("--coeff-bound", o.coeff_bound, "coefficient range of sampled d-sets");
  verify->add_option("--delta", o.delta, "must be 3/4");
  verify->add_flag("--reduce", o.reduce_first, "LLL-reduce the input first");
  verify->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* oracle = app.add_subcommand("oracle", "enumerate short vectors and successive minima");
  add_io(oracle);
  oracle->add_option("--k", o.k, "sublattice rank for the minimum subdeterminant (0 = n)");
  oracle->add_option("--radius-sq", o.radius_sq, "squared radius for the short-vector listing");

  auto* report = app.add_subcommand("report", "run a seeded trial campaign");
  add_seed(report);
  report->add_option("--in", o.in, "fixed lattice for every trial");
  report->add_option("--out", o.out, "output path (default stdout)");
  report->add_option("--trials", o.trials, "number of lattices");
  report->add_option("--dims", o.dims, "n,m (repeatable; cycled over trials)");
  report->add_option("--entry-bound", o.entry_bound, "entries in [-B, B]");
  report->add_option("--samples", o.samples, "d-configurations per lattice");
  report->add_option("--coeff-bound", o.coeff_bound, "coefficient range of sampled d-sets");
  report->add_option("--delta", o.delta, "Lovasz constant (theorem checks need 3/4)");
  report->add_option("--checks", o.checks, "comma separated inequality names");
  report->add_option("--threads", o.threads, "worker threads");
  report->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*reduce) return cmd_reduce(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*report) return cmd_report(o);
  } catch (const InputError& e) {
    std::fprintf(stderr, "latdet: %s\n", e.message.c_str());
    return kExitUsage;
  }
  return kExitUsage;
}
