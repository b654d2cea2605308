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

#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "latdet/latdet.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  latdet_string_free(s);
  return out;
}

latdet_basis* from(std::size_t n, std::size_t m, std::initializer_list<std::int64_t> entries) {
  std::vector<std::int64_t> v(entries);
  latdet_basis* b = nullptr;
  REQUIRE(latdet_basis_from_int64(n, m, v.data(), &b) == LATDET_OK);
  return b;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(latdet_version()) == "0.1.0");
  CHECK(std::string(latdet_status_name(LATDET_OK)) == "OK");
  CHECK(std::string(latdet_status_name(LATDET_ERR_DELTA_MISMATCH)) == "DELTA_MISMATCH");
  CHECK(std::string(latdet_status_name(LATDET_ERR_NOT_IN_LATTICE)) == "NOT_IN_LATTICE");
}

TEST_CASE("basis handles") {
  latdet_basis* b = from(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(latdet_basis_rank(b) == 2);
  CHECK(latdet_basis_dim(b) == 3);
  char* s = nullptr;
  REQUIRE(latdet_basis_entry(b, 1, 2, &s) == LATDET_OK);
  CHECK(take(s) == "6");
  CHECK(latdet_basis_entry(b, 2, 0, &s) == LATDET_ERR_INVALID_ARGUMENT);
  REQUIRE(latdet_basis_det_squared(b, &s) == LATDET_OK);
  CHECK(take(s) == "54");  // 14 * 77 - 32^2
  REQUIRE(latdet_basis_write(b, LATDET_FORMAT_TEXT, &s) == LATDET_OK);
  CHECK(take(s) == "1 2 3\n4 5 6\n");
  latdet_basis_free(b);

  latdet_basis* dep = nullptr;
  std::int64_t rows[] = {1, 2, 2, 4};
  CHECK(latdet_basis_from_int64(2, 2, rows, &dep) == LATDET_ERR_DEPENDENT);
  CHECK(dep == nullptr);
  CHECK(std::strlen(latdet_last_error()) > 0);
  CHECK(latdet_basis_parse("1 q", &dep) == LATDET_ERR_PARSE);
  CHECK(latdet_basis_parse(nullptr, &dep) == LATDET_ERR_NULL_ARGUMENT);
  latdet_basis_free(nullptr);
}

TEST_CASE("gso through the C interface") {
  latdet_basis* b = from(2, 2, {1, 1, 0, 1});
  char* s = nullptr;
  REQUIRE(latdet_basis_gso(b, &s) == LATDET_OK);
  const std::string json = take(s);
  CHECK(json.find("\"1/2\"") != std::string::npos);
  CHECK(json.find("\"qstar\":[\"2\",\"1/2\"]") != std::string::npos);
  latdet_basis_free(b);
}

TEST_CASE("reduction") {
  latdet_basis* b = from(2, 2, {1, 1, 0, 1});
  latdet_reduction* r = nullptr;
  REQUIRE(latdet_reduce(b, nullptr, &r) == LATDET_OK);
  CHECK(latdet_reduction_swaps(r) == 1);
  char* s = nullptr;
  REQUIRE(latdet_basis_write(latdet_reduction_basis(r), LATDET_FORMAT_TEXT, &s) == LATDET_OK);
  CHECK(take(s) == "0 1\n1 0\n");
  REQUIRE(latdet_reduction_write(r, &s) == LATDET_OK);
  CHECK(take(s).find("\"transform\"") != std::string::npos);

  int ok = -1;
  REQUIRE(latdet_check_reduced(b, "3/4", &ok, &s) == LATDET_OK);
  CHECK(ok == 0);
  CHECK(take(s).find("lovasz") != std::string::npos);
  REQUIRE(latdet_check_reduced(latdet_reduction_basis(r), nullptr, &ok, nullptr) == LATDET_OK);
  CHECK(ok == 1);

  latdet_reduction* bad = nullptr;
  CHECK(latdet_reduce(b, "1/5", &bad) == LATDET_ERR_INVALID_ARGUMENT);
  latdet_reduction_free(r);
  latdet_basis_free(b);
}

TEST_CASE("generators") {
  latdet_basis *a = nullptr, *b = nullptr;
  REQUIRE(latdet_gen_random(3, 3, 50, 42, &a) == LATDET_OK);
  char* s = nullptr;
  REQUIRE(latdet_basis_write(a, LATDET_FORMAT_TEXT, &s) == LATDET_OK);
  CHECK(take(s) == "-18 25 -8\n25 40 49\n-28 -49 31\n");
  REQUIRE(latdet_gen_scramble(a, 7, 30, &b) == LATDET_OK);
  char *da = nullptr, *db = nullptr;
  REQUIRE(latdet_basis_det_squared(a, &da) == LATDET_OK);
  REQUIRE(latdet_basis_det_squared(b, &db) == LATDET_OK);
  CHECK(take(da) == take(db));
  latdet_basis_free(a);
  latdet_basis_free(b);

  std::int64_t w[] = {2, 3};
  REQUIRE(latdet_gen_knapsack(w, 2, 10, &a) == LATDET_OK);
  REQUIRE(latdet_basis_write(a, LATDET_FORMAT_TEXT, &s) == LATDET_OK);
  CHECK(take(s) == "1 0 20\n0 1 30\n");
  latdet_basis_free(a);
  CHECK(latdet_gen_random(3, 2, 5, 1, &a) == LATDET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sublattice calls") {
  latdet_basis* b = from(2, 2, {1, 1, 0, 1});
  char* s = nullptr;
  REQUIRE(latdet_solve_coordinates(b, "1 2\n", &s) == LATDET_OK);
  CHECK(take(s).find("\"coeffs\":[[\"1\"],[\"1\"]]") != std::string::npos);
  latdet_basis_free(b);

  b = from(2, 2, {2, 0, 0, 2});
  CHECK(latdet_solve_coordinates(b, "1 1\n", &s) == LATDET_ERR_NOT_IN_LATTICE);
  latdet_basis_free(b);

  std::int64_t v[] = {1, 1, 2, 3};
  REQUIRE(latdet_staircase(v, 2, 2, &s) == LATDET_OK);
  CHECK(take(s).find("\"pivots\":[1,2]") != std::string::npos);
  std::int64_t dep[] = {1, 2, 2, 4};
  CHECK(latdet_staircase(dep, 2, 2, &s) == LATDET_ERR_RANK_DEFICIENT);
}

TEST_CASE("verify") {
  latdet_basis* r = from(2, 2, {0, 1, 1, 0});
  latdet_verify_options opts;
  latdet_verify_options_init(&opts);
  char* s = nullptr;
  int all = 0;
  REQUIRE(latdet_verify(r, "1 0\n", &opts, LATDET_FORMAT_JSON, &s, &all) == LATDET_OK);
  CHECK(all == 1);
  CHECK(take(s).find("\"T1_1\"") != std::string::npos);

  REQUIRE(latdet_verify(r, nullptr, &opts, LATDET_FORMAT_CSV, &s, &all) == LATDET_OK);
  CHECK(all == 1);
  CHECK(take(s).rfind("trial,seed,n,m,k,j,inequality,power,holds,slack\n", 0) == 0);

  opts.delta = "0.99";
  CHECK(latdet_verify(r, nullptr, &opts, LATDET_FORMAT_JSON, &s, &all) == LATDET_ERR_DELTA_MISMATCH);
  latdet_basis_free(r);

  latdet_basis* skew = from(2, 2, {1, 1, 0, 1});
  CHECK(latdet_verify(skew, nullptr, nullptr, LATDET_FORMAT_JSON, &s, &all) == LATDET_ERR_NOT_REDUCED);
  latdet_basis_free(skew);
}

TEST_CASE("oracle") {
  latdet_basis* b = from(2, 2, {2, 0, 1, 2});
  char* s = nullptr;
  REQUIRE(latdet_oracle(b, 2, "5", &s) == LATDET_OK);
  const std::string j = take(s);
  CHECK(j.find("\"lambda_sq\": [\n    \"4\",\n    \"5\"\n  ]") != std::string::npos);
  latdet_basis_free(b);
}

TEST_CASE("campaigns") {
  latdet_trial_config cfg;
  latdet_trial_config_init(&cfg);
  std::size_t dims[] = {3, 3, 4, 6};
  cfg.dims = dims;
  cfg.dims_count = 2;
  cfg.trials = 6;
  cfg.threads = 3;
  char* s = nullptr;
  latdet_trial_summary sum{};
  REQUIRE(latdet_run_trials(&cfg, LATDET_FORMAT_CSV, &s, &sum) == LATDET_OK);
  const std::string parallel = take(s);
  CHECK(sum.comparisons > 0);
  CHECK(sum.violations == 0);
  CHECK(sum.errors == 0);
  cfg.threads = 1;
  REQUIRE(latdet_run_trials(&cfg, LATDET_FORMAT_CSV, &s, &sum) == LATDET_OK);
  CHECK(take(s) == parallel);

  cfg.delta = "99/100";
  REQUIRE(latdet_run_trials(&cfg, LATDET_FORMAT_JSON, &s, &sum) == LATDET_OK);
  CHECK(sum.errors == 6);
  CHECK(take(s).find("DELTA_MISMATCH") != std::string::npos);

  cfg.delta = nullptr;
  cfg.checks = "T1_1,NOPE";
  CHECK(latdet_run_trials(&cfg, LATDET_FORMAT_JSON, &s, &sum) == LATDET_ERR_INVALID_ARGUMENT);
}
