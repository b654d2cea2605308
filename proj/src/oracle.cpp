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

#include "latdet/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "latdet/lll.hpp"

namespace latdet {

namespace {

void check_dim(const Basis& basis, const EnumBudget& budget) {
  if (basis.size() > budget.max_dim)
    throw Error(ErrorCode::BudgetExceeded, "lattice rank exceeds the enumeration cap");
}

// Depth-first enumeration of coefficient vectors x with
// sum_i q_i (x_i + sum_{j>i} mu_ji x_j)^2 <= radius, last level first.
class Enumerator {
 public:
  Enumerator(const Basis& reduced, Rational radius, const EnumBudget& budget)
      : basis_(reduced), g_(gso(reduced)), radius_(std::move(radius)), budget_(budget),
        x_(reduced.size()) {}

  std::vector<IntVector> run() {
    if (radius_ > 0) descend(basis_.size(), Rational(0));
    std::sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    std::vector<IntVector> out;
    out.reserve(found_.size());
    for (auto& f : found_) out.push_back(std::move(f.second));
    return out;
  }

 private:
  void descend(std::size_t level, const Rational& partial) {
    if (++nodes_ > 16 * budget_.max_vectors)
      throw Error(ErrorCode::BudgetExceeded, "enumeration node budget exhausted");
    if (level == 0) {
      emit();
      return;
    }
    const std::size_t i = level - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < x_.size(); ++j) center -= g_.mu[j][i] * x_[j];
    const Rational slack = radius_ - partial;

    auto cost = [&](const Integer& x) {
      Rational y = x - center;
      return Rational(g_.qstar[i] * y * y);
    };
    const Integer start = round_half_toward_zero(center);
    for (Integer x = start;; ++x) {
      Rational c = cost(x);
      if (c > slack) break;
      x_[i] = x;
      descend(level - 1, partial + c);
    }
    for (Integer x = start - 1;; --x) {
      Rational c = cost(x);
      if (c > slack) break;
      x_[i] = x;
      descend(level - 1, partial + c);
    }
    x_[i] = 0;
  }

  void emit() {
    const std::size_t m = basis_.dim();
    IntVector v(m);
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (x_[i] == 0) continue;
      for (std::size_t c = 0; c < m; ++c) v[c] += x_[i] * basis_[i][c];
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
    if (lead == v.end() || *lead < 0) return;
    if (found_.size() >= budget_.max_vectors)
      throw Error(ErrorCode::BudgetExceeded, "more short vectors than the budget allows");
    Integer norm = squared_norm(std::span<const Integer>(v));
    found_.emplace_back(std::move(norm), std::move(v));
  }

  const Basis& basis_;
  GsoData g_;
  Rational radius_;
  const EnumBudget& budget_;
  std::vector<Integer> x_;
  std::uint64_t nodes_ = 0;
  std::vector<std::pair<Integer, IntVector>> found_;
};

// Visits every linearly independent k-subset (increasing indices) of a
// family given by its integer Gram matrix, together with the subset's Gram
// determinant. Fraction-free (Bareiss) elimination keeps, for every remaining
// candidate c, the value det Gram(chosen + c), so the leaf value is read off
// and dependent candidates are skipped. visit returns false to stop early.
class SubsetSearch {
 public:
  using Visit = std::function<bool(const std::vector<std::size_t>&, const Integer&)>;

  SubsetSearch(std::size_t k, std::uint64_t max_nodes, const char* budget_message, Visit visit)
      : k_(k), max_nodes_(max_nodes), message_(budget_message), visit_(std::move(visit)) {}

  void run(const IntMatrix& gram) {
    std::vector<std::size_t> all(gram.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (k_ == 1) {
      IntMatrix diag(all.size(), 1);
      for (std::size_t i = 0; i < all.size(); ++i) diag(i, 0) = gram(i, i);
      level(all, diag, true, Integer(1));
    } else {
      level(all, gram, false, Integer(1));
    }
  }

 private:
  void level(const std::vector<std::size_t>& cand, const IntMatrix& a, bool diag_only, const Integer& prev) {
    const std::size_t r = cand.size();
    for (std::size_t pi = 0; pi < r && !stop_; ++pi) {
      if (++nodes_ > max_nodes_) throw Error(ErrorCode::BudgetExceeded, message_);
      const Integer& piv = diag_only ? a(pi, 0) : a(pi, pi);
      if (piv == 0) continue;
      chosen_.push_back(cand[pi]);
      if (chosen_.size() == k_) {
        if (!visit_(chosen_, piv)) stop_ = true;
      } else if (r - pi - 1 >= k_ - chosen_.size()) {
        const std::size_t rc = r - pi - 1;
        const bool last = chosen_.size() + 1 == k_;
        IntMatrix next(rc, last ? 1 : rc);
        std::vector<std::size_t> rest(cand.begin() + static_cast<std::ptrdiff_t>(pi) + 1, cand.end());
        for (std::size_t ci = 0; ci < rc; ++ci) {
          const std::size_t c = pi + 1 + ci;
          for (std::size_t xi = ci; xi < (last ? ci + 1 : rc); ++xi) {
            const std::size_t x = pi + 1 + xi;
            Integer& out = next(ci, last ? 0 : xi);
            out = piv * a(c, x) - a(c, pi) * a(pi, x);
            mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), prev.get_mpz_t());
            if (!last && xi != ci) next(xi, ci) = out;
          }
        }
        level(rest, next, last, piv);
      }
      chosen_.pop_back();
    }
  }

  std::size_t k_;
  std::uint64_t max_nodes_;
  const char* message_;
  Visit visit_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

Integer max_squared_norm(const Basis& basis) {
  Integer best = 0;
  for (const auto& v : basis.vectors()) best = std::max(best, squared_norm(std::span<const Integer>(v)));
  return best;
}

}  // namespace

std::vector<IntVector> enumerate_short_vectors(const Basis& basis, const Rational& radius_sq,
                                               const EnumBudget& budget) {
  check_dim(basis, budget);
  const Basis reduced = lll_reduce(basis).reduced;
  return Enumerator(reduced, radius_sq, budget).run();
}

MinimaResult successive_minima(const Basis& basis, std::size_t k, const EnumBudget& budget) {
  check_dim(basis, budget);
  if (k < 1 || k > basis.size()) throw Error(ErrorCode::InvalidArgument, "k out of range");
  const Basis reduced = lll_reduce(basis).reduced;
  // The reduced basis itself supplies n independent vectors within this radius.
  Rational radius = budget.radius_sq > 0 ? budget.radius_sq : Rational(max_squared_norm(reduced));
  for (;;) {
    const std::vector<IntVector> vecs = Enumerator(reduced, radius, budget).run();
    MinimaResult out;
    for (const auto& v : vecs) {
      out.witnesses.push_back(v);
      if (rank(out.witnesses) < out.witnesses.size()) {
        out.witnesses.pop_back();
        continue;
      }
      out.lambda_sq.push_back(squared_norm(std::span<const Integer>(v)));
      if (out.witnesses.size() == k) return out;
    }
    radius *= 2;
  }
}

Integer min_subdet_bruteforce(const Basis& basis, std::size_t k, const EnumBudget& budget) {
  check_dim(basis, budget);
  if (k < 1 || k > basis.size()) throw Error(ErrorCode::InvalidArgument, "k out of range");
  const Rational radius = budget.radius_sq > 0 ? budget.radius_sq
                                               : Rational(successive_minima(basis, k, budget).lambda_sq.back());
  const std::vector<IntVector> vecs = enumerate_short_vectors(basis, radius, budget);
  // Any n independent lattice vectors span a sublattice of index >= 1.
  const std::optional<Integer> floor =
      k == basis.size() ? std::optional<Integer>(det_squared(basis.vectors())) : std::nullopt;
  std::optional<Integer> best;
  SubsetSearch search(k, 16 * budget.max_vectors, "subset budget exhausted",
                      [&](const std::vector<std::size_t>&, const Integer& det) {
                        if (!best || det < *best) best = det;
                        return !(floor && *best == *floor);
                      });
  search.run(gram_matrix(vecs));
  if (!best) throw Error(ErrorCode::BudgetExceeded, "radius too small for k independent vectors");
  return *best;
}

std::uint64_t enumerate_d_sets(const Basis& basis, std::size_t k, std::int64_t coeff_bound,
                               const DSetSink& sink, std::uint64_t max_sets) {
  const std::size_t n = basis.size();
  if (coeff_bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be positive");
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "k out of range");

  // Nonzero columns of [-b, b]^n in lexicographic order.
  std::vector<IntVector> cols;
  std::vector<std::int64_t> digits(n, -coeff_bound);
  for (;;) {
    if (std::any_of(digits.begin(), digits.end(), [](std::int64_t d) { return d != 0; })) {
      IntVector c;
      c.reserve(n);
      for (auto d : digits) c.emplace_back(static_cast<long>(d));
      cols.push_back(std::move(c));
    }
    std::size_t p = n;
    while (p > 0 && digits[p - 1] == coeff_bound) digits[--p] = -coeff_bound;
    if (p == 0) break;
    ++digits[p - 1];
  }

  // Lattice vector of every column, computed once; a d-set is a choice of
  // columns.
  std::vector<IntVector> images;
  images.reserve(cols.size());
  for (const auto& c : cols) images.push_back(combine(basis.vectors(), IntMatrix::from_columns(std::span(&c, 1)))[0]);

  std::uint64_t emitted = 0;
  IntMatrix v(n, k);
  std::vector<IntVector> d(k);
  SubsetSearch search(k, max_sets, "d-set budget exhausted", [&](const std::vector<std::size_t>& chosen, const Integer&) {
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t r = 0; r < n; ++r) v(r, c) = cols[chosen[c]][r];
      d[c] = images[chosen[c]];
    }
    sink(v, d);
    ++emitted;
    return true;
  });
  search.run(gram_matrix(cols));
  return emitted;
}

}  // namespace latdet
