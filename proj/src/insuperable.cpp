// Copyright 2026 The Insuperable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "insuperable/insuperable.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

#include "insuperable/linprog.hpp"
#include "insuperable/polytope.hpp"

namespace insuperable {

std::string to_string(ValueSign s) {
  switch (s) {
    case ValueSign::kNegative:
      return "negative";
    case ValueSign::kZero:
      return "zero";
    case ValueSign::kPositive:
      return "positive";
  }
  return "unknown";
}

std::string to_string(Insuperability s) {
  switch (s) {
    case Insuperability::kNotInsuperable:
      return "not_insuperable";
    case Insuperability::kInsuperable:
      return "insuperable";
    case Insuperability::kStrictlyInsuperable:
      return "strictly_insuperable";
  }
  return "unknown";
}

ValueSign sign_of(const Rational& v) {
  const int s = v.sign();
  return s < 0 ? ValueSign::kNegative : (s > 0 ? ValueSign::kPositive : ValueSign::kZero);
}

GameValueResult zero_sum_value(const NetPayoffMatrix& net) {
  const Matrix& l = net.matrix();
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  // Variables x_1..x_n >= 0 and a free t: maximize t with L x >= t 1, 1ᵀx = 1.
  LinearProgram lp(n + 1);
  lp.bounds[n] = Bound::kFree;
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row = l.row(i);
    row.push_back(-1);
    lp.add_row(std::move(row), Sense::kGreaterEqual, 0);
  }
  RationalVector simplex_row(n + 1, Rational(1));
  simplex_row[n] = 0;
  lp.add_row(std::move(simplex_row), Sense::kEqual, 1);

  LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::kOptimal) {
    throw std::logic_error("zero-sum value program not optimal: " + to_string(out.status));
  }
  RationalVector x(out.solution.begin(), out.solution.begin() + static_cast<long>(n));
  // The duals of the >= rows are non-positive and sum to -1; negated they form
  // an optimal strategy for B.
  RationalVector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = -out.certificate[i];
  GameValueResult r{out.optimal_value, MixedStrategy(std::move(x)),
                    MixedStrategy(std::move(y))};
  for (const Rational& v : l.apply(r.maximin_x.weights())) {
    if (v < r.value) throw std::logic_error("zero-sum value: maximin check failed");
  }
  for (const Rational& v : l.apply_left(r.minimax_y.weights())) {
    if (v > r.value) throw std::logic_error("zero-sum value: minimax check failed");
  }
  return r;
}

InsuperableReport classify(const BimatrixGame& game) { return classify(net_payoff(game)); }

InsuperableReport classify(const NetPayoffMatrix& l) {
  GameValueResult v = zero_sum_value(l);
  InsuperableReport rep;
  rep.value = v.value;
  rep.value_sign = sign_of(v.value);
  // Strictness follows from the value alone: a witness x with L x >> 0 has
  // value >= min_i (L x)_i > 0, and conversely for the maximin strategy.
  rep.a_strict = rep.value_sign == ValueSign::kPositive;
  rep.b_strict = rep.value_sign == ValueSign::kNegative;
  rep.pair_exists = rep.value_sign == ValueSign::kZero;
  if (rep.value_sign != ValueSign::kNegative) rep.a_insuperable = std::move(v.maximin_x);
  if (rep.value_sign != ValueSign::kPositive) rep.b_insuperable = std::move(v.minimax_y);
  return rep;
}

Insuperability check_insuperable(const NetPayoffMatrix& l, Player player,
                                 const MixedStrategy& s) {
  const std::size_t dim = player == Player::kA ? l.cols() : l.rows();
  if (s.dimension() != dim) {
    throw DimensionError("check_insuperable: strategy dimension " +
                         std::to_string(s.dimension()) + ", expected " +
                         std::to_string(dim));
  }
  // Orient so that insuperable means every component >= 0.
  RationalVector g = player == Player::kA ? l.matrix().apply(s.weights())
                                          : l.matrix().apply_left(s.weights());
  bool strict = true;
  for (const Rational& v : g) {
    const int sg = player == Player::kA ? v.sign() : -v.sign();
    if (sg < 0) return Insuperability::kNotInsuperable;
    if (sg == 0) strict = false;
  }
  return strict ? Insuperability::kStrictlyInsuperable : Insuperability::kInsuperable;
}

Insuperability check_insuperable(const BimatrixGame& game, Player player,
                                 const MixedStrategy& s) {
  return check_insuperable(net_payoff(game), player, s);
}

std::vector<MixedStrategy> insuperable_vertices(const BimatrixGame& game, Player player,
                                                std::size_t cap) {
  const std::size_t dim = game.dimension(player);
  if (dim > cap) {
    throw CapError("insuperable_vertices: dimension " + std::to_string(dim) +
                   " exceeds cap " + std::to_string(cap));
  }
  const Matrix l = net_payoff(game).matrix();
  Polyhedron p(dim);
  p.add_equality(RationalVector(dim, Rational(1)), 1);
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector e(dim);
    e[i] = 1;
    p.add_inequality(std::move(e), 0);
  }
  if (player == Player::kA) {
    for (std::size_t i = 0; i < l.rows(); ++i) p.add_inequality(l.row(i), 0);
  } else {
    for (std::size_t j = 0; j < l.cols(); ++j) {
      RationalVector c = l.col(j);
      for (auto& v : c) v = -v;
      p.add_inequality(std::move(c), 0);
    }
  }
  std::vector<MixedStrategy> out;
  for (auto& v : enumerate_vertices(p)) out.emplace_back(std::move(v));
  return out;
}

namespace {

// Visits every vector of `parts` non-negative integers summing to `total`,
// starting from (total, 0, ..., 0). Stops early when visit returns false.
void for_each_composition(std::size_t parts, long total,
                          const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> k(parts, 0);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == parts) {
      k[i] = left;
      return visit(k);
    }
    for (long v = left; v >= 0; --v) {
      k[i] = v;
      if (!rec(i + 1, left - v)) return false;
    }
    return true;
  };
  rec(0, total);
}

struct GridScan {
  std::optional<std::vector<long>> witness;
  bool strict = false;
};

// sign_row(i, k) returns the sign of component i of the (oriented) payoff
// advantage at grid point k; the scan looks for a non-negative vector.
template <typename SignFn>
GridScan scan(std::size_t parts, std::size_t comps, long resolution, SignFn sign_row) {
  GridScan s;
  for_each_composition(parts, resolution, [&](const std::vector<long>& k) {
    bool ok = true;
    bool strict = true;
    for (std::size_t i = 0; i < comps && ok; ++i) {
      const int sg = sign_row(i, k);
      if (sg < 0) ok = false;
      if (sg == 0) strict = false;
    }
    if (!ok) return true;
    if (!s.witness) s.witness = k;
    if (strict) {
      s.witness = k;
      s.strict = true;
      return false;
    }
    return true;
  });
  return s;
}

MixedStrategy to_strategy(const std::vector<long>& k, long resolution) {
  RationalVector w;
  w.reserve(k.size());
  for (long v : k) w.emplace_back(static_cast<long long>(v), static_cast<long long>(resolution));
  return MixedStrategy(std::move(w));
}

// L scaled by a positive common denominator, as int64 when every entry and
// every grid dot product provably fits.
std::optional<std::vector<std::vector<std::int64_t>>> integer_form(const Matrix& l,
                                                                   long resolution) {
  mpz_class den = 1;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) {
      const mpq_class q = l(i, j).to_mpq();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  const mpz_class limit = mpz_class(1) << 40;
  std::vector<std::vector<std::int64_t>> out(l.rows(), std::vector<std::int64_t>(l.cols()));
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) {
      const mpq_class q = l(i, j).to_mpq();
      mpz_class v = q.get_num() * (den / q.get_den());
      if (abs(v) >= limit) return std::nullopt;
      out[i][j] = v.get_si();
    }
  }
  if (resolution >= (1L << 20)) return std::nullopt;
  return out;
}

}  // namespace

InsuperableReport brute_force_classify(const NetPayoffMatrix& net, long resolution) {
  if (resolution < 1) throw DomainError("brute_force_classify: resolution must be >= 1");
  const Matrix& l = net.matrix();
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  if (n > kBruteForceMaxDimension || m > kBruteForceMaxDimension) {
    throw CapError("brute_force_classify: dimensions above " +
                   std::to_string(kBruteForceMaxDimension));
  }
  GridScan a;
  GridScan b;
  if (auto li = integer_form(l, resolution)) {
    const auto& t = *li;
    a = scan(n, m, resolution, [&](std::size_t i, const std::vector<long>& k) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += t[i][j] * k[j];
      return s > 0 ? 1 : (s < 0 ? -1 : 0);
    });
    b = scan(m, n, resolution, [&](std::size_t j, const std::vector<long>& k) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < m; ++i) s += t[i][j] * k[i];
      return s < 0 ? 1 : (s > 0 ? -1 : 0);
    });
  } else {
    a = scan(n, m, resolution, [&](std::size_t i, const std::vector<long>& k) {
      Rational s;
      for (std::size_t j = 0; j < n; ++j) s += l(i, j) * Rational(k[j]);
      return s.sign();
    });
    b = scan(m, n, resolution, [&](std::size_t j, const std::vector<long>& k) {
      Rational s;
      for (std::size_t i = 0; i < m; ++i) s += l(i, j) * Rational(k[i]);
      return -s.sign();
    });
  }
  InsuperableReport rep;
  rep.a_strict = a.strict;
  rep.b_strict = b.strict;
  rep.value_sign = a.strict ? ValueSign::kPositive
                            : (b.strict ? ValueSign::kNegative : ValueSign::kZero);
  if (a.witness) rep.a_insuperable = to_strategy(*a.witness, resolution);
  if (b.witness) rep.b_insuperable = to_strategy(*b.witness, resolution);
  rep.pair_exists = a.witness.has_value() && b.witness.has_value();
  return rep;
}

InsuperableReport brute_force_classify(const BimatrixGame& game, long resolution) {
  return brute_force_classify(net_payoff(game), resolution);
}

}  // namespace insuperable
