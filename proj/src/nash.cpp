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

#include "insuperable/nash.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "insuperable/linprog.hpp"
#include "insuperable/polytope.hpp"

namespace insuperable {

std::string to_string(EquilibriumKind k) {
  return k == EquilibriumKind::kPure ? "pure" : "mixed";
}

namespace {

// (A y)_i for every i and (B x)_j for every j.
RationalVector a_payoffs(const BimatrixGame& g, const MixedStrategy& y) {
  return g.a().apply(y.weights());
}
RationalVector b_payoffs(const BimatrixGame& g, const MixedStrategy& x) {
  return g.b().apply(x.weights());
}

Rational max_of(const RationalVector& v) { return *std::max_element(v.begin(), v.end()); }

std::vector<std::size_t> argmax(const RationalVector& v) {
  const Rational best = max_of(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == best) out.push_back(i);
  }
  return out;
}

// Strategies of `own` dimension supported on `support`, against which the
// opponent (payoff matrix `opp`, rows = opponent strategies) is indifferent
// on `indiff` and weakly prefers it elsewhere. Variables: strategy, then level.
Polyhedron best_response_polytope(const Matrix& opp, const std::vector<bool>& support,
                                  const std::vector<bool>& indiff) {
  const std::size_t k = opp.cols();
  Polyhedron p(k + 1);
  RationalVector ones(k + 1, Rational(1));
  ones[k] = 0;
  p.add_equality(std::move(ones), 1);
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector e(k + 1);
    e[i] = 1;
    if (support[i]) {
      p.add_inequality(std::move(e), 0);
    } else {
      p.add_equality(std::move(e), 0);
    }
  }
  for (std::size_t j = 0; j < opp.rows(); ++j) {
    RationalVector r(k + 1);
    for (std::size_t i = 0; i < k; ++i) r[i] = -opp(j, i);
    r[k] = 1;  // level - (opp s)_j
    if (indiff[j]) {
      p.add_equality(std::move(r), 0);
    } else {
      p.add_inequality(std::move(r), 0);
    }
  }
  return p;
}

std::vector<MixedStrategy> strategies_of(const Polyhedron& p) {
  std::vector<MixedStrategy> out;
  for (RationalVector v : enumerate_vertices(p)) {
    v.pop_back();
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<bool> mask(std::size_t bits, std::size_t k) {
  std::vector<bool> m(k);
  for (std::size_t i = 0; i < k; ++i) m[i] = (bits >> i) & 1U;
  return m;
}

EquilibriumProfile make_profile(const BimatrixGame& game, MixedStrategy x, MixedStrategy y) {
  PayoffPair pp = payoffs(game, x, y);
  const bool pure = x.is_pure() && y.is_pure();
  const bool strict = pure && is_strict_nash(game, x, y);
  const bool uneven = x.support().size() != y.support().size();
  return EquilibriumProfile{std::move(x),   std::move(y),
                            std::move(pp.a), std::move(pp.b),
                            pure ? EquilibriumKind::kPure : EquilibriumKind::kMixed,
                            strict,         uneven};
}

}  // namespace

bool is_nash(const BimatrixGame& game, const MixedStrategy& x, const MixedStrategy& y) {
  if (x.dimension() != game.n() || y.dimension() != game.m()) {
    throw DimensionError("is_nash: strategy dimensions do not match the game");
  }
  const RationalVector ay = a_payoffs(game, y);
  const RationalVector bx = b_payoffs(game, x);
  return dot(x.weights(), ay) == max_of(ay) && dot(y.weights(), bx) == max_of(bx);
}

bool is_strict_nash(const BimatrixGame& game, const MixedStrategy& x,
                    const MixedStrategy& y) {
  if (!x.is_pure() || !y.is_pure() || !is_nash(game, x, y)) return false;
  return argmax(a_payoffs(game, y)).size() == 1 && argmax(b_payoffs(game, x)).size() == 1;
}

std::vector<EquilibriumProfile> pure_nash(const BimatrixGame& game) {
  std::vector<EquilibriumProfile> out;
  for (std::size_t i = 0; i < game.n(); ++i) {
    for (std::size_t j = 0; j < game.m(); ++j) {
      MixedStrategy x = MixedStrategy::pure(game.n(), i);
      MixedStrategy y = MixedStrategy::pure(game.m(), j);
      if (is_nash(game, x, y)) out.push_back(make_profile(game, std::move(x), std::move(y)));
    }
  }
  return out;
}

SupportEnumeration mixed_nash_support_enumeration(const BimatrixGame& game,
                                                  std::size_t cap) {
  const std::size_t n = game.n();
  const std::size_t m = game.m();
  if (n > cap || m > cap) {
    throw CapError("support enumeration: game is " + std::to_string(n) + "x" +
                   std::to_string(m) + ", cap is " + std::to_string(cap));
  }
  SupportEnumeration res;
  std::map<std::pair<MixedStrategy, MixedStrategy>, bool> found;  // -> degenerate
  for (std::size_t ib = 1; ib < (std::size_t{1} << n); ++ib) {
    const std::vector<bool> in_i = mask(ib, n);
    for (std::size_t jb = 1; jb < (std::size_t{1} << m); ++jb) {
      const std::vector<bool> in_j = mask(jb, m);
      const auto xs = strategies_of(best_response_polytope(game.b(), in_i, in_j));
      if (xs.empty()) continue;
      const auto ys = strategies_of(best_response_polytope(game.a(), in_j, in_i));
      if (ys.empty()) continue;
      const bool several = xs.size() > 1 || ys.size() > 1;
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          auto [it, inserted] = found.emplace(std::make_pair(x, y), several);
          if (!inserted) it->second = it->second || several;
        }
      }
    }
  }
  for (auto& [xy, several] : found) {
    EquilibriumProfile p = make_profile(game, xy.first, xy.second);
    p.degenerate = p.degenerate || several;
    res.degenerate = res.degenerate || p.degenerate;
    res.equilibria.push_back(std::move(p));
  }
  return res;
}

bool is_nash_strategy(const BimatrixGame& game, Player player, const MixedStrategy& s) {
  // Player A with x: B's mix must sit on B's best responses to x, and must make
  // every pure strategy in supp(x) a best response for A. Symmetric for B.
  const bool is_a = player == Player::kA;
  if (s.dimension() != game.dimension(player)) {
    throw DimensionError("is_nash_strategy: strategy dimension mismatch");
  }
  const Matrix& own = is_a ? game.a() : game.b();  // own payoffs, rows = own strategies
  const RationalVector opp_payoffs = is_a ? b_payoffs(game, s) : a_payoffs(game, s);
  const std::vector<std::size_t> br = argmax(opp_payoffs);
  const std::size_t k = own.cols();
  std::vector<bool> allowed(k, false);
  for (std::size_t j : br) allowed[j] = true;

  LinearProgram lp(k + 1);
  lp.bounds[k] = Bound::kFree;
  RationalVector ones(k + 1, Rational(1));
  ones[k] = 0;
  lp.add_row(std::move(ones), Sense::kEqual, 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (allowed[j]) continue;
    RationalVector e(k + 1);
    e[j] = 1;
    lp.add_row(std::move(e), Sense::kEqual, 0);
  }
  for (std::size_t i = 0; i < own.rows(); ++i) {
    RationalVector r = own.row(i);
    r.push_back(-1);
    lp.add_row(std::move(r), s[i].sign() > 0 ? Sense::kEqual : Sense::kLessEqual, 0);
  }
  return solve_lp(lp).status == LpStatus::kOptimal;
}

ComparisonReport nash_vs_insuperable(const BimatrixGame& game, std::size_t nash_cap,
                                     std::size_t vertex_cap) {
  ComparisonReport r;
  r.insuperable = classify(game);
  r.nash = mixed_nash_support_enumeration(game, nash_cap);
  const NetPayoffMatrix l = net_payoff(game);
  for (const auto& e : r.nash.equilibria) {
    EquilibriumFlag f;
    f.x_insuperable = check_insuperable(l, Player::kA, e.x) != Insuperability::kNotInsuperable;
    f.y_insuperable = check_insuperable(l, Player::kB, e.y) != Insuperability::kNotInsuperable;
    r.some_nash_strategy_insuperable =
        r.some_nash_strategy_insuperable || f.x_insuperable || f.y_insuperable;
    r.nash_flags.push_back(f);
  }
  for (Player p : {Player::kA, Player::kB}) {
    auto& dest = p == Player::kA ? r.a_vertices : r.b_vertices;
    for (auto& v : insuperable_vertices(game, p, vertex_cap)) {
      const bool nash = is_nash_strategy(game, p, v);
      r.some_insuperable_strategy_nash = r.some_insuperable_strategy_nash || nash;
      dest.push_back({std::move(v), nash});
    }
    auto& pure = p == Player::kA ? r.a_pure_insuperable : r.b_pure_insuperable;
    for (std::size_t i = 0; i < game.dimension(p); ++i) {
      const auto e = MixedStrategy::pure(game.dimension(p), i);
      if (check_insuperable(l, p, e) != Insuperability::kNotInsuperable) pure.push_back(i);
    }
  }
  // An insuperable strategy used in an equilibrium is itself a Nash strategy.
  r.some_insuperable_strategy_nash =
      r.some_insuperable_strategy_nash || r.some_nash_strategy_insuperable;
  return r;
}

}  // namespace insuperable
