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

#include "insuperable/market.hpp"

#include <utility>

#include "insuperable/linprog.hpp"
#include "insuperable/polytope.hpp"

namespace insuperable {

OnePeriodMarket::OnePeriodMarket(Matrix cash_flows, RationalVector prices)
    : d(std::move(cash_flows)), p(std::move(prices)) {
  if (d.empty()) throw DimensionError("market needs at least one asset and one state");
  if (p.size() != d.rows()) {
    throw DimensionError("market: price vector has length " + std::to_string(p.size()) +
                         ", expected " + std::to_string(d.rows()));
  }
}

NetPayoffMatrix OnePeriodMarket::trader_net_payoff() const {
  return NetPayoffMatrix(d.transpose());
}

std::string to_string(ArbitrageKind k) {
  return k == ArbitrageKind::kGainAtZeroCost ? "gain_at_zero_cost"
                                             : "negative_cost_no_downside";
}

std::optional<RationalVector> find_state_price_vector(const OnePeriodMarket& mkt) {
  const std::size_t m = mkt.assets();
  const std::size_t n = mkt.states();
  // Variables pi_1..pi_n and s, all free: maximize s, D pi = p, pi_j >= s.
  LinearProgram lp(n + 1, Bound::kFree);
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row = mkt.d.row(i);
    row.push_back(0);
    lp.add_row(std::move(row), Sense::kEqual, mkt.p[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(n + 1);
    row[j] = 1;
    row[n] = -1;
    lp.add_row(std::move(row), Sense::kGreaterEqual, 0);
  }
  const LpOutcome out = solve_lp(lp);
  RationalVector pi;
  if (out.status == LpStatus::kOptimal) {
    if (out.optimal_value.sign() <= 0) return std::nullopt;
    pi.assign(out.solution.begin(), out.solution.end() - 1);
  } else if (out.status == LpStatus::kUnbounded) {
    // The ray has D d = 0 and d_pi >= d_s > 0; step along it until every
    // component is at least 1.
    Rational t;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational need = (Rational(1) - out.solution[j]) / out.ray[j];
      if (need > t) t = need;
    }
    pi.resize(n);
    for (std::size_t j = 0; j < n; ++j) pi[j] = out.solution[j] + t * out.ray[j];
  } else {
    return std::nullopt;
  }
  return pi;
}

namespace {

// Rows thetaᵀD >= 0 and sum(theta) = 1 over theta >= 0.
LinearProgram cone_program(const OnePeriodMarket& mkt) {
  const std::size_t m = mkt.assets();
  LinearProgram lp(m);
  for (std::size_t j = 0; j < mkt.states(); ++j) {
    lp.add_row(mkt.d.col(j), Sense::kGreaterEqual, 0);
  }
  lp.add_row(RationalVector(m, Rational(1)), Sense::kEqual, 1);
  return lp;
}

}  // namespace

std::optional<Arbitrage> find_arbitrage(const OnePeriodMarket& mkt) {
  const std::size_t m = mkt.assets();
  {
    LinearProgram lp = cone_program(mkt);
    for (std::size_t i = 0; i < m; ++i) lp.objective[i] = -mkt.p[i];
    const LpOutcome out = solve_lp(lp);
    if (out.status == LpStatus::kOptimal && out.optimal_value.sign() > 0) {
      return Arbitrage{out.solution, ArbitrageKind::kNegativeCostNoDownside};
    }
  }
  {
    LinearProgram lp = cone_program(mkt);
    lp.add_row(mkt.p, Sense::kLessEqual, 0);
    for (std::size_t i = 0; i < m; ++i) lp.objective[i] = sum(mkt.d.row(i));
    const LpOutcome out = solve_lp(lp);
    if (out.status == LpStatus::kOptimal && out.optimal_value.sign() > 0) {
      return Arbitrage{out.solution, ArbitrageKind::kGainAtZeroCost};
    }
  }
  return std::nullopt;
}

bool is_arbitrage(const OnePeriodMarket& mkt, const RationalVector& theta) {
  if (theta.size() != mkt.assets()) {
    throw DimensionError("portfolio has " + std::to_string(theta.size()) + " entries, market has " +
                         std::to_string(mkt.assets()) + " assets");
  }
  bool any_positive = false;
  for (const auto& t : theta) {
    if (t.sign() < 0) return false;
  }
  for (const Rational& v : mkt.d.apply_left(theta)) {
    if (v.sign() < 0) return false;
    if (v.sign() > 0) any_positive = true;
  }
  const int cost = dot(theta, mkt.p).sign();
  return cost < 0 || (cost == 0 && any_positive);
}

TrivialOutcomeReport trivial_outcome_check(const OnePeriodMarket& mkt) {
  const std::size_t m = mkt.assets();
  const std::size_t n = mkt.states();
  TrivialOutcomeReport r;
  const GameValueResult v = zero_sum_value(mkt.trader_net_payoff());
  r.value = v.value;
  r.value_sign = sign_of(v.value);
  r.no_strict_insuperable = r.value_sign != ValueSign::kPositive;

  if (r.value_sign == ValueSign::kNegative) {
    r.all_insuperable_trivial = true;  // no insuperable strategy at all
  } else if (r.value_sign == ValueSign::kZero) {
    r.all_insuperable_trivial = true;
    for (std::size_t j = 0; j < n && r.all_insuperable_trivial; ++j) {
      LinearProgram lp = cone_program(mkt);
      lp.objective = mkt.d.col(j);
      const LpOutcome out = solve_lp(lp);
      r.all_insuperable_trivial = out.status == LpStatus::kOptimal && out.optimal_value.is_zero();
    }
  }

  r.verdict_no_arbitrage = r.all_insuperable_trivial;

  {
    LinearProgram lp(n);
    for (std::size_t i = 0; i < m; ++i) lp.add_row(mkt.d.row(i), Sense::kEqual, -mkt.p[i]);
    r.price_structured = solve_lp(lp).status == LpStatus::kOptimal;
  }

  Polyhedron s(m);
  s.add_equality(RationalVector(m, Rational(1)), 1);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m);
    e[i] = 1;
    s.add_inequality(std::move(e), 0);
  }
  for (std::size_t j = 0; j < n; ++j) s.add_inequality(mkt.d.col(j), 0);
  const auto vertices = enumerate_vertices(s);
  r.vertex_count = vertices.size();
  r.p_aware_no_arbitrage = true;
  for (const auto& vx : vertices) {
    const int cost = dot(mkt.p, vx).sign();
    bool trivial = true;
    for (const Rational& c : mkt.d.apply_left(vx)) trivial = trivial && c.is_zero();
    if (cost < 0 || (cost == 0 && !trivial)) {
      r.p_aware_no_arbitrage = false;
      break;
    }
  }
  return r;
}

}  // namespace insuperable
