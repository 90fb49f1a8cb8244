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

// One-period market with m assets and n states. D (m x n) holds the time-1
// cash flows, p (length m) the time-0 prices. Portfolios are long-only
// (theta >= 0). Viewed as a game, the trader picks theta and receives the
// state-wise cash flow thetaᵀD, so the trader's net payoff matrix is Dᵀ.

#ifndef INSUPERABLE_MARKET_HPP_
#define INSUPERABLE_MARKET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "insuperable/insuperable.hpp"
#include "insuperable/matrix.hpp"

namespace insuperable {

struct OnePeriodMarket {
  Matrix d;
  RationalVector p;

  OnePeriodMarket(Matrix cash_flows, RationalVector prices);
  std::size_t assets() const { return d.rows(); }
  std::size_t states() const { return d.cols(); }
  // Dᵀ as a net payoff matrix (states x assets).
  NetPayoffMatrix trader_net_payoff() const;
};

// pi >> 0 with D pi = p, chosen to maximize min_j pi_j when that maximum is
// attained.
std::optional<RationalVector> find_state_price_vector(const OnePeriodMarket& mkt);

enum class ArbitrageKind { kGainAtZeroCost, kNegativeCostNoDownside };

std::string to_string(ArbitrageKind k);

struct Arbitrage {
  RationalVector theta;  // on the simplex
  ArbitrageKind kind;
};

// Negative-cost search first: minimize p·theta subject to thetaᵀD >= 0 on the
// simplex. Then: maximize the total payoff subject to thetaᵀD >= 0 and
// p·theta <= 0. The first strictly improving search supplies the witness.
std::optional<Arbitrage> find_arbitrage(const OnePeriodMarket& mkt);

// Exact re-check of a claimed arbitrage.
bool is_arbitrage(const OnePeriodMarket& mkt, const RationalVector& theta);

struct TrivialOutcomeReport {
  Rational value;  // zero-sum value of Dᵀ
  ValueSign value_sign = ValueSign::kZero;
  bool no_strict_insuperable = false;
  // Every insuperable trader strategy has a zero cash flow in every state.
  bool all_insuperable_trivial = false;
  // p = -D y for some y >= 0: prices induced by a relaxed state price vector
  // of the market player.
  bool price_structured = false;
  // Trivial-outcome verdict: no arbitrage iff every insuperable trader strategy
  // is trivial. It does not look at p, so it can only be right for prices
  // tied to D; for structured p it agrees with find_arbitrage exactly.
  bool verdict_no_arbitrage = false;
  // A verdict that does use p: for every vertex v of the insuperable set
  // {theta in simplex : thetaᵀD >= 0}, p·v >= 0, and p·v = 0 forces vᵀD = 0.
  // Equivalent to the absence of arbitrage for every p.
  bool p_aware_no_arbitrage = false;
  std::size_t vertex_count = 0;
};

TrivialOutcomeReport trivial_outcome_check(const OnePeriodMarket& mkt);

}  // namespace insuperable

#endif  // INSUPERABLE_MARKET_HPP_
