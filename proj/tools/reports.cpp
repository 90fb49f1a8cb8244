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

#include "reports.hpp"

namespace insuperable::cli {

using io::put;

Json strategy_json(const BimatrixGame& g, Player p, const MixedStrategy& s) {
  Json out;
  put(out, "weights", s.weights());
  Json support = Json::array();
  for (std::size_t i : s.support()) support.push_back(g.label(p, i));
  out["support"] = support;
  return out;
}

Json insuperable_json(const BimatrixGame& g, const InsuperableReport& r) {
  Json out;
  put(out, "value", r.value);
  out["value_sign"] = to_string(r.value_sign);
  out["A_insuperable"] =
      r.a_insuperable ? strategy_json(g, Player::kA, *r.a_insuperable) : Json(nullptr);
  out["B_insuperable"] =
      r.b_insuperable ? strategy_json(g, Player::kB, *r.b_insuperable) : Json(nullptr);
  out["A_strict"] = r.a_strict;
  out["B_strict"] = r.b_strict;
  out["pair_exists"] = r.pair_exists;
  return out;
}

Json equilibrium_json(const BimatrixGame& g, const EquilibriumProfile& e) {
  Json out;
  out["x"] = strategy_json(g, Player::kA, e.x);
  out["y"] = strategy_json(g, Player::kB, e.y);
  put(out, "payoff_A", e.payoff_a);
  put(out, "payoff_B", e.payoff_b);
  out["kind"] = to_string(e.kind);
  out["strict"] = e.strict;
  out["degenerate"] = e.degenerate;
  return out;
}

namespace {

Json vertex_flags_json(const BimatrixGame& g, Player p, const std::vector<VertexFlag>& v) {
  Json out = Json::array();
  for (const VertexFlag& f : v) {
    Json j = strategy_json(g, p, f.strategy);
    j["nash_strategy"] = f.nash;
    out.push_back(j);
  }
  return out;
}

Json labels_json(const BimatrixGame& g, Player p, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(g.label(p, i));
  return out;
}

}  // namespace

Json comparison_json(const BimatrixGame& g, const ComparisonReport& c) {
  Json out;
  Json flags = Json::array();
  for (const EquilibriumFlag& f : c.nash_flags) {
    flags.push_back({{"x_insuperable", f.x_insuperable}, {"y_insuperable", f.y_insuperable}});
  }
  out["equilibrium_flags"] = flags;
  out["A_insuperable_vertices"] = vertex_flags_json(g, Player::kA, c.a_vertices);
  out["B_insuperable_vertices"] = vertex_flags_json(g, Player::kB, c.b_vertices);
  out["A_pure_insuperable"] = labels_json(g, Player::kA, c.a_pure_insuperable);
  out["B_pure_insuperable"] = labels_json(g, Player::kB, c.b_pure_insuperable);
  out["some_nash_strategy_insuperable"] = c.some_nash_strategy_insuperable;
  out["some_insuperable_strategy_nash"] = c.some_insuperable_strategy_nash;
  return out;
}

Json analyze_json(const BimatrixGame& g, std::size_t nash_cap, std::size_t vertex_cap) {
  const ComparisonReport c = nash_vs_insuperable(g, nash_cap, vertex_cap);
  Json out;
  out["game"] = io::game_to_json(g);
  out["symmetric"] = g.symmetric();
  put(out, "L", net_payoff(g).matrix());
  out["insuperable"] = insuperable_json(g, c.insuperable);
  Json eq = Json::array();
  for (const auto& e : c.nash.equilibria) eq.push_back(equilibrium_json(g, e));
  out["nash"] = {{"equilibria", eq}, {"degenerate", c.nash.degenerate}};
  out["comparison"] = comparison_json(g, c);
  return out;
}

Json scan_json(const ScanResult& scan, bool weak) {
  Json out;
  out["weak_selection"] = weak;
  Json rows = Json::array();
  for (const ScanRow& r : scan.rows) {
    Json j;
    j["N"] = r.n;
    j["valid"] = r.valid;
    if (r.valid) {
      put(j, "F1", r.f1);
      put(j, "neutral", r.neutral);
      j["delta_sign"] = r.delta_sign;
    } else {
      j["note"] = r.note;
    }
    rows.push_back(j);
  }
  out["rows"] = rows;
  out["N_c"] = scan.n_c ? Json(*scan.n_c) : Json(nullptr);
  return out;
}

Json fixation_json(const FixationVector& f) {
  Json out;
  out["N"] = f.n;
  put(out, "F", f.f);
  return out;
}

Json critical_json(const CriticalSizes& c) {
  Json out;
  put(out, "N_inf", c.n_inf);
  put(out, "N_sup", c.n_sup);
  return out;
}

Json nplayer_report_json(const NPlayerReport& r) {
  return {{"A_insuperable", r.a_insuperable},
          {"B_insuperable", r.b_insuperable},
          {"A_strictly_insuperable", r.a_strictly_insuperable},
          {"B_strictly_insuperable", r.b_strictly_insuperable},
          {"A_dominates", r.a_dominates},
          {"B_dominates", r.b_dominates},
          {"A_strictly_dominates", r.a_strictly_dominates},
          {"B_strictly_dominates", r.b_strictly_dominates}};
}

Json reduction_json(const ReductionResult& r) {
  Json out;
  out["reducible"] = r.reducible;
  if (r.two_player) {
    put(out, "A", r.two_player->a());
    put(out, "B", r.two_player->b());
  }
  return out;
}

Json propagation_json(const PropagationReport& r) {
  Json out;
  out["applicable"] = r.applicable;
  if (!r.applicable) {
    out["reason"] = r.reason;
    return out;
  }
  put(out, "b2", r.b2);
  put(out, "a0", r.a0);
  put(out, "a1", r.a1);
  put(out, "a2", r.a2);
  out["b2_le_a1"] = r.b2_le_a1;
  out["a1_is_midpoint"] = r.a1_is_midpoint;
  out["a0_ge_2b2_minus_a2"] = r.a0_ge_2b2_minus_a2;
  out["bound_ge_b2"] = r.bound_ge_b2;
  out["reduced_A_insuperable"] = r.reduced_a_insuperable;
  out["chain_holds"] = r.chain_holds;
  return out;
}

Json market_report_json(const OnePeriodMarket& m) {
  Json out;
  out["market"] = io::market_to_json(m);
  const auto pi = find_state_price_vector(m);
  if (pi) {
    put(out, "state_price_vector", *pi);
  } else {
    out["state_price_vector"] = nullptr;
  }
  const auto arb = find_arbitrage(m);
  if (arb) {
    Json a;
    put(a, "theta", arb->theta);
    a["kind"] = to_string(arb->kind);
    put(a, "cost", dot(arb->theta, m.p));
    put(a, "payoff", m.d.apply_left(arb->theta));
    out["arbitrage"] = a;
  } else {
    out["arbitrage"] = nullptr;
  }
  const TrivialOutcomeReport t = trivial_outcome_check(m);
  Json tj;
  put(tj, "value", t.value);
  tj["value_sign"] = to_string(t.value_sign);
  tj["no_strict_insuperable"] = t.no_strict_insuperable;
  tj["all_insuperable_trivial"] = t.all_insuperable_trivial;
  tj["price_structured"] = t.price_structured;
  tj["verdict_no_arbitrage"] = t.verdict_no_arbitrage;
  tj["p_aware_no_arbitrage"] = t.p_aware_no_arbitrage;
  tj["vertex_count"] = t.vertex_count;
  out["trivial_outcome"] = tj;
  out["cross_check"] = {{"verdict_no_arbitrage", t.verdict_no_arbitrage},
                        {"arbitrage_absent", !arb.has_value()},
                        {"agree", t.verdict_no_arbitrage == !arb.has_value()},
                        {"price_structured", t.price_structured},
                        {"p_aware_agree", t.p_aware_no_arbitrage == !arb.has_value()}};
  return out;
}

Json tournament_summary_json(const TournamentTrace& t, bool survivors_ok) {
  const UltimatumConfig& c = t.config;
  Json out;
  out["M"] = c.max_offer;
  out["copies_per_strategy"] = c.copies_per_strategy;
  out["roles"] = to_string(c.roles);
  out["thresholds"] = to_string(c.thresholds);
  out["seed"] = c.seed;
  out["step_budget"] = c.steps;
  out["steps_run"] = t.steps_run;
  out["termination"] = to_string(t.termination);
  const std::vector<long> offers = c.offers();
  const std::vector<long> thresholds = c.threshold_values();
  Json survivors = Json::array();
  long population = 0;
  const Snapshot& last = t.snapshots.back();
  for (std::size_t a = 0; a < offers.size(); ++a) {
    for (std::size_t b = 0; b < thresholds.size(); ++b) {
      const long n = last.counts[a * thresholds.size() + b];
      population += n;
      if (n > 0) survivors.push_back({{"m", offers[a]}, {"m_prime", thresholds[b]}, {"count", n}});
    }
  }
  out["population"] = population;
  out["survivors"] = survivors;
  out["survivors_within_bounds"] = survivors_ok;
  return out;
}

}  // namespace insuperable::cli
