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

#include "insuperable/sim.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "insuperable/rng.hpp"

namespace insuperable {

std::string to_string(RoleMode m) {
  return m == RoleMode::kSingleRole ? "single_role" : "both_orderings";
}

std::string to_string(ThresholdRange r) {
  return r == ThresholdRange::kFull ? "full" : "interior";
}

std::string to_string(Termination t) {
  return t == Termination::kNeutral ? "neutral" : "step_budget";
}

std::vector<long> UltimatumConfig::offers() const {
  std::vector<long> v;
  for (long m = 0; m <= max_offer; ++m) v.push_back(m);
  return v;
}

std::vector<long> UltimatumConfig::threshold_values() const {
  std::vector<long> v;
  const long lo = thresholds == ThresholdRange::kFull ? 0 : 1;
  const long hi = thresholds == ThresholdRange::kFull ? max_offer + 1 : max_offer;
  for (long t = lo; t <= hi; ++t) v.push_back(t);
  return v;
}

namespace {

struct Strategy {
  long offer;
  long threshold;
};

// Payoffs (donor, receiver) when `donor` proposes to `receiver`.
std::pair<long, long> play(long max_offer, const Strategy& donor, const Strategy& receiver) {
  if (receiver.threshold <= donor.offer) return {max_offer - donor.offer, donor.offer};
  return {0, 0};
}

std::pair<long, long> encounter(const UltimatumConfig& cfg, const Strategy& first,
                                const Strategy& second) {
  auto [p1, p2] = play(cfg.max_offer, first, second);
  if (cfg.roles == RoleMode::kBothOrderings) {
    auto [q2, q1] = play(cfg.max_offer, second, first);
    p1 += q1;
    p2 += q2;
  }
  return {p1, p2};
}

bool all_encounters_tie(const UltimatumConfig& cfg, const std::vector<Strategy>& classes,
                        const std::vector<long>& counts) {
  std::vector<std::size_t> alive;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0) alive.push_back(c);
  }
  for (std::size_t i : alive) {
    for (std::size_t j : alive) {
      if (i == j) continue;
      auto [p1, p2] = encounter(cfg, classes[i], classes[j]);
      if (p1 != p2) return false;
    }
  }
  return true;
}

}  // namespace

TournamentTrace ultimatum_tournament(const UltimatumConfig& cfg) {
  if (cfg.max_offer < 1) throw DomainError("ultimatum tournament needs M >= 1");
  if (cfg.copies_per_strategy < 1) throw DomainError("copies_per_strategy must be >= 1");
  const std::vector<long> offers = cfg.offers();
  const std::vector<long> thresholds = cfg.threshold_values();
  std::vector<Strategy> classes;
  for (long m : offers) {
    for (long t : thresholds) classes.push_back({m, t});
  }
  std::vector<std::size_t> agents;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (long k = 0; k < cfg.copies_per_strategy; ++k) agents.push_back(c);
  }
  if (agents.size() < 2) throw DomainError("ultimatum tournament needs at least 2 individuals");
  std::vector<long> counts(classes.size(), cfg.copies_per_strategy);

  TournamentTrace trace;
  trace.config = cfg;
  trace.snapshots.push_back({0, counts});
  const std::uint64_t pop = agents.size();
  const std::uint64_t check_every = cfg.check_every ? cfg.check_every : pop;
  CounterRng rng(cfg.seed);

  std::uint64_t step = 0;
  bool neutral = all_encounters_tie(cfg, classes, counts);
  while (!neutral && step < cfg.steps) {
    const std::uint64_t i = rng.below(pop);
    std::uint64_t j = rng.below(pop - 1);
    if (j >= i) ++j;
    auto [pi, pj] = encounter(cfg, classes[agents[i]], classes[agents[j]]);
    bool i_wins = pi > pj;
    if (pi == pj) i_wins = rng.coin();
    const std::uint64_t winner = i_wins ? i : j;
    const std::uint64_t loser = i_wins ? j : i;
    --counts[agents[loser]];
    agents[loser] = agents[winner];
    ++counts[agents[loser]];
    ++step;
    if (cfg.snapshot_every && step % cfg.snapshot_every == 0) {
      trace.snapshots.push_back({step, counts});
    }
    if (step % check_every == 0) neutral = all_encounters_tie(cfg, classes, counts);
  }
  if (trace.snapshots.back().step != step) trace.snapshots.push_back({step, counts});
  trace.steps_run = step;
  trace.termination = neutral ? Termination::kNeutral : Termination::kStepBudget;
  return trace;
}

bool survivors_within_bounds(const TournamentTrace& trace) {
  const UltimatumConfig& cfg = trace.config;
  const std::vector<long> offers = cfg.offers();
  const std::vector<long> thresholds = cfg.threshold_values();
  const Snapshot& last = trace.snapshots.back();
  for (std::size_t a = 0; a < offers.size(); ++a) {
    for (std::size_t b = 0; b < thresholds.size(); ++b) {
      if (last.counts[a * thresholds.size() + b] == 0) continue;
      if (2 * offers[a] > cfg.max_offer || 2 * thresholds[b] < cfg.max_offer) return false;
    }
  }
  return true;
}

void write_trace_csv(const TournamentTrace& trace, std::ostream& os) {
  const std::vector<long> offers = trace.config.offers();
  const std::vector<long> thresholds = trace.config.threshold_values();
  os << "step,m,m_prime,count\n";
  for (const Snapshot& s : trace.snapshots) {
    for (std::size_t a = 0; a < offers.size(); ++a) {
      for (std::size_t b = 0; b < thresholds.size(); ++b) {
        os << s.step << ',' << offers[a] << ',' << thresholds[b] << ','
           << s.counts[a * thresholds.size() + b] << '\n';
      }
    }
  }
}

MonteCarloEstimate moran_monte_carlo(const TwoByTwoPayoff& p, long n, long i0,
                                     long replicates, std::uint64_t seed) {
  if (n < 2) throw DomainError("population size N must be >= 2");
  if (i0 < 0 || i0 > n) throw DomainError("initial count i0 must lie in 0..N");
  if (replicates < 1) throw DomainError("replicates must be >= 1");
  // up[i], down[i]: probabilities that one birth-death event moves i by +1, -1.
  std::vector<double> up(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<double> down(static_cast<std::size_t>(n + 1), 0.0);
  for (long i = 1; i < n; ++i) {
    const Rational fa = fitness_a(p, i, n);
    const Rational fb = fitness_b(p, i, n);
    if (fa.sign() <= 0 || fb.sign() < 0) {
      throw DomainError("non-positive fitness at i=" + std::to_string(i) + ", N=" +
                        std::to_string(n));
    }
    const Rational total = Rational(i) * fa + Rational(n - i) * fb;
    const Rational birth_a = Rational(i) * fa / total;
    const Rational nn(n);
    up[static_cast<std::size_t>(i)] = (birth_a * Rational(n - i) / nn).to_double();
    down[static_cast<std::size_t>(i)] =
        ((Rational(1) - birth_a) * Rational(i) / nn).to_double();
  }
  MonteCarloEstimate est;
  est.replicates = replicates;
  est.seed = seed;
  for (long r = 0; r < replicates; ++r) {
    CounterRng rng(seed, static_cast<std::uint64_t>(r));
    long i = i0;
    while (i > 0 && i < n) {
      const double u = rng.uniform();
      const auto k = static_cast<std::size_t>(i);
      if (u < up[k]) {
        ++i;
      } else if (u < up[k] + down[k]) {
        --i;
      }
    }
    if (i == n) ++est.fixations;
  }
  est.rate = static_cast<double>(est.fixations) / static_cast<double>(replicates);
  est.standard_error = std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(replicates));
  return est;
}

}  // namespace insuperable
