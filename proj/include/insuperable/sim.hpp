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

#ifndef INSUPERABLE_SIM_HPP_
#define INSUPERABLE_SIM_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "insuperable/moran.hpp"

namespace insuperable {

enum class RoleMode { kSingleRole, kBothOrderings };
// Receiver thresholds m' range over 0..M+1 (full) or 1..M (interior).
enum class ThresholdRange { kFull, kInterior };
enum class Termination { kNeutral, kStepBudget };

std::string to_string(RoleMode m);
std::string to_string(ThresholdRange r);
std::string to_string(Termination t);

struct UltimatumConfig {
  long max_offer = 20;  // M
  long copies_per_strategy = 1;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t snapshot_every = 0;  // 0: initial and final snapshots only
  RoleMode roles = RoleMode::kSingleRole;
  ThresholdRange thresholds = ThresholdRange::kFull;
  // How often the neutrality test runs; 0 picks the population size.
  std::uint64_t check_every = 0;

  std::vector<long> offers() const;
  std::vector<long> threshold_values() const;
};

struct Snapshot {
  std::uint64_t step = 0;
  std::vector<long> counts;  // offers x thresholds, row-major
};

struct TournamentTrace {
  UltimatumConfig config;
  std::vector<Snapshot> snapshots;
  std::uint64_t steps_run = 0;
  Termination termination = Termination::kStepBudget;
};

// Each step draws an ordered pair of distinct individuals, the first acting
// as donor. An offer m is accepted when m >= m' of the receiver; the donor
// then gets M - m and the receiver m, otherwise both get 0. In both-orderings
// mode the payoffs of the two role assignments are added. The higher payoff
// copies its (m, m') onto the other; ties are broken by a fair coin. The run
// stops early once every encounter between two present classes is a tie.
TournamentTrace ultimatum_tournament(const UltimatumConfig& cfg);

// All classes alive in the last snapshot satisfy m <= M/2 <= m'.
bool survivors_within_bounds(const TournamentTrace& trace);

void write_trace_csv(const TournamentTrace& trace, std::ostream& os);

struct MonteCarloEstimate {
  double rate = 0;
  double standard_error = 0;
  long replicates = 0;
  std::uint64_t seed = 0;
  long fixations = 0;
};

// Replicate r uses stream r of the seed, so results do not depend on the
// order in which replicates are run.
MonteCarloEstimate moran_monte_carlo(const TwoByTwoPayoff& p, long n, long i0,
                                     long replicates, std::uint64_t seed);

}  // namespace insuperable

#endif  // INSUPERABLE_SIM_HPP_
