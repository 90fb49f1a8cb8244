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

// Frequency-dependent Moran process for a symmetric 2x2 game in a population
// of N individuals, k of which play A. Individuals do not play themselves, so
// an A meets k-1 other A's and N-k B's.

#ifndef INSUPERABLE_MORAN_HPP_
#define INSUPERABLE_MORAN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "insuperable/game.hpp"

namespace insuperable {

// Symmetric game [[a, b], [c, d]]: a = A vs A, b = A vs B, c = B vs A, d = B vs B.
struct TwoByTwoPayoff {
  Rational a, b, c, d;

  // Requires a symmetric 2x2 game.
  static TwoByTwoPayoff from_game(const BimatrixGame& game);
  BimatrixGame to_game() const;
};

// Average payoff of an A (resp. B) at A-count k, times N-1.
Rational fitness_a(const TwoByTwoPayoff& p, long k, long n);
Rational fitness_b(const TwoByTwoPayoff& p, long k, long n);

// rho_k = (a(k-1) + b(N-k)) / (ck + d(N-k-1)) for 1 <= k <= N-1.
Rational relative_fitness(const TwoByTwoPayoff& p, long k, long n);
// rho_k > 1: an A is fitter than a B at this state.
bool a_fitter(const TwoByTwoPayoff& p, long k, long n);

struct FixationVector {
  long n = 0;
  RationalVector f;  // f[i]: fixation probability of A from i copies, i = 0..N
};

// F_i = sum_{j=1}^{i} prod_{k=1}^{j-1} 1/rho_k, normalized by the same sum up to
// N. Works with 1/rho_k directly, so a B fitness of zero (A certain to win the
// step) is allowed; A's fitness must be positive at every interior state.
FixationVector fixation_probabilities(const TwoByTwoPayoff& p, long n);

struct CriticalSizes {
  Rational n_inf;
  Rational n_sup;
};

// Requires d > b > c > a > 0. Below n_inf A is favoured from every start,
// above n_sup it is disfavoured from every start.
CriticalSizes critical_sizes(const TwoByTwoPayoff& p);

struct ScanRow {
  long n = 0;
  bool valid = true;
  std::string note;  // why the row is invalid
  Rational f1;
  Rational neutral;  // 1/N
  int delta_sign = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  // Last N of the initial run of rows with F_1 > 1/N, if that run is nonempty.
  std::optional<long> n_c;
};

// Single-mutant fixation against neutrality with entries 1 + base/N, for
// N = 2..n_max. Invalid rows are reported and skipped when locating n_c.
ScanResult weak_selection_scan(const TwoByTwoPayoff& base, long n_max);
// As above; with weak = false the payoffs are used unchanged at every N.
ScanResult fixation_scan(const TwoByTwoPayoff& base, long n_max, bool weak);

}  // namespace insuperable

#endif  // INSUPERABLE_MORAN_HPP_
