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

#ifndef INSUPERABLE_MULTIPLAYER_HPP_
#define INSUPERABLE_MULTIPLAYER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "insuperable/game.hpp"

namespace insuperable {

// Symmetric N-player game with strategies A and B. a[k] (b[k]) is the payoff
// of an A (B) player when k of the other N-1 players choose A.
class NPlayerTwoStrategyGame {
 public:
  NPlayerTwoStrategyGame(long n, RationalVector a, RationalVector b);

  long n() const { return n_; }
  const RationalVector& a() const { return a_; }
  const RationalVector& b() const { return b_; }
  NPlayerTwoStrategyGame scaled(const Rational& lambda) const;

  friend bool operator==(const NPlayerTwoStrategyGame&,
                         const NPlayerTwoStrategyGame&) = default;

 private:
  long n_;
  RationalVector a_;
  RationalVector b_;
};

// Weak flags compare with >=, strict flags with >.
// Insuperable: a switch to the other strategy never leaves the switcher ahead,
// i.e. a[k] >= b[k+1] for A and b[k+1] >= a[k] for B, k = 0..N-2.
// Dominance: a[k] >= b[k] for every k (resp. b[k] >= a[k]).
struct NPlayerReport {
  bool a_insuperable = false;
  bool b_insuperable = false;
  bool a_dominates = false;
  bool b_dominates = false;
  bool a_strictly_insuperable = false;
  bool b_strictly_insuperable = false;
  bool a_strictly_dominates = false;
  bool b_strictly_dominates = false;
};

NPlayerReport n_player_classify(const NPlayerTwoStrategyGame& g);

// Reducible when a and b are affine in k; the two-player game is then
// [[a1, a0], [b1, b0]] with a0 = a[0], a1 = a[N-1], b0 = b[0], b1 = b[N-1].
struct ReductionResult {
  bool reducible = false;
  std::optional<BimatrixGame> two_player;
};

ReductionResult is_reducible(const NPlayerTwoStrategyGame& g);

// a[k] = (k a1 + (N-k-1) a0) / (N-1) from [[a1, a0], [b1, b0]]; likewise b.
NPlayerTwoStrategyGame extend_to_n(const BimatrixGame& two, long n);

// Replaces the entries a[N-1] and b[0], which never enter an insuperability
// or dominance comparison between a and b shifted by one, with the values
// that make the game affine whenever the remaining entries allow it. N = 3
// always reduces after this step; off unless requested.
NPlayerTwoStrategyGame normalize_for_reduction(const NPlayerTwoStrategyGame& g);

// For N = 3: if A is insuperable in g3 and b[2] >= a[2], then
// b1 = b[2] <= a[1] = (a[0] + a[2]) / 2, hence a[0] >= 2 b[2] - a[2] >= b[2],
// so A stays insuperable (a0 >= b1) in the reduced game.
struct PropagationReport {
  bool applicable = false;
  std::string reason;  // when not applicable
  Rational b2, a1, a0, a2;
  bool b2_le_a1 = false;          // b[2] <= a[1]
  bool a1_is_midpoint = false;    // a[1] = (a[0] + a[2]) / 2
  bool a0_ge_2b2_minus_a2 = false;
  bool bound_ge_b2 = false;       // 2 b[2] - a[2] >= b[2]
  bool reduced_a_insuperable = false;
  bool chain_holds = false;
};

PropagationReport propagation_check(const NPlayerTwoStrategyGame& g3);

namespace n_catalog {

// Public good game: a[k] = (k+1) r / N - 1, b[k] = k r / N.
NPlayerTwoStrategyGame pgg(const Rational& r, long n);
NPlayerTwoStrategyGame zerinho_original();
NPlayerTwoStrategyGame zerinho_modified(const Rational& alpha);
// Unnormalized N-player extension a[k] = k alpha, b[k] = (N-1-k) alpha.
NPlayerTwoStrategyGame zerinho_n(const Rational& alpha, long n);

// Parameters: pgg: r, N; zerinho_modified: alpha; zerinho_n: alpha, N.
NPlayerTwoStrategyGame by_name(const std::string& name, const catalog::Params& params);
std::vector<std::string> names();

}  // namespace n_catalog

}  // namespace insuperable

#endif  // INSUPERABLE_MULTIPLAYER_HPP_
