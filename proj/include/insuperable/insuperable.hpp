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

// A strategy is insuperable when it guarantees its player at least the
// opponent's payoff whatever the opponent does. With L = Aᵀ - B this is
// L x >= 0 for player A and yᵀ L <= 0 for player B, so every question here is
// a question about the zero-sum game with payoff matrix L.

#ifndef INSUPERABLE_INSUPERABLE_HPP_
#define INSUPERABLE_INSUPERABLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "insuperable/game.hpp"

namespace insuperable {

enum class ValueSign { kNegative, kZero, kPositive };
enum class Insuperability { kNotInsuperable, kInsuperable, kStrictlyInsuperable };

std::string to_string(ValueSign s);
std::string to_string(Insuperability s);
ValueSign sign_of(const Rational& v);

// Value of the zero-sum game in which A picks x, B picks y and A receives
// yᵀ L x. L x >= value componentwise and yᵀ L <= value componentwise.
struct GameValueResult {
  Rational value;
  MixedStrategy maximin_x;
  MixedStrategy minimax_y;
};

struct InsuperableReport {
  Rational value;
  ValueSign value_sign = ValueSign::kZero;
  std::optional<MixedStrategy> a_insuperable;
  std::optional<MixedStrategy> b_insuperable;
  bool a_strict = false;
  bool b_strict = false;
  bool pair_exists = false;
};

GameValueResult zero_sum_value(const NetPayoffMatrix& l);

InsuperableReport classify(const BimatrixGame& game);
// Classification depends on the game only through L.
InsuperableReport classify(const NetPayoffMatrix& l);

Insuperability check_insuperable(const BimatrixGame& game, Player player,
                                 const MixedStrategy& s);
// Same test against a precomputed net payoff matrix.
Insuperability check_insuperable(const NetPayoffMatrix& l, Player player,
                                 const MixedStrategy& s);

inline constexpr std::size_t kDefaultVertexCap = 8;

// Vertices of the polytope of insuperable strategies for the player; empty
// when there is none. Throws CapError when the player's dimension exceeds cap.
std::vector<MixedStrategy> insuperable_vertices(const BimatrixGame& game, Player player,
                                                std::size_t cap = kDefaultVertexCap);

inline constexpr std::size_t kBruteForceMaxDimension = 4;

// Grid oracle: scans every strategy whose weights are multiples of
// 1/resolution. Strict witnesses decide the sign; otherwise the sign is zero.
// Witnesses are the first grid points found, starting from e1 (a strict one
// replaces a weak one). The value field is not estimated and stays zero.
InsuperableReport brute_force_classify(const BimatrixGame& game, long resolution);
InsuperableReport brute_force_classify(const NetPayoffMatrix& l, long resolution);

}  // namespace insuperable

#endif  // INSUPERABLE_INSUPERABLE_HPP_
