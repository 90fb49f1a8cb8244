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

#ifndef INSUPERABLE_NASH_HPP_
#define INSUPERABLE_NASH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "insuperable/game.hpp"
#include "insuperable/insuperable.hpp"

namespace insuperable {

enum class EquilibriumKind { kPure, kMixed };

std::string to_string(EquilibriumKind k);

struct EquilibriumProfile {
  MixedStrategy x;
  MixedStrategy y;
  Rational payoff_a;
  Rational payoff_b;
  EquilibriumKind kind = EquilibriumKind::kPure;
  bool strict = false;
  // Supports of different sizes, or one of several vertices of a support
  // pair's solution set.
  bool degenerate = false;
};

// Exact best-response check of both players.
bool is_nash(const BimatrixGame& game, const MixedStrategy& x, const MixedStrategy& y);
// Pure profile in which each player's strategy is its unique best response.
bool is_strict_nash(const BimatrixGame& game, const MixedStrategy& x,
                    const MixedStrategy& y);

std::vector<EquilibriumProfile> pure_nash(const BimatrixGame& game);

inline constexpr std::size_t kDefaultNashCap = 6;

struct SupportEnumeration {
  std::vector<EquilibriumProfile> equilibria;  // sorted by (x, y), deduplicated
  bool degenerate = false;
};

// For each support pair, enumerates the vertices of the two best-response
// polytopes; every combination of vertices is an equilibrium. In degenerate
// games this yields representative vertices, not whole components.
SupportEnumeration mixed_nash_support_enumeration(const BimatrixGame& game,
                                                  std::size_t cap = kDefaultNashCap);

// Is s played with positive probability in some equilibrium with s as that
// player's full strategy? Decided by an LP over the opponent's strategies.
bool is_nash_strategy(const BimatrixGame& game, Player player, const MixedStrategy& s);

struct VertexFlag {
  MixedStrategy strategy;
  bool nash = false;
};

struct EquilibriumFlag {
  bool x_insuperable = false;
  bool y_insuperable = false;
};

struct ComparisonReport {
  InsuperableReport insuperable;
  SupportEnumeration nash;
  std::vector<EquilibriumFlag> nash_flags;  // parallel to nash.equilibria
  std::vector<VertexFlag> a_vertices;
  std::vector<VertexFlag> b_vertices;
  std::vector<std::size_t> a_pure_insuperable;
  std::vector<std::size_t> b_pure_insuperable;
  bool some_nash_strategy_insuperable = false;
  bool some_insuperable_strategy_nash = false;
};

ComparisonReport nash_vs_insuperable(const BimatrixGame& game,
                                     std::size_t nash_cap = kDefaultNashCap,
                                     std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace insuperable

#endif  // INSUPERABLE_NASH_HPP_
