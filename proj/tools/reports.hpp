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

// JSON renderings of analysis results for the command-line tool.

#ifndef INSUPERABLE_TOOLS_REPORTS_HPP_
#define INSUPERABLE_TOOLS_REPORTS_HPP_

#include "insuperable/game.hpp"
#include "insuperable/insuperable.hpp"
#include "insuperable/io.hpp"
#include "insuperable/market.hpp"
#include "insuperable/moran.hpp"
#include "insuperable/multiplayer.hpp"
#include "insuperable/nash.hpp"
#include "insuperable/sim.hpp"

namespace insuperable::cli {

using io::Json;

Json strategy_json(const BimatrixGame& g, Player p, const MixedStrategy& s);
Json insuperable_json(const BimatrixGame& g, const InsuperableReport& r);
Json equilibrium_json(const BimatrixGame& g, const EquilibriumProfile& e);
Json comparison_json(const BimatrixGame& g, const ComparisonReport& c);

// Game, L, classification, Nash equilibria and their comparison.
Json analyze_json(const BimatrixGame& g, std::size_t nash_cap, std::size_t vertex_cap);

Json scan_json(const ScanResult& scan, bool weak);
Json fixation_json(const FixationVector& f);
Json critical_json(const CriticalSizes& c);

Json nplayer_report_json(const NPlayerReport& r);
Json reduction_json(const ReductionResult& r);
Json propagation_json(const PropagationReport& r);

Json market_report_json(const OnePeriodMarket& m);

Json tournament_summary_json(const TournamentTrace& t, bool survivors_ok);

}  // namespace insuperable::cli

#endif  // INSUPERABLE_TOOLS_REPORTS_HPP_
