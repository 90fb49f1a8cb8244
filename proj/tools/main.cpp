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

// insuperable: command-line front end.
//
// Every command prints a JSON report on stdout. With --out DIR (or the
// INSUPERABLE_OUT_DIR environment variable) the report, any tables and a
// manifest.json describing the run are also written to DIR.
//
// Exit codes: 0 success, 2 input error, 3 domain or cap error, 4 a requested
// property check failed.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "insuperable/io.hpp"
#include "reports.hpp"

namespace insuperable::cli {
namespace {

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitProperty = 4;

// Bad command-line usage that CLI11 cannot detect by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string dir;
  io::RunManifest manifest;

  void init(const std::string& command, int argc, char** argv) {
    if (dir.empty()) {
      if (const char* env = std::getenv("INSUPERABLE_OUT_DIR")) dir = env;
    }
    manifest.command = command;
    manifest.argv.assign(argv, argv + argc);
  }

  void file(const std::string& name, const std::string& text) {
    if (dir.empty()) return;
    io::write_text_file(dir + "/" + name, text);
    manifest.outputs.push_back(name);
  }

  // Prints the report and, with an output directory, writes it and the manifest.
  void finish(const Json& report) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    file("report.json", text);
    if (!dir.empty()) {
      io::write_text_file(dir + "/manifest.json", manifest.to_json().dump(2) + "\n");
    }
  }
};

// Catalog parameters, given as exact rationals ("--G 3", "--r 7/2").
struct CatalogParams {
  std::map<std::string, std::string> text;

  void add(CLI::App* app, const std::vector<std::string>& names) {
    for (const auto& n : names) {
      app->add_option("--" + n, text[n], "catalog parameter " + n);
    }
  }

  catalog::Params parse(io::RunManifest& manifest) const {
    catalog::Params out;
    for (const auto& [k, v] : text) {
      if (v.empty()) continue;
      try {
        out[k] = Rational::parse(v);
      } catch (const ParseError& e) {
        throw ParseError("--" + k + ": " + e.what());
      }
      manifest.inputs[k] = v;
    }
    return out;
  }
};

long parse_count(const std::string& flag, const std::string& text, long min) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what());
  }
  if (!r.is_integer() || r < Rational(min) || r > Rational(1'000'000'000'000LL)) {
    throw ParseError(flag + ": expected an integer >= " + std::to_string(min) + ", got '" +
                     text + "'");
  }
  return std::stol(r.str());
}

TwoByTwoPayoff parse_payoff(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const ParseError& e) {
      throw ParseError(std::string("--payoff: ") + e.what());
    }
  }
  if (v.size() != 4) throw ParseError("--payoff: expected four entries a,b,c,d");
  return {v[0], v[1], v[2], v[3]};
}

void require_catalog_name(const std::string& name, const std::vector<std::string>& names) {
  if (std::find(names.begin(), names.end(), name) != names.end()) return;
  std::string list;
  for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
  throw UsageError("unknown catalog entry '" + name + "' (known: " + list + ")");
}

BimatrixGame load_game(const std::string& file, const std::string& name,
                       const CatalogParams& params, io::RunManifest& manifest) {
  if (file.empty() == name.empty()) throw UsageError("give exactly one of --game or --catalog");
  if (!file.empty()) {
    manifest.inputs["game"] = file;
    return io::game_from_json(io::read_json_file(file));
  }
  require_catalog_name(name, catalog::names());
  manifest.inputs["catalog"] = name;
  return catalog::by_name(name, params.parse(manifest));
}

struct AnalyzeArgs {
  std::string game, catalog;
  CatalogParams params;
  std::size_t nash_cap = kDefaultNashCap;
  std::size_t vertex_cap = kDefaultVertexCap;
};

int run_analyze(const AnalyzeArgs& a, Output& out) {
  const BimatrixGame g = load_game(a.game, a.catalog, a.params, out.manifest);
  out.finish(analyze_json(g, a.nash_cap, a.vertex_cap));
  return 0;
}

struct MoranArgs {
  std::string game, catalog, payoff;
  CatalogParams params;
  bool weak = false, scan = false, critical = false;
  std::string n, n_max;
};

int run_moran(const MoranArgs& a, Output& out) {
  TwoByTwoPayoff p;
  if (!a.payoff.empty()) {
    if (!a.game.empty() || !a.catalog.empty()) {
      throw UsageError("--payoff cannot be combined with --game or --catalog");
    }
    p = parse_payoff(a.payoff);
    out.manifest.inputs["payoff"] = a.payoff;
  } else {
    const BimatrixGame g = load_game(a.game, a.catalog, a.params, out.manifest);
    if (!g.symmetric() || g.n() != 2) {
      throw UsageError("moran needs a symmetric 2x2 game");
    }
    p = TwoByTwoPayoff::from_game(g);
  }
  if (!a.scan && !a.critical && a.n.empty()) {
    throw UsageError("moran: give --N, --scan or --critical");
  }
  Json report;
  {
    Json pj;
    io::put(pj, "a", p.a);
    io::put(pj, "b", p.b);
    io::put(pj, "c", p.c);
    io::put(pj, "d", p.d);
    report["payoff"] = pj;
    report["weak_selection"] = a.weak;
  }
  if (a.critical) {
    report["critical"] = critical_json(critical_sizes(p));
  }
  if (!a.n.empty()) {
    const long n = parse_count("--N", a.n, 2);
    out.manifest.inputs["N"] = a.n;
    TwoByTwoPayoff w = p;
    if (a.weak) {
      const Rational inv(1, n);
      w = {1 + p.a * inv, 1 + p.b * inv, 1 + p.c * inv, 1 + p.d * inv};
    }
    const FixationVector f = fixation_probabilities(w, n);
    report["fixation"] = fixation_json(f);
    std::ostringstream csv;
    io::write_fixation_csv(f, csv);
    out.file("fixation.csv", csv.str());
  }
  if (a.scan) {
    const long n_max = parse_count("--Nmax", a.n_max.empty() ? "30" : a.n_max, 2);
    out.manifest.inputs["Nmax"] = std::to_string(n_max);
    const ScanResult s = fixation_scan(p, n_max, a.weak);
    report["scan"] = scan_json(s, a.weak);
    std::ostringstream csv;
    io::write_scan_csv(s, csv);
    out.file("scan.csv", csv.str());
  }
  out.finish(report);
  return 0;
}

struct NPlayerArgs {
  std::string game, catalog;
  CatalogParams params;
  bool reduce = false, analyze = false, normalize = false;
  std::size_t nash_cap = kDefaultNashCap;
  std::size_t vertex_cap = kDefaultVertexCap;
};

int run_nplayer(const NPlayerArgs& a, Output& out) {
  if (a.game.empty() == a.catalog.empty()) {
    throw UsageError("give exactly one of --game or --catalog");
  }
  NPlayerTwoStrategyGame g = [&] {
    if (!a.game.empty()) {
      out.manifest.inputs["game"] = a.game;
      return io::nplayer_from_json(io::read_json_file(a.game));
    }
    require_catalog_name(a.catalog, n_catalog::names());
    out.manifest.inputs["catalog"] = a.catalog;
    return n_catalog::by_name(a.catalog, a.params.parse(out.manifest));
  }();
  Json report;
  report["game"] = io::nplayer_to_json(g);
  if (a.normalize) {
    g = normalize_for_reduction(g);
    report["normalized"] = io::nplayer_to_json(g);
  }
  report["classification"] = nplayer_report_json(n_player_classify(g));
  const ReductionResult red = is_reducible(g);
  Json rj = reduction_json(red);
  if (!a.reduce) {
    rj.erase("A");
    rj.erase("A_decimal");
    rj.erase("B");
    rj.erase("B_decimal");
  }
  report["reduction"] = rj;
  if (g.n() == 3) report["propagation"] = propagation_json(propagation_check(g));
  if (a.analyze) {
    report["reduced_analysis"] =
        red.two_player ? analyze_json(*red.two_player, a.nash_cap, a.vertex_cap) : Json(nullptr);
  }
  out.finish(report);
  return 0;
}

struct MarketArgs {
  std::string file, d, p;
};

int run_market(const MarketArgs& a, Output& out) {
  const OnePeriodMarket m = [&] {
    if (!a.file.empty()) {
      if (!a.d.empty() || !a.p.empty()) throw UsageError("--file cannot be combined with --D/--p");
      out.manifest.inputs["file"] = a.file;
      return io::market_from_json(io::read_json_file(a.file));
    }
    if (a.d.empty() || a.p.empty()) throw UsageError("give --file or both --D and --p");
    out.manifest.inputs["D"] = a.d;
    out.manifest.inputs["p"] = a.p;
    return OnePeriodMarket(io::to_matrix(io::parse_json(a.d, "--D"), "D"),
                           io::to_vector(io::parse_json(a.p, "--p"), "p"));
  }();
  out.finish(market_report_json(m));
  return 0;
}

struct UltimatumArgs {
  std::string m = "20", copies = "1", steps = "1e8", snapshot_every = "0";
  std::uint64_t seed = 0;
  std::string roles = "single", thresholds = "full";
  bool check_survivors = false;
};

int run_ultimatum(const UltimatumArgs& a, Output& out) {
  UltimatumConfig cfg;
  cfg.max_offer = parse_count("--M", a.m, 1);
  cfg.copies_per_strategy = parse_count("--copies", a.copies, 1);
  cfg.steps = static_cast<std::uint64_t>(parse_count("--steps", a.steps, 0));
  cfg.snapshot_every = static_cast<std::uint64_t>(parse_count("--snapshot-every", a.snapshot_every, 0));
  cfg.seed = a.seed;
  cfg.roles = a.roles == "both" ? RoleMode::kBothOrderings : RoleMode::kSingleRole;
  cfg.thresholds = a.thresholds == "interior" ? ThresholdRange::kInterior : ThresholdRange::kFull;
  out.manifest.seed = a.seed;
  out.manifest.inputs = {{"M", a.m},           {"copies", a.copies},
                         {"steps", a.steps},   {"snapshot_every", a.snapshot_every},
                         {"roles", a.roles},   {"thresholds", a.thresholds}};

  const TournamentTrace trace = ultimatum_tournament(cfg);
  const bool ok = survivors_within_bounds(trace);
  std::ostringstream csv;
  write_trace_csv(trace, csv);
  out.file("trace.csv", csv.str());
  Json report = tournament_summary_json(trace, ok);
  out.finish(report);
  return a.check_survivors && !ok ? kExitProperty : 0;
}

struct MoranMcArgs {
  std::string payoff, n, i0, reps = "100000";
  std::uint64_t seed = 0;
};

int run_moran_mc(const MoranMcArgs& a, Output& out) {
  const TwoByTwoPayoff p = parse_payoff(a.payoff);
  const long n = parse_count("--N", a.n, 2);
  const long i0 = parse_count("--i0", a.i0, 0);
  const long reps = parse_count("--reps", a.reps, 1);
  if (i0 > n) throw DomainError("--i0 must not exceed --N");
  out.manifest.seed = a.seed;
  out.manifest.inputs = {{"payoff", a.payoff}, {"N", a.n}, {"i0", a.i0}, {"reps", a.reps}};

  const MonteCarloEstimate e = moran_monte_carlo(p, n, i0, reps, a.seed);
  Json report = io::monte_carlo_json(e);
  const Rational exact = fixation_probabilities(p, n).f[static_cast<std::size_t>(i0)];
  io::put(report, "exact", exact);
  out.file("estimate.json", io::monte_carlo_json(e).dump(2) + "\n");
  out.finish(report);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Insuperable strategies: exact analysis of two-player and N-player games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Output out;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", out.dir, "output directory (default: $INSUPERABLE_OUT_DIR)");
  };
  auto add_caps = [](CLI::App* sub, std::size_t& nash_cap, std::size_t& vertex_cap) {
    sub->add_option("--nash-cap", nash_cap, "largest dimension for support enumeration")
        ->capture_default_str();
    sub->add_option("--vertex-cap", vertex_cap, "largest dimension for vertex enumeration")
        ->capture_default_str();
  };
  int rc = 0;

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "classify a bimatrix game and compare with Nash");
  analyze->add_option("--game", an.game, "game JSON file");
  analyze->add_option("--catalog", an.catalog, "catalog game name");
  an.params.add(analyze, {"G", "C", "a", "b", "c", "d", "M", "N"});
  add_caps(analyze, an.nash_cap, an.vertex_cap);
  add_out(analyze);
  analyze->callback([&] {
    out.init("analyze", argc, argv);
    rc = run_analyze(an, out);
  });

  MoranArgs mo;
  auto* moran = app.add_subcommand("moran", "exact Moran fixation probabilities");
  moran->add_option("--payoff", mo.payoff, "a,b,c,d");
  moran->add_option("--game", mo.game, "symmetric 2x2 game JSON file");
  moran->add_option("--catalog", mo.catalog, "catalog game name");
  mo.params.add(moran, {"G", "C", "a", "b", "c", "d"});
  moran->add_flag("--weak", mo.weak, "use payoffs 1 + entry/N");
  moran->add_flag("--scan", mo.scan, "tabulate F_1 against 1/N for N = 2..Nmax");
  moran->add_option("--Nmax", mo.n_max, "largest N in the scan (default 30)");
  moran->add_flag("--critical", mo.critical, "critical population sizes");
  moran->add_option("--N", mo.n, "population size for the fixation vector");
  add_out(moran);
  moran->callback([&] {
    out.init("moran", argc, argv);
    rc = run_moran(mo, out);
  });

  NPlayerArgs np;
  auto* nplayer = app.add_subcommand("nplayer", "N-player two-strategy games");
  nplayer->add_option("--game", np.game, "N-player game JSON file");
  nplayer->add_option("--catalog", np.catalog, "catalog game name");
  np.params.add(nplayer, {"r", "N", "alpha"});
  nplayer->add_flag("--reduce", np.reduce, "report the reduced two-player game");
  nplayer->add_flag("--analyze", np.analyze, "analyze the reduced two-player game");
  nplayer->add_flag("--normalize", np.normalize,
                    "fill in the payoffs no player can receive before testing reducibility");
  add_caps(nplayer, np.nash_cap, np.vertex_cap);
  add_out(nplayer);
  nplayer->callback([&] {
    out.init("nplayer", argc, argv);
    rc = run_nplayer(np, out);
  });

  MarketArgs mk;
  auto* market = app.add_subcommand("market", "arbitrage and the trivial-outcome test");
  market->add_option("--file", mk.file, "market JSON file");
  market->add_option("--D", mk.d, "cash-flow matrix as JSON, assets x states");
  market->add_option("--p", mk.p, "price vector as JSON");
  add_out(market);
  market->callback([&] {
    out.init("market", argc, argv);
    rc = run_market(mk, out);
  });

  auto* simulate = app.add_subcommand("simulate", "seeded stochastic simulations");
  simulate->require_subcommand(1);

  UltimatumArgs ul;
  auto* ult = simulate->add_subcommand("ultimatum", "ultimatum game tournament");
  ult->add_option("--M", ul.m, "largest offer")->capture_default_str();
  ult->add_option("--copies", ul.copies, "copies per strategy")->capture_default_str();
  ult->add_option("--steps", ul.steps, "step budget")->capture_default_str();
  ult->add_option("--snapshot-every", ul.snapshot_every, "steps between snapshots (0: ends only)");
  ult->add_option("--seed", ul.seed, "RNG seed")->required();
  ult->add_option("--roles", ul.roles, "single: first drawn is donor; both: play both orderings")
      ->check(CLI::IsMember({"single", "both"}))
      ->capture_default_str();
  ult->add_option("--thresholds", ul.thresholds, "full: m' = 0..M+1; interior: m' = 1..M")
      ->check(CLI::IsMember({"full", "interior"}))
      ->capture_default_str();
  ult->add_flag("--check-survivors", ul.check_survivors,
                "exit 4 unless every survivor has m <= M/2 <= m'");
  add_out(ult);
  ult->callback([&] {
    out.init("simulate ultimatum", argc, argv);
    rc = run_ultimatum(ul, out);
  });

  MoranMcArgs mc;
  auto* mmc = simulate->add_subcommand("moran-mc", "Monte Carlo Moran fixation");
  mmc->add_option("--payoff", mc.payoff, "a,b,c,d")->required();
  mmc->add_option("--N", mc.n, "population size")->required();
  mmc->add_option("--i0", mc.i0, "initial number of A")->required();
  mmc->add_option("--reps", mc.reps, "replicates")->capture_default_str();
  mmc->add_option("--seed", mc.seed, "RNG seed")->required();
  add_out(mmc);
  mmc->callback([&] {
    out.init("simulate moran-mc", argc, argv);
    rc = run_moran_mc(mc, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  return rc;
}

}  // namespace
}  // namespace insuperable::cli

int main(int argc, char** argv) {
  using namespace insuperable;
  try {
    return cli::run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kExitInput;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kExitInput;
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kExitInput;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return cli::kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return cli::kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
