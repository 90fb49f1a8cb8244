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


// End-to-end checks of the command-line tool: each case runs the binary,
// parses its JSON report and inspects exit codes, messages and output files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "insuperable/io.hpp"

namespace {

namespace fs = std::filesystem;
using insuperable::io::Json;

struct Run {
  int code = -1;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static int counter = 0;
  const fs::path p = fs::temp_directory_path() /
                     ("insuperable_cli_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Run run(const std::vector<std::string>& args, const std::string& env = "") {
  const fs::path dir = scratch();
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(INSUPERABLE_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote((dir / "out").string()) + " 2>" + quote((dir / "err").string());
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "out");
  r.err = slurp(dir / "err");
  fs::remove_all(dir);
  return r;
}

std::string data(const std::string& name) { return std::string(INSUPERABLE_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze hawk-dove from the catalog") {
  const Run r = run({"analyze", "--catalog", "hawk_dove", "--G", "3", "--C", "10"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  const Json& ins = j["insuperable"];
  CHECK(ins["value"] == "0");
  CHECK(ins["A_strict"] == false);
  bool hawk_vertex = false;
  for (const Json& v : j["comparison"]["A_insuperable_vertices"]) {
    hawk_vertex = hawk_vertex || v["weights"] == Json({"1", "0"});
  }
  CHECK(hawk_vertex);
  CHECK(j["symmetric"] == true);
  CHECK(j["nash"]["equilibria"].size() == 3);
}

TEST_CASE("analyze a game file matches the catalog entry") {
  const Run file = run({"analyze", "--game", data("hawk_dove.json")});
  const Run cat = run({"analyze", "--catalog", "hawk_dove", "--G", "3", "--C", "10"});
  REQUIRE(file.code == 0);
  REQUIRE(cat.code == 0);
  CHECK(file.json()["insuperable"] == cat.json()["insuperable"]);
  CHECK(file.json()["L"] == cat.json()["L"]);
}

TEST_CASE("analyze the cycle game") {
  const Run r = run({"analyze", "--catalog", "three_strategy_cycle"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  // Symmetric, so the value is zero and nobody is strictly insuperable.
  CHECK(j["insuperable"]["value"] == "0");
  CHECK(j["insuperable"]["A_strict"] == false);
  const Json& v = j["comparison"]["A_insuperable_vertices"];
  REQUIRE(v.size() == 1);
  CHECK(v[0]["weights"] == Json({"1/3", "1/3", "1/3"}));
  CHECK(v[0]["nash_strategy"] == false);
}

TEST_CASE("analyze reports input errors with a location") {
  const Run r = run({"analyze", "--game", data("empty.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "empty.json:1:1"));
  CHECK(r.out.empty());
}

TEST_CASE("analyze respects the support enumeration cap") {
  const Run r = run({"analyze", "--catalog", "three_strategy_cycle", "--nash-cap", "2"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "cap"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"analyze", "--catalog", "no_such_game"}).code == 2);
  CHECK(contains(run({"analyze", "--catalog", "no_such_game"}).err, "unknown catalog entry"));
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"simulate", "ultimatum", "--M", "4"}).code == 2);  // no seed
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"moran", "--payoff", "1,2,3"}).code == 2);
  CHECK(run({"analyze", "--catalog", "hawk_dove", "--G", "x/0"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "analyze"));
}

TEST_CASE("moran weak-selection scan of hawk-dove") {
  const Run r = run({"moran", "--catalog", "hawk_dove", "--G", "3", "--C", "10", "--weak",
                     "--scan", "--Nmax", "30"});
  REQUIRE(r.code == 0);
  const Json s = r.json()["scan"];
  CHECK(s["N_c"] == 8);
  CHECK(s["rows"].size() == 29);
  CHECK(s["rows"][0]["valid"] == false);
  CHECK(s["rows"][2]["valid"] == true);
}

TEST_CASE("moran critical sizes") {
  const Run r = run({"moran", "--payoff", "1,3,2,4", "--critical"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["critical"]["N_inf"] == "3");
  CHECK(r.json()["critical"]["N_sup"] == "3");
  const Run bad = run({"moran", "--payoff", "1,2,3,4", "--critical"});
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "b > c"));
}

TEST_CASE("moran neutral fixation vector") {
  const Run r = run({"moran", "--payoff", "1,1,1,1", "--N", "10"});
  REQUIRE(r.code == 0);
  const Json f = r.json()["fixation"]["F"];
  REQUIRE(f.size() == 11);
  CHECK(f[1] == "1/10");
  CHECK(f[5] == "1/2");
  CHECK(f[10] == "1");
}

TEST_CASE("moran fixation value with exact rational parameters") {
  const Run r = run({"moran", "--payoff", "1,3,2,4", "--N", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["fixation"]["F"][1] == "21/103");
}

TEST_CASE("nplayer public goods game") {
  const Run r = run({"nplayer", "--catalog", "pgg", "--r", "3", "--N", "5", "--reduce"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["reduction"]["reducible"] == true);
  CHECK(j["reduction"]["A"] == Json::parse(R"([["2","-2/5"],["12/5","0"]])"));
  CHECK(j["classification"]["B_insuperable"] == true);
}

TEST_CASE("nplayer game file matches the catalog") {
  const Run file = run({"nplayer", "--game", data("pgg.json"), "--reduce"});
  const Run cat = run({"nplayer", "--catalog", "pgg", "--r", "3", "--N", "5", "--reduce"});
  REQUIRE(file.code == 0);
  REQUIRE(cat.code == 0);
  CHECK(file.json()["classification"] == cat.json()["classification"]);
}

TEST_CASE("nplayer rational parameter") {
  const Run r = run({"nplayer", "--catalog", "pgg", "--r", "7/2", "--N", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["reduction"]["reducible"] == true);
}

TEST_CASE("nplayer zerinho variants") {
  const Run orig = run({"nplayer", "--catalog", "zerinho_original", "--reduce"});
  REQUIRE(orig.code == 0);
  const Json o = orig.json();
  CHECK(o["reduction"]["reducible"] == false);
  CHECK(o["classification"]["A_insuperable"] == false);
  CHECK(o["classification"]["B_insuperable"] == false);
  CHECK(o["propagation"]["applicable"].is_boolean());

  const Run norm = run({"nplayer", "--catalog", "zerinho_original", "--normalize", "--reduce"});
  REQUIRE(norm.code == 0);
  CHECK(norm.json()["reduction"]["reducible"] == true);

  const Run mod = run({"nplayer", "--catalog", "zerinho_modified", "--alpha", "1/2", "--reduce"});
  REQUIRE(mod.code == 0);
  CHECK(mod.json()["reduction"]["reducible"] == true);
}

TEST_CASE("market with inline matrices") {
  const Run r = run({"market", "--D", "[[0,1],[1,1]]", "--p", "[0,1]"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["state_price_vector"].is_null());
  CHECK(j["arbitrage"]["kind"] == "gain_at_zero_cost");
  CHECK(j["cross_check"]["p_aware_agree"] == true);
}

TEST_CASE("market from a file") {
  const Run r = run({"market", "--file", data("id2.json")});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["state_price_vector"] == Json({"1", "1"}));
  CHECK(j["arbitrage"].is_null());
  // Positive prices are outside the structured case; the p-free verdict
  // sees a strictly insuperable B and disagrees.
  CHECK(j["cross_check"]["price_structured"] == false);
  CHECK(j["cross_check"]["agree"] == false);
  CHECK(j["cross_check"]["p_aware_agree"] == true);
}

TEST_CASE("market disagreement is reported, not an error") {
  const Run r = run({"market", "--D", "[[1,2]]", "--p", "[3]"});
  REQUIRE(r.code == 0);
  const Json c = r.json()["cross_check"];
  CHECK(c["arbitrage_absent"] == true);
  CHECK(c["agree"] == false);
  CHECK(c["p_aware_agree"] == true);
}

TEST_CASE("market input errors") {
  const Run r = run({"market", "--file", data("bad_market.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "bad_market.json:"));
  CHECK(run({"market", "--D", "[[1,2]]", "--p", "[1,2]"}).code == 2);
  CHECK(run({"market", "--D", "[[1,2]]"}).code == 2);
}

TEST_CASE("simulate ultimatum with survivor check") {
  const Run r = run({"simulate", "ultimatum", "--M", "20", "--copies", "5", "--steps", "2e6",
                     "--seed", "42", "--check-survivors"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["survivors_within_bounds"] == true);
  CHECK(j["seed"] == 42);
  CHECK(j["population"] == 21 * 22 * 5);
}

TEST_CASE("simulate ultimatum with zero steps") {
  const Run r = run({"simulate", "ultimatum", "--M", "6", "--steps", "0", "--seed", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["steps_run"] == 0);
  CHECK(r.json()["population"] == 56);
  CHECK(r.json()["survivors"].size() == 56);
}

TEST_CASE("simulate is reproducible") {
  const std::vector<std::string> args = {"simulate", "ultimatum", "--M", "6", "--copies", "3",
                                         "--steps", "20000", "--seed", "9", "--roles", "both"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("simulate moran-mc") {
  const Run r = run({"simulate", "moran-mc", "--payoff", "1,1,1,1", "--N", "10", "--i0", "3",
                     "--reps", "20000", "--seed", "5"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["exact"] == "3/10");
  const double rate = j["rate"].get<double>();
  const double se = j["se"].get<double>();
  CHECK(std::abs(rate - 0.3) <= 4 * se);
  CHECK(run({"simulate", "moran-mc", "--payoff", "1,1,1,1", "--N", "5", "--i0", "6",
             "--seed", "1"})
            .code == 3);
}

TEST_CASE("output directory receives report, data and manifest") {
  const fs::path dir = scratch();
  const Run r = run({"simulate", "ultimatum", "--M", "4", "--steps", "1000", "--seed", "3",
                     "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "trace.csv"));
  REQUIRE(fs::exists(dir / "manifest.json"));
  const Json m = Json::parse(slurp(dir / "manifest.json"));
  CHECK(m["command"] == "simulate ultimatum");
  CHECK(m["seed"] == 3);
  CHECK(m["outputs"] == Json({"trace.csv", "report.json"}));
  CHECK(Json::parse(slurp(dir / "report.json")) == r.json());
  fs::remove_all(dir);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = scratch();
  const Run r = run({"moran", "--payoff", "1,3,2,4", "--scan", "--Nmax", "6"},
                    "INSUPERABLE_OUT_DIR=" + quote(dir.string()));
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "scan.csv"));
  CHECK(fs::exists(dir / "manifest.json"));
  fs::remove_all(dir);
}

TEST_CASE("no files are written without an output directory") {
  const fs::path dir = scratch();
  const Run r = run({"moran", "--payoff", "1,3,2,4", "--N", "4"}, "cd " + quote(dir.string()) + " &&");
  REQUIRE(r.code == 0);
  CHECK(fs::is_empty(dir));
  fs::remove_all(dir);
}
