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

#ifndef INSUPERABLE_IO_HPP_
#define INSUPERABLE_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "insuperable/game.hpp"
#include "insuperable/market.hpp"
#include "insuperable/moran.hpp"
#include "insuperable/multiplayer.hpp"
#include "insuperable/rational.hpp"
#include "insuperable/sim.hpp"

namespace insuperable {

inline constexpr const char* kToolVersion = "0.1.0";

namespace io {

using Json = nlohmann::ordered_json;

// A syntax error in JSON text, located by 1-based line and column.
class JsonSyntaxError : public ParseError {
 public:
  JsonSyntaxError(const std::string& source, std::size_t line, std::size_t column,
                  const std::string& detail);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Non-integer numbers are kept as their literal text (a JSON string) so that
// "0.1" becomes exactly 1/10 rather than the nearest double.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// Accepts integers, decimal literals and "p/q" strings. `where` names the
// value in error messages, e.g. "A[1][0]".
Rational to_rational(const Json& v, const std::string& where);
RationalVector to_vector(const Json& v, const std::string& where);
Matrix to_matrix(const Json& v, const std::string& where);

BimatrixGame game_from_json(const Json& v);
NPlayerTwoStrategyGame nplayer_from_json(const Json& v);
OnePeriodMarket market_from_json(const Json& v);

// Inverses of the readers; rationals are written as "p/q" strings.
Json game_to_json(const BimatrixGame& g);
Json nplayer_to_json(const NPlayerTwoStrategyGame& g);
Json market_to_json(const OnePeriodMarket& m);

Json exact(const Rational& r);
Json exact(const RationalVector& v);
Json exact(const Matrix& m);
Json decimal(const Rational& r);
Json decimal(const RationalVector& v);
Json decimal(const Matrix& m);

// obj[key] = exact value, obj[key + "_decimal"] = decimal rendering.
template <typename T>
void put(Json& obj, const std::string& key, const T& value) {
  obj[key] = exact(value);
  obj[key + "_decimal"] = decimal(value);
}

// Columns N,F1,neutral,delta_sign,F1_decimal,neutral_decimal. Rows that are
// outside the model's domain carry empty values and the reason in a note column.
void write_scan_csv(const ScanResult& scan, std::ostream& os);
// Columns i,F,F_decimal,neutral,neutral_decimal for i = 0..N.
void write_fixation_csv(const FixationVector& f, std::ostream& os);
Json monte_carlo_json(const MonteCarloEstimate& e);

struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::map<std::string, std::string> inputs;  // input paths and parameters
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;

  Json to_json() const;
};

// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace io
}  // namespace insuperable

#endif  // INSUPERABLE_IO_HPP_
