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

#include "insuperable/io.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace insuperable::io {

JsonSyntaxError::JsonSyntaxError(const std::string& source, std::size_t line,
                                 std::size_t column, const std::string& detail)
    : ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                 ": " + detail),
      line_(line),
      column_(column) {}

namespace {

// Builds an ordered_json tree like the library's own DOM parser, except that
// floating-point literals are stored as their source text.
class ExactSax : public nlohmann::json_sax<Json> {
 public:
  ExactSax(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  Json result;

  bool null() override { return put(Json(nullptr)); }
  bool boolean(bool v) override { return put(Json(v)); }
  bool number_integer(number_integer_t v) override { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) override {
    if (v <= static_cast<number_unsigned_t>(INT64_MAX)) {
      return put(Json(static_cast<number_integer_t>(v)));
    }
    return put(Json(std::to_string(v)));
  }
  bool number_float(number_float_t, const string_t& s) override { return put(Json(s)); }
  bool string(string_t& v) override { return put(Json(v)); }
  bool binary(binary_t&) override { return false; }

  bool start_object(std::size_t) override {
    Json* obj = put_container(Json::object());
    stack_.push_back(obj);
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    Json* arr = put_container(Json::array());
    stack_.push_back(arr);
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    // `position` counts characters read, including the offending one.
    std::size_t line = 1, column = 1;
    const std::size_t upto = position == 0 ? 0 : std::min(position - 1, text_.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = ex.what();
    // Drop the library's own "[json.exception...] parse error at ...: " prefix.
    if (auto colon = detail.find(": "); colon != std::string::npos) {
      detail = detail.substr(colon + 2);
    }
    throw JsonSyntaxError(source_, line, column, detail);
  }

 private:
  bool put(Json v) {
    put_container(std::move(v));
    return true;
  }

  Json* put_container(Json v) {
    if (stack_.empty()) {
      result = std::move(v);
      return &result;
    }
    Json& top = *stack_.back();
    if (top.is_object()) {
      top[key_] = std::move(v);
      return &top[key_];
    }
    top.push_back(std::move(v));
    return &top.back();
  }

  std::string_view text_;
  std::string source_;
  std::vector<Json*> stack_;
  std::string key_;
};

void require_object(const Json& v, const std::string& what,
                    const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
  if (!v.is_object()) throw ParseError(what + ": expected a JSON object");
  for (const auto& k : required) {
    if (!v.contains(k)) throw ParseError(what + ": missing key \"" + k + "\"");
  }
  for (const auto& [k, _] : v.items()) {
    if (!required.count(k) && !optional.count(k)) {
      throw ParseError(what + ": unknown key \"" + k + "\"");
    }
  }
}

std::vector<std::string> to_labels(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  ExactSax sax(text, source);
  Json::sax_parse(text.begin(), text.end(), &sax);
  return std::move(sax.result);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  return parse_json(read_text_file(path), path);
}

Rational to_rational(const Json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string");
}

RationalVector to_vector(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  RationalVector out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(to_rational(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix to_matrix(const Json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a non-empty array of rows");
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rows.push_back(to_vector(v[i], where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError(where + ": row " + std::to_string(i) + " has " +
                       std::to_string(rows.back().size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
  }
  if (rows.front().empty()) throw ParseError(where + ": rows must be non-empty");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

BimatrixGame game_from_json(const Json& v) {
  require_object(v, "game", {"A", "B"}, {"labels_A", "labels_B"});
  std::vector<std::string> la, lb;
  if (v.contains("labels_A")) la = to_labels(v["labels_A"], "labels_A");
  if (v.contains("labels_B")) lb = to_labels(v["labels_B"], "labels_B");
  return make_bimatrix(to_matrix(v["A"], "A"), to_matrix(v["B"], "B"), std::move(la),
                       std::move(lb));
}

NPlayerTwoStrategyGame nplayer_from_json(const Json& v) {
  require_object(v, "n-player game", {"N", "a", "b"}, {});
  if (!v["N"].is_number_integer()) throw ParseError("N: expected an integer");
  return NPlayerTwoStrategyGame(v["N"].get<long>(), to_vector(v["a"], "a"),
                                to_vector(v["b"], "b"));
}

OnePeriodMarket market_from_json(const Json& v) {
  require_object(v, "market", {"D", "p"}, {});
  return OnePeriodMarket(to_matrix(v["D"], "D"), to_vector(v["p"], "p"));
}

Json game_to_json(const BimatrixGame& g) {
  Json out;
  out["A"] = exact(g.a());
  out["B"] = exact(g.b());
  if (!g.labels_a().empty()) out["labels_A"] = g.labels_a();
  if (!g.labels_b().empty()) out["labels_B"] = g.labels_b();
  return out;
}

Json nplayer_to_json(const NPlayerTwoStrategyGame& g) {
  Json out;
  out["N"] = g.n();
  out["a"] = exact(g.a());
  out["b"] = exact(g.b());
  return out;
}

Json market_to_json(const OnePeriodMarket& m) {
  Json out;
  out["D"] = exact(m.d);
  out["p"] = exact(m.p);
  return out;
}

Json exact(const Rational& r) { return r.str(); }

Json exact(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json exact(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(exact(m.row(i)));
  return out;
}

Json decimal(const Rational& r) { return r.decimal(); }

Json decimal(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.decimal());
  return out;
}

Json decimal(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(decimal(m.row(i)));
  return out;
}

void write_scan_csv(const ScanResult& scan, std::ostream& os) {
  os << "N,F1,neutral,delta_sign,F1_decimal,neutral_decimal,note\n";
  for (const ScanRow& r : scan.rows) {
    if (!r.valid) {
      os << r.n << ",,,,,," << csv_field(r.note) << '\n';
      continue;
    }
    os << r.n << ',' << r.f1 << ',' << r.neutral << ',' << r.delta_sign << ','
       << r.f1.decimal() << ',' << r.neutral.decimal() << ",\n";
  }
}

void write_fixation_csv(const FixationVector& f, std::ostream& os) {
  os << "i,F,F_decimal,neutral,neutral_decimal\n";
  for (long i = 0; i <= f.n; ++i) {
    const Rational& fi = f.f[static_cast<std::size_t>(i)];
    const Rational neutral(i, f.n);
    os << i << ',' << fi << ',' << fi.decimal() << ',' << neutral << ','
       << neutral.decimal() << '\n';
  }
}

Json monte_carlo_json(const MonteCarloEstimate& e) {
  Json out;
  out["rate"] = e.rate;
  out["se"] = e.standard_error;
  out["replicates"] = e.replicates;
  out["seed"] = e.seed;
  out["fixations"] = e.fixations;
  return out;
}

Json RunManifest::to_json() const {
  Json out;
  out["command"] = command;
  out["argv"] = argv;
  out["inputs"] = Json(inputs);
  if (seed) out["seed"] = *seed;
  out["tool_version"] = kToolVersion;
  out["outputs"] = outputs;
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace insuperable::io
