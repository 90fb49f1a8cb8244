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

#include "insuperable/game.hpp"

#include <sstream>
#include <utility>

namespace insuperable {

std::string to_string(Player p) { return p == Player::kA ? "A" : "B"; }

MixedStrategy::MixedStrategy(RationalVector weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DimensionError("mixed strategy of dimension zero");
  Rational total;
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw DomainError("mixed strategy has a negative weight");
    total += w;
  }
  if (total != 1) {
    throw DomainError("mixed strategy weights sum to " + total.str() + ", not 1");
  }
}

MixedStrategy MixedStrategy::pure(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw DimensionError("pure strategy index out of range");
  RationalVector w(dimension);
  w[index] = 1;
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::uniform(std::size_t dimension) {
  if (dimension == 0) throw DimensionError("mixed strategy of dimension zero");
  return MixedStrategy(RationalVector(
      dimension, Rational(1, static_cast<long long>(dimension))));
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!weights_[i].is_zero()) s.push_back(i);
  }
  return s;
}

std::string MixedStrategy::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? ", " : "") << weights_[i];
  os << ")";
  return os.str();
}

BimatrixGame::BimatrixGame(Matrix a, Matrix b, std::vector<std::string> labels_a,
                           std::vector<std::string> labels_b)
    : a_(std::move(a)),
      b_(std::move(b)),
      labels_a_(std::move(labels_a)),
      labels_b_(std::move(labels_b)) {
  if (a_.empty()) throw DimensionError("payoff matrix A must be at least 1x1");
  if (b_.rows() != a_.cols() || b_.cols() != a_.rows()) {
    std::ostringstream os;
    os << "payoff matrix B must be " << a_.cols() << "x" << a_.rows()
       << " (transpose shape of A), got " << b_.rows() << "x" << b_.cols();
    throw DimensionError(os.str());
  }
  if (!labels_a_.empty() && labels_a_.size() != a_.rows()) {
    throw DimensionError("labels_A length does not match A's row count");
  }
  if (!labels_b_.empty() && labels_b_.size() != b_.rows()) {
    throw DimensionError("labels_B length does not match B's row count");
  }
  symmetric_ = a_.rows() == a_.cols() && a_ == b_;
}

std::string BimatrixGame::label(Player p, std::size_t i) const {
  const auto& labels = p == Player::kA ? labels_a_ : labels_b_;
  return labels.empty() ? std::to_string(i + 1) : labels.at(i);
}

BimatrixGame BimatrixGame::scaled(const Rational& lambda) const {
  Matrix a = a_;
  Matrix b = b_;
  a *= lambda;
  b *= lambda;
  return BimatrixGame(std::move(a), std::move(b), labels_a_, labels_b_);
}

NetPayoffMatrix::NetPayoffMatrix(Matrix l) : l_(std::move(l)) {
  if (l_.empty()) throw DimensionError("net payoff matrix must be nonempty");
}

bool NetPayoffMatrix::antisymmetric() const {
  if (l_.rows() != l_.cols()) return false;
  for (std::size_t i = 0; i < l_.rows(); ++i) {
    for (std::size_t j = i; j < l_.cols(); ++j) {
      if (l_(i, j) != -l_(j, i)) return false;
    }
  }
  return true;
}

BimatrixGame make_bimatrix(Matrix a, Matrix b, std::vector<std::string> labels_a,
                           std::vector<std::string> labels_b) {
  return BimatrixGame(std::move(a), std::move(b), std::move(labels_a),
                      std::move(labels_b));
}

NetPayoffMatrix net_payoff(const BimatrixGame& game) {
  return NetPayoffMatrix(game.a().transpose() - game.b());
}

PayoffPair payoffs(const BimatrixGame& game, const MixedStrategy& x,
                   const MixedStrategy& y) {
  if (x.dimension() != game.n() || y.dimension() != game.m()) {
    throw DimensionError("payoffs: strategy dimensions do not match the game");
  }
  return {dot(x.weights(), game.a().apply(y.weights())),
          dot(y.weights(), game.b().apply(x.weights()))};
}

namespace catalog {

namespace {

const Rational& require(const Params& params, const std::string& key,
                        const std::string& entry) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw DomainError("catalog entry '" + entry + "' requires parameter '" + key + "'");
  }
  return it->second;
}

long require_integer(const Params& params, const std::string& key,
                     const std::string& entry) {
  const Rational& v = require(params, key, entry);
  if (!v.is_integer() || !v.to_mpq().get_num().fits_slong_p()) {
    throw DomainError("parameter '" + key + "' of '" + entry + "' must be an integer");
  }
  return v.to_mpq().get_num().get_si();
}

}  // namespace

BimatrixGame hawk_dove(const Rational& g, const Rational& c) {
  Matrix a{{(g - c) / 2, g}, {0, g / 2}};
  return BimatrixGame(a, a, {"Hawk", "Dove"}, {"Hawk", "Dove"});
}

BimatrixGame symmetric_2x2(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d) {
  Matrix m{{a, b}, {c, d}};
  return BimatrixGame(m, m);
}

BimatrixGame three_strategy_cycle() {
  Matrix a{{1, 1, 4}, {2, 1, 1}, {3, 2, 5}};
  return BimatrixGame(a, a);
}

BimatrixGame only_b_insuperable() {
  Matrix l{{1, -10}, {-10, 1}};
  return BimatrixGame(l.transpose(), Matrix(2, 2));
}

BimatrixGame chain_store() {
  Matrix a{{5, 2}, {5, 0}};
  Matrix b{{1, 1}, {2, 0}};
  return BimatrixGame(a, b, {"C", "D"}, {"OUT", "IN"});
}

BimatrixGame ultimatum(long m_max) {
  if (m_max < 0) throw DomainError("ultimatum requires M >= 0");
  const auto offers = static_cast<std::size_t>(m_max) + 1;
  const auto thresholds = offers + 1;
  Matrix a(offers, thresholds);
  Matrix b(thresholds, offers);
  std::vector<std::string> labels_a, labels_b;
  for (std::size_t m = 0; m < offers; ++m) labels_a.push_back(std::to_string(m));
  for (std::size_t t = 0; t < thresholds; ++t) labels_b.push_back(">=" + std::to_string(t));
  for (std::size_t m = 0; m < offers; ++m) {
    for (std::size_t t = 0; t < thresholds; ++t) {
      if (t <= m) {
        a(m, t) = Rational(m_max - static_cast<long>(m));
        b(t, m) = Rational(static_cast<long>(m));
      }
    }
  }
  return BimatrixGame(std::move(a), std::move(b), std::move(labels_a),
                      std::move(labels_b));
}

BimatrixGame weak_selection(const BimatrixGame& base, long population) {
  if (population < 1) throw DomainError("weak_selection requires N >= 1");
  const Rational inv(1, population);
  Matrix a = base.a();
  Matrix b = base.b();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      a(i, j) = 1 + a(i, j) * inv;
      b(j, i) = 1 + b(j, i) * inv;
    }
  }
  return BimatrixGame(std::move(a), std::move(b), base.labels_a(), base.labels_b());
}

BimatrixGame by_name(const std::string& name, const Params& params) {
  BimatrixGame game = [&]() {
    if (name == "hawk_dove") {
      return hawk_dove(require(params, "G", name), require(params, "C", name));
    }
    if (name == "symmetric_2x2") {
      return symmetric_2x2(require(params, "a", name), require(params, "b", name),
                           require(params, "c", name), require(params, "d", name));
    }
    if (name == "three_strategy_cycle") return three_strategy_cycle();
    if (name == "only_b_insuperable") return only_b_insuperable();
    if (name == "chain_store") return chain_store();
    if (name == "ultimatum") return ultimatum(require_integer(params, "M", name));
    throw DomainError("unknown catalog game '" + name + "'");
  }();
  if (params.count("N")) return weak_selection(game, require_integer(params, "N", name));
  return game;
}

std::vector<std::string> names() {
  return {"hawk_dove", "symmetric_2x2", "three_strategy_cycle", "only_b_insuperable",
          "chain_store", "ultimatum"};
}

}  // namespace catalog

}  // namespace insuperable
