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

#ifndef INSUPERABLE_GAME_HPP_
#define INSUPERABLE_GAME_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "insuperable/matrix.hpp"
#include "insuperable/rational.hpp"

namespace insuperable {

enum class Player { kA, kB };

std::string to_string(Player p);

// A point of the probability simplex. Construction validates that every weight
// is non-negative and that the weights sum to exactly one.
class MixedStrategy {
 public:
  explicit MixedStrategy(RationalVector weights);

  static MixedStrategy pure(std::size_t dimension, std::size_t index);
  static MixedStrategy uniform(std::size_t dimension);

  std::size_t dimension() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const RationalVector& weights() const { return weights_; }

  std::vector<std::size_t> support() const;
  bool is_pure() const { return support().size() == 1; }

  std::string str() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  RationalVector weights_;
};

// Two-player normal-form game. Player A has n pure strategies and payoff
// matrix A (n x m); player B has m pure strategies and payoff matrix B (m x n).
class BimatrixGame {
 public:
  BimatrixGame(Matrix a, Matrix b, std::vector<std::string> labels_a = {},
               std::vector<std::string> labels_b = {});

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  std::size_t n() const { return a_.rows(); }
  std::size_t m() const { return a_.cols(); }
  bool symmetric() const { return symmetric_; }
  const std::vector<std::string>& labels_a() const { return labels_a_; }
  const std::vector<std::string>& labels_b() const { return labels_b_; }

  std::size_t dimension(Player p) const { return p == Player::kA ? n() : m(); }
  // Label of pure strategy i for player p, or its 1-based index when unnamed.
  std::string label(Player p, std::size_t i) const;

  // Both payoff matrices multiplied by lambda (labels kept).
  BimatrixGame scaled(const Rational& lambda) const;

 private:
  Matrix a_;
  Matrix b_;
  std::vector<std::string> labels_a_;
  std::vector<std::string> labels_b_;
  bool symmetric_ = false;
};

// L = Aᵀ - B, an m x n matrix. yᵀ L x is player A's payoff minus player B's.
class NetPayoffMatrix {
 public:
  explicit NetPayoffMatrix(Matrix l);

  const Matrix& matrix() const { return l_; }
  std::size_t rows() const { return l_.rows(); }
  std::size_t cols() const { return l_.cols(); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return l_(r, c); }

  bool antisymmetric() const;

 private:
  Matrix l_;
};

struct PayoffPair {
  Rational a;  // xᵀ A y
  Rational b;  // yᵀ B x
};

BimatrixGame make_bimatrix(Matrix a, Matrix b, std::vector<std::string> labels_a = {},
                           std::vector<std::string> labels_b = {});

NetPayoffMatrix net_payoff(const BimatrixGame& game);

PayoffPair payoffs(const BimatrixGame& game, const MixedStrategy& x,
                   const MixedStrategy& y);

// Catalog of worked example games. Parameters are exact rationals.
namespace catalog {

using Params = std::map<std::string, Rational>;

// Hawk-dove with prize G and fight cost C: A = B = [[(G-C)/2, G], [0, G/2]].
BimatrixGame hawk_dove(const Rational& g, const Rational& c);
// Symmetric game A = B = [[a, b], [c, d]].
BimatrixGame symmetric_2x2(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d);
BimatrixGame three_strategy_cycle();
// Realizes L = [[1, -10], [-10, 1]] with A = Lᵀ and B = 0.
BimatrixGame only_b_insuperable();
BimatrixGame chain_store();
// Donor offers m in 0..M; receiver accepts offers >= m' for m' in 0..M+1.
BimatrixGame ultimatum(long m_max);
// Entries 1 + base/N for both players.
BimatrixGame weak_selection(const BimatrixGame& base, long population);

// Dispatches on name. Required parameters per entry:
//   hawk_dove: G, C; symmetric_2x2: a, b, c, d; ultimatum: M.
// A parameter "N" additionally wraps the result in weak_selection.
BimatrixGame by_name(const std::string& name, const Params& params);

std::vector<std::string> names();

}  // namespace catalog

}  // namespace insuperable

#endif  // INSUPERABLE_GAME_HPP_
