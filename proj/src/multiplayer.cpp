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

#include "insuperable/multiplayer.hpp"

#include <utility>

namespace insuperable {

NPlayerTwoStrategyGame::NPlayerTwoStrategyGame(long n, RationalVector a, RationalVector b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
  if (n_ < 2) throw DomainError("N-player game needs N >= 2, got " + std::to_string(n_));
  const auto len = static_cast<std::size_t>(n_);
  if (a_.size() != len || b_.size() != len) {
    throw DimensionError("N-player game: payoff vectors must have length N=" +
                         std::to_string(n_));
  }
}

NPlayerTwoStrategyGame NPlayerTwoStrategyGame::scaled(const Rational& lambda) const {
  RationalVector a = a_;
  RationalVector b = b_;
  for (auto& v : a) v *= lambda;
  for (auto& v : b) v *= lambda;
  return {n_, std::move(a), std::move(b)};
}

NPlayerReport n_player_classify(const NPlayerTwoStrategyGame& g) {
  const auto& a = g.a();
  const auto& b = g.b();
  const std::size_t n = a.size();
  NPlayerReport r;
  r.a_insuperable = r.b_insuperable = true;
  r.a_strictly_insuperable = r.b_strictly_insuperable = true;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    r.a_insuperable = r.a_insuperable && a[k] >= b[k + 1];
    r.b_insuperable = r.b_insuperable && b[k + 1] >= a[k];
    r.a_strictly_insuperable = r.a_strictly_insuperable && a[k] > b[k + 1];
    r.b_strictly_insuperable = r.b_strictly_insuperable && b[k + 1] > a[k];
  }
  r.a_dominates = r.b_dominates = true;
  r.a_strictly_dominates = r.b_strictly_dominates = true;
  for (std::size_t k = 0; k < n; ++k) {
    r.a_dominates = r.a_dominates && a[k] >= b[k];
    r.b_dominates = r.b_dominates && b[k] >= a[k];
    r.a_strictly_dominates = r.a_strictly_dominates && a[k] > b[k];
    r.b_strictly_dominates = r.b_strictly_dominates && b[k] > a[k];
  }
  return r;
}

namespace {

bool affine(const RationalVector& v) {
  for (std::size_t k = 2; k < v.size(); ++k) {
    if (v[k] - v[k - 1] != v[k - 1] - v[k - 2]) return false;
  }
  return true;
}

}  // namespace

ReductionResult is_reducible(const NPlayerTwoStrategyGame& g) {
  ReductionResult r;
  if (!affine(g.a()) || !affine(g.b())) return r;
  const auto last = static_cast<std::size_t>(g.n() - 1);
  r.reducible = true;
  r.two_player = catalog::symmetric_2x2(g.a()[last], g.a()[0], g.b()[last], g.b()[0]);
  return r;
}

NPlayerTwoStrategyGame extend_to_n(const BimatrixGame& two, long n) {
  if (two.n() != 2 || two.m() != 2 || !two.symmetric()) {
    throw DimensionError("extend_to_n expects a symmetric 2x2 game");
  }
  if (n < 2) throw DomainError("extend_to_n needs N >= 2, got " + std::to_string(n));
  const Matrix& m = two.a();
  const Rational& a1 = m(0, 0);
  const Rational& a0 = m(0, 1);
  const Rational& b1 = m(1, 0);
  const Rational& b0 = m(1, 1);
  RationalVector a(static_cast<std::size_t>(n));
  RationalVector b(static_cast<std::size_t>(n));
  const Rational denom(n - 1);
  for (long k = 0; k < n; ++k) {
    const Rational kk(k);
    const Rational rest(n - k - 1);
    a[static_cast<std::size_t>(k)] = (kk * a1 + rest * a0) / denom;
    b[static_cast<std::size_t>(k)] = (kk * b1 + rest * b0) / denom;
  }
  return {n, std::move(a), std::move(b)};
}

NPlayerTwoStrategyGame normalize_for_reduction(const NPlayerTwoStrategyGame& g) {
  RationalVector a = g.a();
  RationalVector b = g.b();
  const std::size_t n = a.size();
  if (n >= 3) {
    // a[0..N-2] determine the line for a; b[1..N-1] the line for b.
    RationalVector head(a.begin(), a.end() - 1);
    if (affine(head)) a[n - 1] = a[n - 2] + (a[n - 2] - a[n - 3]);
    RationalVector tail(b.begin() + 1, b.end());
    if (affine(tail)) b[0] = b[1] - (b[2] - b[1]);
  }
  return {g.n(), std::move(a), std::move(b)};
}

PropagationReport propagation_check(const NPlayerTwoStrategyGame& g3) {
  PropagationReport r;
  if (g3.n() != 3) {
    r.reason = "requires N = 3";
    return r;
  }
  const auto& a = g3.a();
  const auto& b = g3.b();
  r.a0 = a[0];
  r.a1 = a[1];
  r.a2 = a[2];
  r.b2 = b[2];
  const ReductionResult red = is_reducible(g3);
  if (!red.reducible) {
    r.reason = "game is not reducible";
    return r;
  }
  if (!n_player_classify(g3).a_insuperable) {
    r.reason = "A is not insuperable in the 3-player game";
    return r;
  }
  if (b[2] < a[2]) {
    r.reason = "hypothesis b[2] >= a[2] fails";
    return r;
  }
  r.applicable = true;
  r.b2_le_a1 = b[2] <= a[1];
  r.a1_is_midpoint = a[1] == (a[0] + a[2]) / Rational(2);
  const Rational bound = Rational(2) * b[2] - a[2];
  r.a0_ge_2b2_minus_a2 = a[0] >= bound;
  r.bound_ge_b2 = bound >= b[2];
  const Matrix& two = red.two_player->a();
  r.reduced_a_insuperable = two(0, 1) >= two(1, 0);  // a0 >= b1 in the 2-player game
  r.chain_holds = r.b2_le_a1 && r.a1_is_midpoint && r.a0_ge_2b2_minus_a2 && r.bound_ge_b2 &&
                  r.reduced_a_insuperable;
  return r;
}

namespace n_catalog {

namespace {

void require_positive(const Rational& v, const std::string& name) {
  if (v.sign() <= 0) throw DomainError(name + " must be > 0, got " + v.str());
}

void require_n(long n) {
  if (n < 2) throw DomainError("N must be >= 2, got " + std::to_string(n));
}

const Rational& param(const catalog::Params& p, const std::string& key,
                      const std::string& name) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError(name + " requires parameter " + key);
  return it->second;
}

long integer_param(const catalog::Params& p, const std::string& key, const std::string& name) {
  const Rational& v = param(p, key, name);
  if (!v.is_integer()) throw DomainError(name + ": " + key + " must be an integer");
  const mpq_class q = v.to_mpq();
  if (!q.get_num().fits_slong_p()) throw DomainError(name + ": " + key + " out of range");
  return q.get_num().get_si();
}

}  // namespace

NPlayerTwoStrategyGame pgg(const Rational& r, long n) {
  require_positive(r, "r");
  require_n(n);
  RationalVector a(static_cast<std::size_t>(n));
  RationalVector b(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    a[static_cast<std::size_t>(k)] = Rational(k + 1) * r / Rational(n) - 1;
    b[static_cast<std::size_t>(k)] = Rational(k) * r / Rational(n);
  }
  return {n, std::move(a), std::move(b)};
}

NPlayerTwoStrategyGame zerinho_original() { return {3, {0, 2, 1}, {1, 2, 0}}; }

NPlayerTwoStrategyGame zerinho_modified(const Rational& alpha) {
  require_positive(alpha, "alpha");
  const Rational half = alpha / Rational(2);
  return {3, {0, half, alpha}, {alpha, half, 0}};
}

NPlayerTwoStrategyGame zerinho_n(const Rational& alpha, long n) {
  require_positive(alpha, "alpha");
  require_n(n);
  RationalVector a(static_cast<std::size_t>(n));
  RationalVector b(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    a[static_cast<std::size_t>(k)] = Rational(k) * alpha;
    b[static_cast<std::size_t>(k)] = Rational(n - 1 - k) * alpha;
  }
  return {n, std::move(a), std::move(b)};
}

NPlayerTwoStrategyGame by_name(const std::string& name, const catalog::Params& params) {
  if (name == "pgg") return pgg(param(params, "r", name), integer_param(params, "N", name));
  if (name == "zerinho_original") return zerinho_original();
  if (name == "zerinho_modified") return zerinho_modified(param(params, "alpha", name));
  if (name == "zerinho_n") {
    return zerinho_n(param(params, "alpha", name), integer_param(params, "N", name));
  }
  throw DomainError("unknown N-player catalog entry '" + name + "'");
}

std::vector<std::string> names() {
  return {"pgg", "zerinho_original", "zerinho_modified", "zerinho_n"};
}

}  // namespace n_catalog

}  // namespace insuperable
