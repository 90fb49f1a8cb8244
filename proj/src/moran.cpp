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

#include "insuperable/moran.hpp"

#include <algorithm>
#include <utility>

namespace insuperable {

TwoByTwoPayoff TwoByTwoPayoff::from_game(const BimatrixGame& game) {
  if (game.n() != 2 || game.m() != 2 || !game.symmetric()) {
    throw DimensionError("expected a symmetric 2x2 game");
  }
  const Matrix& a = game.a();
  return {a(0, 0), a(0, 1), a(1, 0), a(1, 1)};
}

BimatrixGame TwoByTwoPayoff::to_game() const {
  return catalog::symmetric_2x2(a, b, c, d);
}

namespace {

void check_state(long k, long n) {
  if (n < 2) throw DomainError("population size N must be >= 2, got " + std::to_string(n));
  if (k < 1 || k > n - 1) {
    throw DomainError("state k=" + std::to_string(k) + " outside 1..N-1 for N=" +
                      std::to_string(n));
  }
}

}  // namespace

Rational fitness_a(const TwoByTwoPayoff& p, long k, long n) {
  return p.a * Rational(k - 1) + p.b * Rational(n - k);
}

Rational fitness_b(const TwoByTwoPayoff& p, long k, long n) {
  return p.c * Rational(k) + p.d * Rational(n - k - 1);
}

Rational relative_fitness(const TwoByTwoPayoff& p, long k, long n) {
  check_state(k, n);
  const Rational den = fitness_b(p, k, n);
  if (den.is_zero()) {
    throw DomainError("relative fitness undefined: ck + d(N-k-1) = 0 at k=" +
                      std::to_string(k) + ", N=" + std::to_string(n));
  }
  return fitness_a(p, k, n) / den;
}

bool a_fitter(const TwoByTwoPayoff& p, long k, long n) {
  return relative_fitness(p, k, n) > Rational(1);
}

FixationVector fixation_probabilities(const TwoByTwoPayoff& p, long n) {
  if (n < 2) throw DomainError("population size N must be >= 2, got " + std::to_string(n));
  // partial[j] = prod_{k=1}^{j} gamma_k, gamma_k = f_B(k) / f_A(k).
  RationalVector partial(static_cast<std::size_t>(n));
  partial[0] = 1;
  for (long k = 1; k <= n - 1; ++k) {
    const Rational fa = fitness_a(p, k, n);
    const Rational fb = fitness_b(p, k, n);
    if (fa.sign() <= 0) {
      throw DomainError("A fitness a(k-1) + b(N-k) = " + fa.str() + " is not positive at k=" +
                        std::to_string(k) + ", N=" + std::to_string(n));
    }
    if (fb.sign() < 0) {
      throw DomainError("B fitness ck + d(N-k-1) = " + fb.str() + " is negative at k=" +
                        std::to_string(k) + ", N=" + std::to_string(n));
    }
    const auto j = static_cast<std::size_t>(k);
    partial[j] = partial[j - 1] * fb / fa;
  }
  FixationVector out;
  out.n = n;
  out.f.assign(static_cast<std::size_t>(n + 1), Rational());
  Rational running;
  for (long i = 1; i <= n; ++i) {
    running += partial[static_cast<std::size_t>(i - 1)];
    out.f[static_cast<std::size_t>(i)] = running;
  }
  const Rational total = running;
  for (auto& v : out.f) v /= total;
  return out;
}

CriticalSizes critical_sizes(const TwoByTwoPayoff& p) {
  auto require = [](bool ok, const std::string& what, const std::string& got) {
    if (!ok) throw DomainError("critical_sizes requires " + what + "; got " + got);
  };
  require(p.a.sign() > 0, "a > 0", "a=" + p.a.str());
  require(p.c > p.a, "c > a (B dominates A)", "a=" + p.a.str() + ", c=" + p.c.str());
  require(p.b > p.c, "b > c (A strictly insuperable)", "b=" + p.b.str() + ", c=" + p.c.str());
  require(p.d > p.b, "d > b (B dominates A)", "b=" + p.b.str() + ", d=" + p.d.str());
  const Rational s1 = (p.d - p.a) / (p.d - p.b);
  const Rational s2 = (p.d - p.a) / (p.c - p.a);
  return {std::min(s1, s2), std::max(s1, s2)};
}

ScanResult weak_selection_scan(const TwoByTwoPayoff& base, long n_max) {
  return fixation_scan(base, n_max, true);
}

ScanResult fixation_scan(const TwoByTwoPayoff& base, long n_max, bool weak) {
  if (n_max < 2) throw DomainError("scan needs N_max >= 2");
  ScanResult res;
  bool run_open = true;
  for (long n = 2; n <= n_max; ++n) {
    ScanRow row;
    row.n = n;
    row.neutral = Rational(1, n);
    const Rational inv(1, n);
    const TwoByTwoPayoff w = weak ? TwoByTwoPayoff{1 + base.a * inv, 1 + base.b * inv,
                                                   1 + base.c * inv, 1 + base.d * inv}
                                  : base;
    if (w.a.sign() <= 0 || w.b.sign() <= 0 || w.c.sign() <= 0 || w.d.sign() <= 0) {
      row.valid = false;
      row.note = "non-positive payoff entry";
    } else {
      try {
        row.f1 = fixation_probabilities(w, n).f[1];
        row.delta_sign = (row.f1 - row.neutral).sign();
      } catch (const DomainError& e) {
        row.valid = false;
        row.note = e.what();
      }
    }
    if (row.valid && run_open) {
      if (row.delta_sign > 0) {
        res.n_c = n;
      } else {
        run_open = false;
      }
    }
    res.rows.push_back(std::move(row));
  }
  return res;
}

}  // namespace insuperable
