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

#ifndef INSUPERABLE_LINPROG_HPP_
#define INSUPERABLE_LINPROG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "insuperable/rational.hpp"

namespace insuperable {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class Bound { kNonNegative, kFree };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(LpStatus s);

// maximize objective·x subject to rows[i]·x (senses[i]) rhs[i] and the given
// per-variable bounds.
struct LinearProgram {
  RationalVector objective;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<Sense> senses;
  std::vector<Bound> bounds;

  LinearProgram() = default;
  explicit LinearProgram(std::size_t num_vars, Bound bound = Bound::kNonNegative)
      : objective(num_vars), bounds(num_vars, bound) {}

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }

  void add_row(RationalVector coeffs, Sense sense, Rational value);

  // Throws DimensionError unless every container agrees on its shape.
  void validate() const;
};

// Certificates, in the orientation of the original rows:
//  * kOptimal: `solution` attains `optimal_value`; `certificate` is an optimal
//    dual y with y_i >= 0 on <= rows, y_i <= 0 on >= rows, Aᵀy >= c on
//    non-negative variables, Aᵀy = c on free ones, and rhs·y = optimal_value.
//  * kInfeasible: `certificate` is a Farkas ray y with the same row signs,
//    Aᵀy >= 0 on non-negative variables, Aᵀy = 0 on free ones, rhs·y < 0.
//  * kUnbounded: `solution` is feasible and `ray` is a direction d that keeps
//    every row feasible with objective·d > 0.
struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimal_value;
  RationalVector solution;
  RationalVector certificate;
  RationalVector ray;
};

// Dense two-phase primal simplex with Bland's rule over exact rationals.
LpOutcome solve_lp(const LinearProgram& lp);

// Exact substitution check used by callers and tests.
bool satisfies_constraints(const LinearProgram& lp, const RationalVector& x);

}  // namespace insuperable

#endif  // INSUPERABLE_LINPROG_HPP_
