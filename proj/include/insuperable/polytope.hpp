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

#ifndef INSUPERABLE_POLYTOPE_HPP_
#define INSUPERABLE_POLYTOPE_HPP_

#include <cstddef>
#include <vector>

#include "insuperable/rational.hpp"

namespace insuperable {

// {x in Q^dim : eq_rows x = eq_rhs, ineq_rows x >= ineq_rhs}
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<RationalVector> eq_rows;
  RationalVector eq_rhs;
  std::vector<RationalVector> ineq_rows;
  RationalVector ineq_rhs;

  explicit Polyhedron(std::size_t d = 0) : dim(d) {}
  void add_equality(RationalVector row, Rational rhs);
  void add_inequality(RationalVector row, Rational rhs);
  bool contains(const RationalVector& x) const;
};

// All vertices, sorted lexicographically and deduplicated. Every subset of
// inequalities that completes the equality system to a nonsingular square
// system is tried, so the cost is binomial in the inequality count; callers
// bound the dimension.
std::vector<RationalVector> enumerate_vertices(const Polyhedron& p);

}  // namespace insuperable

#endif  // INSUPERABLE_POLYTOPE_HPP_
