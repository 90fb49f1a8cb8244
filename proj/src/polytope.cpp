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

#include "insuperable/polytope.hpp"

#include <set>
#include <utility>

#include "insuperable/matrix.hpp"

namespace insuperable {

void Polyhedron::add_equality(RationalVector row, Rational rhs) {
  if (row.size() != dim) throw DimensionError("polyhedron: equality row length");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void Polyhedron::add_inequality(RationalVector row, Rational rhs) {
  if (row.size() != dim) throw DimensionError("polyhedron: inequality row length");
  ineq_rows.push_back(std::move(row));
  ineq_rhs.push_back(std::move(rhs));
}

bool Polyhedron::contains(const RationalVector& x) const {
  if (x.size() != dim) return false;
  for (std::size_t i = 0; i < eq_rows.size(); ++i) {
    if (dot(eq_rows[i], x) != eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < ineq_rows.size(); ++i) {
    if (dot(ineq_rows[i], x) < ineq_rhs[i]) return false;
  }
  return true;
}

namespace {

// Indices of a maximal linearly independent subset of rows, chosen greedily
// in order.
std::vector<std::size_t> independent_rows(const std::vector<RationalVector>& rows,
                                          std::size_t dim) {
  std::vector<std::size_t> kept;
  std::vector<RationalVector> chosen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    chosen.push_back(rows[i]);
    Matrix m(chosen.size(), dim);
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = chosen[r][c];
    }
    if (rank(std::move(m)) == chosen.size()) {
      kept.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  return kept;
}

}  // namespace

std::vector<RationalVector> enumerate_vertices(const Polyhedron& p) {
  const std::size_t d = p.dim;
  const std::vector<std::size_t> eq = independent_rows(p.eq_rows, d);
  if (eq.size() > d) return {};
  const std::size_t k = d - eq.size();
  const std::size_t q = p.ineq_rows.size();
  std::set<RationalVector> found;
  if (k > q) return {};

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    Matrix m(d, d);
    RationalVector rhs(d);
    std::size_t r = 0;
    for (std::size_t e : eq) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = p.eq_rows[e][c];
      rhs[r++] = p.eq_rhs[e];
    }
    for (std::size_t g : pick) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = p.ineq_rows[g][c];
      rhs[r++] = p.ineq_rhs[g];
    }
    RationalVector x;
    if (solve_square(std::move(m), std::move(rhs), x) && p.contains(x)) {
      found.insert(std::move(x));
    }
    // Next k-combination of 0..q-1 in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == q - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace insuperable
