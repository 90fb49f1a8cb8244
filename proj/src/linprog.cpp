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

#include "insuperable/linprog.hpp"

#include <limits>
#include <optional>
#include <utility>

namespace insuperable {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

void LinearProgram::add_row(RationalVector coeffs, Sense sense, Rational value) {
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
}

void LinearProgram::validate() const {
  if (rows.size() != rhs.size() || rows.size() != senses.size()) {
    throw DimensionError("linear program: row, rhs and sense counts differ");
  }
  if (bounds.size() != objective.size()) {
    throw DimensionError("linear program: bound count differs from variable count");
  }
  for (const auto& r : rows) {
    if (r.size() != objective.size()) {
      throw DimensionError("linear program: row length differs from variable count");
    }
  }
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau. Column layout: structural columns (free variables
// split into a positive and a negative part), then one slack/surplus column per
// inequality row, then one artificial column per >= or = row. The last column
// holds the right-hand side. Row i's "starter" column is the one that formed
// the unit vector e_i in the initial basis.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t m = lp.num_rows();
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      pos_col_.push_back(num_struct_++);
      neg_col_.push_back(lp.bounds[j] == Bound::kFree ? num_struct_++ : kNone);
    }
    flipped_.assign(m, false);
    std::vector<Sense> sense(m);
    for (std::size_t i = 0; i < m; ++i) {
      sense[i] = lp.senses[i];
      if (lp.rhs[i].sign() < 0) {
        flipped_[i] = true;
        if (sense[i] == Sense::kLessEqual) {
          sense[i] = Sense::kGreaterEqual;
        } else if (sense[i] == Sense::kGreaterEqual) {
          sense[i] = Sense::kLessEqual;
        }
      }
    }
    std::size_t col = num_struct_;
    std::vector<std::size_t> slack(m, kNone);
    for (std::size_t i = 0; i < m; ++i) {
      if (sense[i] != Sense::kEqual) slack[i] = col++;
    }
    first_artificial_ = col;
    std::vector<std::size_t> artificial(m, kNone);
    for (std::size_t i = 0; i < m; ++i) {
      if (sense[i] != Sense::kLessEqual) artificial[i] = col++;
    }
    cols_ = col;
    stride_ = cols_ + 1;
    t_.assign(m * stride_, Rational());
    z_.assign(stride_, Rational());
    basis_.assign(m, kNone);
    starter_.assign(m, kNone);

    for (std::size_t i = 0; i < m; ++i) {
      const Rational sign = flipped_[i] ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        const Rational& a = lp.rows[i][j];
        if (a.is_zero()) continue;
        at(i, pos_col_[j]) = sign * a;
        if (neg_col_[j] != kNone) at(i, neg_col_[j]) = -(sign * a);
      }
      at(i, cols_) = sign * lp.rhs[i];
      if (sense[i] == Sense::kLessEqual) {
        at(i, slack[i]) = 1;
        basis_[i] = starter_[i] = slack[i];
      } else {
        if (sense[i] == Sense::kGreaterEqual) at(i, slack[i]) = -1;
        at(i, artificial[i]) = 1;
        basis_[i] = starter_[i] = artificial[i];
      }
    }
  }

  LpOutcome solve() {
    LpOutcome out;
    // Phase 1: maximize -(sum of artificials).
    cost_.assign(cols_, Rational());
    bool any_artificial = false;
    for (std::size_t c = first_artificial_; c < cols_; ++c) {
      cost_[c] = -1;
      any_artificial = true;
    }
    if (any_artificial) {
      reset_objective();
      run(/*allow_artificial=*/true);
      if (z_[cols_].sign() < 0) {
        out.status = LpStatus::kInfeasible;
        out.certificate = duals();
        return out;
      }
      drive_out_artificials();
    }

    // Phase 2: the original objective; artificial columns never re-enter.
    cost_.assign(cols_, Rational());
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      cost_[pos_col_[j]] = lp_.objective[j];
      if (neg_col_[j] != kNone) cost_[neg_col_[j]] = -lp_.objective[j];
    }
    reset_objective();
    std::optional<std::size_t> unbounded_col = run(/*allow_artificial=*/false);
    out.solution = primal();
    if (unbounded_col) {
      out.status = LpStatus::kUnbounded;
      out.ray = ray(*unbounded_col);
      return out;
    }
    out.status = LpStatus::kOptimal;
    out.optimal_value = z_[cols_];
    out.certificate = duals();
    return out;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return t_[r * stride_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r * stride_ + c]; }
  std::size_t num_rows() const { return basis_.size(); }

  // z_j = c_B B^{-1} a_j - c_j; the last entry is the objective value.
  void reset_objective() {
    for (std::size_t c = 0; c < cols_; ++c) z_[c] = -cost_[c];
    z_[cols_] = Rational();
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rational& cb = cost_[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c <= cols_; ++c) fused_add_mul(z_[c], cb, at(r, c));
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / at(pr, pc);
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (at(pr, c).is_zero()) continue;
      at(pr, c) *= inv;
      nz.push_back(c);
    }
    auto eliminate = [&](Rational* row) {
      if (row[pc].is_zero()) return;
      const Rational f = row[pc];
      for (std::size_t c : nz) row[c] -= f * at(pr, c);
    };
    for (std::size_t r = 0; r < num_rows(); ++r) {
      if (r != pr) eliminate(&t_[r * stride_]);
    }
    eliminate(z_.data());
    basis_[pr] = pc;
  }

  // Bland's rule: lowest-index improving column, then the lowest-index basic
  // variable among the minimum-ratio rows. Returns the entering column when
  // the program is unbounded in it.
  std::optional<std::size_t> run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : first_artificial_;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < limit; ++c) {
        if (z_[c].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return std::nullopt;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (at(r, enter).sign() <= 0) continue;
        Rational ratio = at(r, cols_) / at(r, enter);
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < num_rows(); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (std::size_t c = 0; c < first_artificial_; ++c) {
        if (!at(r, c).is_zero()) {
          pivot(r, c);
          break;
        }
      }
      // A row with no non-artificial entry is redundant; its artificial stays
      // basic at level zero and no later pivot can change it.
    }
  }

  RationalVector column_values() const {
    RationalVector v(cols_);
    for (std::size_t r = 0; r < num_rows(); ++r) v[basis_[r]] = at(r, cols_);
    return v;
  }

  RationalVector primal() const {
    const RationalVector v = column_values();
    RationalVector x(lp_.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = v[pos_col_[j]];
      if (neg_col_[j] != kNone) x[j] -= v[neg_col_[j]];
    }
    return x;
  }

  RationalVector ray(std::size_t enter) const {
    RationalVector d(cols_);
    d[enter] = 1;
    for (std::size_t r = 0; r < num_rows(); ++r) d[basis_[r]] = -at(r, enter);
    RationalVector x(lp_.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = d[pos_col_[j]];
      if (neg_col_[j] != kNone) x[j] -= d[neg_col_[j]];
    }
    return x;
  }

  // y_i = c_B B^{-1} e_i, read from the starter column of row i.
  RationalVector duals() const {
    RationalVector y(num_rows());
    for (std::size_t r = 0; r < num_rows(); ++r) {
      y[r] = z_[starter_[r]] + cost_[starter_[r]];
      if (flipped_[r]) y[r] = -y[r];
    }
    return y;
  }

  const LinearProgram& lp_;
  std::size_t num_struct_ = 0;
  std::vector<std::size_t> pos_col_, neg_col_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  RationalVector t_;
  RationalVector z_;
  RationalVector cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> starter_;
  std::vector<bool> flipped_;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();
  return Tableau(lp).solve();
}

bool satisfies_constraints(const LinearProgram& lp, const RationalVector& x) {
  lp.validate();
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.bounds[j] == Bound::kNonNegative && x[j].sign() < 0) return false;
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const Rational lhs = dot(lp.rows[i], x);
    switch (lp.senses[i]) {
      case Sense::kLessEqual:
        if (lhs > lp.rhs[i]) return false;
        break;
      case Sense::kEqual:
        if (lhs != lp.rhs[i]) return false;
        break;
      case Sense::kGreaterEqual:
        if (lhs < lp.rhs[i]) return false;
        break;
    }
  }
  return true;
}

}  // namespace insuperable
