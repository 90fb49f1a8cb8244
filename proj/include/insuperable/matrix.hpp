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

#ifndef INSUPERABLE_MATRIX_HPP_
#define INSUPERABLE_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "insuperable/rational.hpp"

namespace insuperable {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Row-wise literal; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  // M v and vᵀ M.
  RationalVector apply(const RationalVector& v) const;
  RationalVector apply_left(const RationalVector& v) const;

  Matrix& operator*=(const Rational& s);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

// Solves the square system M x = b exactly. Returns false when M is singular.
bool solve_square(Matrix m, RationalVector b, RationalVector& x);

// Rank by exact Gaussian elimination.
std::size_t rank(Matrix m);

}  // namespace insuperable

#endif  // INSUPERABLE_MATRIX_HPP_
