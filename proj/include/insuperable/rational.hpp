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

#ifndef INSUPERABLE_RATIONAL_HPP_
#define INSUPERABLE_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace insuperable {

// Raised for malformed textual input (rationals, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation's mathematical precondition does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an input exceeds a configured enumeration cap.
class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Exact arbitrary-precision rational, always in lowest terms with a positive
// denominator. Values whose numerator and denominator fit in 64 bits are kept
// inline; anything larger lives in a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : n_(v) {}        // NOLINT(runtime/explicit)
  Rational(long v) : n_(v) {}       // NOLINT(runtime/explicit)
  Rational(long long v) : n_(v) {}  // NOLINT(runtime/explicit)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o)
      : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "p/q", and decimal literals such as "-0.125" or "2.5e-3".
  // Decimal input is converted exactly; no binary rounding takes place.
  static Rational parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Decimal rendering with the given number of significant digits.
  std::string decimal(int significant_digits = 12) const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_integer() const { return !big_ && d_ == 1; }
  std::string numerator() const;
  std::string denominator() const;

  mpq_class to_mpq() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Stores q, moving it inline when it fits.
  void assign(mpq_class q);
  void assign_small(__int128 num, __int128 den);

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<mpq_class> big_;  // set only when the value does not fit inline
};

Rational abs(const Rational& r);
// out += a * b
void fused_add_mul(Rational& out, const Rational& a, const Rational& b);

using RationalVector = std::vector<Rational>;

Rational sum(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace insuperable

#endif  // INSUPERABLE_RATIONAL_HPP_
