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

#include "insuperable/rational.hpp"

#include <cctype>
#include <climits>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace insuperable {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = INT64_MAX;

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(u & ~0UL));
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  unsigned __int128 un = n < 0 ? -n : n;
  std::uint64_t g = std::gcd(static_cast<std::uint64_t>(un), static_cast<std::uint64_t>(d));
  if (g == 0) g = 1;
  assign_small(n / g, d / g);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(std::move(c));
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    n_ = o.n_;
    d_ = o.d_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Rational::assign(mpq_class q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != INT64_MIN) {
    n_ = num.get_si();
    d_ = den.get_si();
    big_.reset();
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

void Rational::assign_small(i128 num, i128 den) {
  if (fits(num) && fits(den)) {
    n_ = static_cast<std::int64_t>(num);
    d_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    assign(mpq_class(to_mpz(num), to_mpz(den)));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(n_) / static_cast<double>(d_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

std::string Rational::numerator() const {
  return big_ ? big_->get_num().get_str() : std::to_string(n_);
}

std::string Rational::denominator() const {
  return big_ ? big_->get_den().get_str() : std::to_string(d_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (o.n_ == 0) return *this;
    if (n_ == 0) return *this = o;
    const std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(d_),
                                    static_cast<std::uint64_t>(o.d_));
    if (g == 1) {
      assign_small(static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_,
                   static_cast<i128>(d_) * o.d_);
      return *this;
    }
    const std::int64_t da = d_ / static_cast<std::int64_t>(g);
    const std::int64_t db = o.d_ / static_cast<std::int64_t>(g);
    const i128 t = static_cast<i128>(n_) * db + static_cast<i128>(o.n_) * da;
    if (t == 0) {
      n_ = 0;
      d_ = 1;
      return *this;
    }
    const i128 tm = t % static_cast<i128>(g);
    const std::uint64_t g2 =
        gcd_u64(static_cast<std::uint64_t>(tm < 0 ? -tm : tm), g);
    assign_small(t / g2, static_cast<i128>(da) * (o.d_ / static_cast<std::int64_t>(g2)));
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (n_ == 0) return *this;
    if (o.n_ == 0) {
      n_ = 0;
      d_ = 1;
      return *this;
    }
    const std::int64_t g1 = static_cast<std::int64_t>(
        gcd_u64(abs_u64(n_), static_cast<std::uint64_t>(o.d_)));
    const std::int64_t g2 = static_cast<std::int64_t>(
        gcd_u64(abs_u64(o.n_), static_cast<std::uint64_t>(d_)));
    assign_small(static_cast<i128>(n_ / g1) * (o.n_ / g2),
                 static_cast<i128>(d_ / g2) * (o.d_ / g1));
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (!o.big_) {
    // Multiply by the reciprocal, keeping the denominator positive.
    Rational r;
    r.n_ = o.n_ < 0 ? -o.d_ : o.d_;
    r.d_ = o.n_ < 0 ? -o.n_ : o.n_;
    return *this *= r;
  }
  assign(to_mpq() / o.to_mpq());
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  if (a.big_) {
    r.big_ = std::make_unique<mpq_class>(-*a.big_);
  } else {
    r.n_ = -a.n_;
    r.d_ = a.d_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in size class
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c;
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.n_) * b.d_;
    const i128 r = static_cast<i128>(b.n_) * a.d_;
    c = l < r ? -1 : (l > r ? 1 : 0);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  // Decimal / scientific notation, parsed digit by digit.
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ez = parse_integer(s.substr(e + 1), text);
    if (!ez.fits_slong_p() || abs(ez) > 100000) {
      throw ParseError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpq_class q;
  if (exponent >= 0) {
    q = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    q = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::decimal(int significant_digits) const {
  if (is_zero()) return "0";
  // Scale so that |q| * 10^shift has `significant_digits` integer digits,
  // round half away from zero, then place the decimal point.
  mpq_class a = ::abs(to_mpq());
  long magnitude = 0;  // floor(log10(a))
  {
    mpz_class ip = a.get_num() / a.get_den();
    if (ip > 0) {
      magnitude = static_cast<long>(ip.get_str().size()) - 1;
    } else {
      mpq_class t = a;
      while (t < 1) {
        t *= 10;
        --magnitude;
      }
    }
  }
  long shift = significant_digits - 1 - magnitude;
  mpq_class scaled = a;
  if (shift >= 0) {
    scaled *= mpq_class(pow10(static_cast<unsigned long>(shift)));
  } else {
    scaled /= mpq_class(pow10(static_cast<unsigned long>(-shift)));
  }
  mpz_class twice = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  std::string d = twice.get_str();
  if (static_cast<long>(d.size()) > significant_digits) {
    // Rounding carried into a new digit (e.g. 9.99 -> 10.0).
    d.pop_back();
    --shift;
  }
  std::string out;
  if (shift <= 0) {
    out = d + std::string(static_cast<size_t>(-shift), '0');
  } else if (static_cast<long>(d.size()) > shift) {
    out = d.substr(0, d.size() - shift) + "." + d.substr(d.size() - shift);
  } else {
    out = "0." + std::string(static_cast<size_t>(shift - d.size()), '0') + d;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return (sign() < 0 ? "-" : "") + out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

void fused_add_mul(Rational& out, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  out += a * b;
}

Rational sum(const RationalVector& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) fused_add_mul(s, a[i], b[i]);
  return s;
}

}  // namespace insuperable
