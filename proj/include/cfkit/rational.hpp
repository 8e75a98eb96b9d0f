// Copyright 2026 The cfkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CFKIT_RATIONAL_HPP_
#define CFKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cfkit {

using BigInt = mpz_class;

// Exact rational number in canonical form: the denominator is positive and
// coprime to the numerator after every public operation.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const BigInt& value);
  Rational(const BigInt& num, const BigInt& den);

  // Parses "p", "-p" or "p/q" with decimal integers p, q (q != 0).
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  // Integer power; negative exponents invert.
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // "p/q", or "p" when q == 1.
  std::string str() const;
  // Lossy; for display and heuristics only.
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// floor(x) and ceil(x) as integers.
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

// 10^k as an exact rational (k may be negative).
Rational pow10(long k);

// Decimal expansion of x truncated toward zero at `digits` fractional places.
// A minus sign is printed only when the truncated value is nonzero.
std::string to_decimal(const Rational& x, unsigned digits);

// Scientific notation "d.dd...e[+-]XX" with `significant` digits; the
// mantissa is truncated toward zero. Zero renders as "0".
std::string to_scientific(const Rational& x, unsigned significant);

}  // namespace cfkit

#endif  // CFKIT_RATIONAL_HPP_
