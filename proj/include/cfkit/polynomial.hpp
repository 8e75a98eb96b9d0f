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

#ifndef CFKIT_POLYNOMIAL_HPP_
#define CFKIT_POLYNOMIAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "cfkit/rational.hpp"

namespace cfkit {

// Univariate polynomial over Q in the index variable n. Coefficients are in
// ascending powers and carry no trailing zeros; the zero polynomial has no
// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  // The polynomial n.
  static Polynomial variable();
  // a*n + b.
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  Rational eval(const Rational& n) const;
  Polynomial derivative() const;
  // p(n + k).
  Polynomial shifted(const Rational& k) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(Polynomial l, const Polynomial& r) { return l *= r; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Euclidean division; throws DivisionByZeroError on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                                  const Polynomial& den);
  // Monic gcd (zero iff both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  // Distinct integer roots in [lo, hi], ascending. The polynomial must be
  // nonzero.
  std::vector<long> integer_roots(long lo, long hi) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Rational function num(n)/den(n) in canonical form: num and den are coprime,
// have integer coefficients with no common content, and den has a positive
// leading coefficient. Zero is 0/1. Canonical form makes == field equality.
class PolyRat {
 public:
  PolyRat() : den_(Rational(1)) {}
  PolyRat(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PolyRat(const Polynomial& poly);    // NOLINT(google-explicit-constructor)
  // Throws DivisionByZeroError if den is the zero polynomial.
  PolyRat(const Polynomial& num, const Polynomial& den);

  static PolyRat variable() { return PolyRat(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // deg(num) - deg(den); meaningless for zero.
  int degree() const { return num_.degree() - den_.degree(); }
  // Ratio of leading coefficients; zero for the zero function.
  Rational leading() const;

  // Throws DivisionByZeroError when den(n) == 0.
  Rational eval(const Rational& n) const;
  // f(n + k).
  PolyRat shifted(const Rational& k) const;
  PolyRat inverse() const;

  PolyRat& operator+=(const PolyRat& rhs);
  PolyRat& operator-=(const PolyRat& rhs);
  PolyRat& operator*=(const PolyRat& rhs);
  PolyRat& operator/=(const PolyRat& rhs);
  friend PolyRat operator+(PolyRat l, const PolyRat& r) { return l += r; }
  friend PolyRat operator-(PolyRat l, const PolyRat& r) { return l -= r; }
  friend PolyRat operator*(PolyRat l, const PolyRat& r) { return l *= r; }
  friend PolyRat operator/(PolyRat l, const PolyRat& r) { return l /= r; }
  PolyRat operator-() const;
  friend bool operator==(const PolyRat&, const PolyRat&) = default;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace cfkit

#endif  // CFKIT_POLYNOMIAL_HPP_
