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

// Test-only oracles and random generators. Nothing here calls the code paths
// it is used to check: continued fractions are evaluated bottom-up instead of
// by the three-term recurrence, and sums are formed over a common
// denominator.
#ifndef CFKIT_TESTS_TEST_SUPPORT_HPP_
#define CFKIT_TESTS_TEST_SUPPORT_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cfkit/continued_fraction.hpp"
#include "cfkit/polynomial.hpp"
#include "cfkit/rational.hpp"

namespace cfkit::testing {

// Truncation of pi at 100 decimals (published value).
inline const std::string kPi100 =
    "3."
    "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421"
    "170679";

// pi truncated to `places` decimals as an exact rational.
inline Rational pi_truncated(unsigned places) {
  const std::string digits = kPi100.substr(0, 2 + places);
  std::string integer = digits.substr(0, 1) + digits.substr(2);
  return Rational(BigInt(integer, 10), pow10(places).num());
}

// f_N by nested evaluation from the bottom: t = a_N/b_N,
// t = a_k/(b_k + t), ... Returns nullopt when a division by zero occurs.
inline std::optional<Rational> backward_eval(const CFSpec& cf, long depth) {
  Rational t = 0;
  for (long n = depth; n >= 1; --n) {
    const Rational d = cf.b.at(n) + t;
    if (d.is_zero()) return std::nullopt;
    t = cf.a.at(n) / d;
  }
  return cf.b0 + t;
}

// sum_{k=0..n} (-1)^k/(2k+1) over the common denominator prod(2k+1).
inline Rational leibniz_common_denominator(long n) {
  BigInt den = 1;
  for (long k = 0; k <= n; ++k) den *= 2 * k + 1;
  BigInt num = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt part = den / (2 * k + 1);
    if (k % 2 == 0) {
      num += part;
    } else {
      num -= part;
    }
  }
  return Rational(num, den);
}

class Random {
 public:
  explicit Random(unsigned seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }

  Rational rational(long max_num = 9, long max_den = 6) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonzero_rational(long max_num = 9, long max_den = 6) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Polynomial polynomial(int max_degree, long max_num = 9, long max_den = 4) {
    std::vector<Rational> c;
    const int degree = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= degree; ++i) c.push_back(rational(max_num, max_den));
    return Polynomial(std::move(c));
  }

  // Rational function whose denominator has no root at any n >= 1.
  PolyRat safe_polyrat(int max_degree) {
    Polynomial num = polynomial(max_degree);
    if (integer(0, 1) == 0) return PolyRat(num);
    // den = c*(n^2 + k) with k > 0.
    const Polynomial den({Rational(integer(1, 5)), Rational(0), Rational(1)});
    return PolyRat(num, den * Polynomial(nonzero_rational()));
  }

  // Tail with no zero at any n >= 1: c * (n^2 + k) or a nonzero constant.
  PolyRat nonvanishing_polyrat() {
    if (integer(0, 1) == 0) return PolyRat(nonzero_rational());
    const Polynomial p({Rational(integer(1, 5)), Rational(0), Rational(1)});
    return PolyRat(p * Polynomial(nonzero_rational()));
  }

  std::vector<Rational> head(long max_len, bool nonzero) {
    std::vector<Rational> h;
    const long len = integer(0, max_len);
    for (long i = 0; i < len; ++i) h.push_back(nonzero ? nonzero_rational() : rational());
    return h;
  }

  CFSpec cf() {
    CFSpec cf;
    cf.b0 = rational();
    cf.a = CoefficientSequence(head(3, false), safe_polyrat(2));
    cf.b = CoefficientSequence(head(3, false), safe_polyrat(2));
    return cf;
  }

  // Scaling with no zero or pole at n >= 1.
  CoefficientSequence scaling() {
    return CoefficientSequence(head(3, true), nonvanishing_polyrat());
  }

  std::mt19937& engine() { return engine_; }

 private:
  std::mt19937 engine_;
};

}  // namespace cfkit::testing

#endif  // CFKIT_TESTS_TEST_SUPPORT_HPP_
