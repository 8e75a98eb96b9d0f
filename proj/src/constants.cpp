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

#include "cfkit/constants.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfkit {

namespace {

constexpr unsigned kGuardDigits = 5;

// Encloses atan(1/x) between two consecutive partial sums of its alternating
// Taylor series; the first omitted term is at most `tolerance`.
ConstantBracket atan_inverse_bracket(long x, const Rational& tolerance) {
  const Rational x2 = Rational(x) * Rational(x);
  Rational power = Rational(1, x);  // x^-(2k+1)
  Rational sum = 0;
  for (long k = 0;; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    if (term <= tolerance) {
      // The true value lies strictly between sum and sum +- term.
      const Rational next = (k % 2 == 0) ? sum + term : sum - term;
      return {std::min(sum, next), std::max(sum, next)};
    }
    sum = (k % 2 == 0) ? sum + term : sum - term;
    power /= x2;
  }
}

}  // namespace

Rational ConstantBracket::max_distance(const Rational& x) const {
  return std::max((x - lo).abs(), (x - hi).abs());
}

std::string ConstantExpr::str() const {
  if (pi_coeff.is_zero()) return offset.str();
  std::string out = "(" + pi_coeff.str() + ")*pi";
  if (!offset.is_zero()) out += " + (" + offset.str() + ")";
  return out;
}

ConstantBracket pi_bracket(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("pi_bracket: digits must be >= 1");
  // Budget: half the width for the Machin terms, the rest for outward
  // rounding of the endpoints at digits + kGuardDigits places.
  const Rational target = pow10(-static_cast<long>(digits));
  const Rational tol5 = target / Rational(64);
  const Rational tol239 = target / Rational(16);
  const ConstantBracket a5 = atan_inverse_bracket(5, tol5);
  const ConstantBracket a239 = atan_inverse_bracket(239, tol239);
  const Rational lo = Rational(16) * a5.lo - Rational(4) * a239.hi;
  const Rational hi = Rational(16) * a5.hi - Rational(4) * a239.lo;

  const long places = static_cast<long>(digits + kGuardDigits);
  const Rational scale = pow10(places);
  const Rational unit = pow10(-places);
  // Machin endpoints are strict bounds; rounding outward keeps them strict.
  return {Rational(floor(lo * scale)) * unit, Rational(ceil(hi * scale)) * unit};
}

ConstantBracket const_bracket(const ConstantExpr& expr, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("const_bracket: digits must be >= 1");
  if (expr.pi_coeff.is_zero()) return {expr.offset, expr.offset};
  // Extra places so that |pi_coeff| * width(pi) <= 10^-digits.
  const Rational mag = expr.pi_coeff.abs();
  unsigned extra = 0;
  while (pow10(extra) < mag) ++extra;
  const ConstantBracket pi = pi_bracket(digits + extra);
  Rational lo = expr.pi_coeff * pi.lo + expr.offset;
  Rational hi = expr.pi_coeff * pi.hi + expr.offset;
  if (expr.pi_coeff.sign() < 0) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace cfkit
