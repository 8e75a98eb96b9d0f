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

#ifndef CFKIT_CONSTANTS_HPP_
#define CFKIT_CONSTANTS_HPP_

#include <string>

#include "cfkit/rational.hpp"

namespace cfkit {

// Closed rational interval [lo, hi] certified to contain a real constant.
struct ConstantBracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  // Certified upper bound on |x - c| for every c in the bracket.
  Rational max_distance(const Rational& x) const;
};

// The real number pi_coeff * pi + offset.
struct ConstantExpr {
  Rational pi_coeff;
  Rational offset;

  friend bool operator==(const ConstantExpr&, const ConstantExpr&) = default;
  std::string str() const;
};

// Certified enclosure lo < pi < hi with hi - lo <= 10^-digits, from Machin's
// formula pi = 16 atan(1/5) - 4 atan(1/239). Requires digits >= 1.
ConstantBracket pi_bracket(unsigned digits);

// Enclosure of expr with width <= 10^-digits. Exact (degenerate) when
// expr.pi_coeff is zero.
ConstantBracket const_bracket(const ConstantExpr& expr, unsigned digits);

}  // namespace cfkit

#endif  // CFKIT_CONSTANTS_HPP_
