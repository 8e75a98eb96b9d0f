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

#ifndef CFKIT_HYPERGEOM_HPP_
#define CFKIT_HYPERGEOM_HPP_

#include "cfkit/continued_fraction.hpp"
#include "cfkit/rational.hpp"

namespace cfkit {

// Parameters (a, b; c) of the Gauss function 2F1(a, b; c; z).
struct HypParams {
  Rational a;
  Rational b;
  Rational c;

  // c is neither zero nor a negative integer.
  bool valid() const;
};

// Rising factorial x (x+1) ... (x+k-1); 1 for k = 0.
Rational pochhammer(const Rational& x, long k);

// sum_{k=0..N} (a)_k (b)_k / ((c)_k k!) z^k. Throws InputError when the
// parameters are invalid.
Rational hyp2f1_partial(const HypParams& p, const Rational& z, long N);

// Coefficient d_n of the Gauss continued fraction for
// 2F1(a, b+1; c+1; z) / 2F1(a, b; c; z):
//
//   d_{2k}   = (b+k)(c-a+k) / ((c+2k-1)(c+2k))
//   d_{2k+1} = (a+k)(c-b+k) / ((c+2k)(c+2k+1))
//
// Throws DCoefficientPoleError when the denominator vanishes.
Rational gauss_d(const HypParams& p, long n);

// The ratio above (negated when `negate`) as a unit-denominator fraction:
// b0 = 0, b_n = 1, a_1 = +-1, a_n = -d_{n-1} z for n >= 2.
//
// a_n is symbolic in n: one rational function per parity of n-1, merged into
// a single tail whenever the two closed forms coincide (as they do for
// (1/2, 0, 1/2)). The first `max_head` terms are materialized from gauss_d so
// that poles there surface as DCoefficientPoleError. Throws InputError for
// z = 0.
CFSpec gauss_cf(const HypParams& p, const Rational& z, bool negate, long max_head = 8);

}  // namespace cfkit

#endif  // CFKIT_HYPERGEOM_HPP_
