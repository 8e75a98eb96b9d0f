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

#include "cfkit/hypergeom.hpp"

#include <algorithm>

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

bool nonpositive_integer(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

}  // namespace

bool HypParams::valid() const { return !nonpositive_integer(c); }

Rational pochhammer(const Rational& x, long k) {
  Rational out = 1;
  for (long j = 0; j < k; ++j) out *= x + Rational(j);
  return out;
}

Rational hyp2f1_partial(const HypParams& p, const Rational& z, long N) {
  if (!p.valid()) throw InputError("2F1: c must not be zero or a negative integer");
  Rational term = 1;
  Rational sum = 1;
  for (long k = 0; k < N; ++k) {
    const Rational kk(k);
    term *= (p.a + kk) * (p.b + kk) * z / ((p.c + kk) * Rational(k + 1));
    sum += term;
  }
  return sum;
}

Rational gauss_d(const HypParams& p, long n) {
  if (n < 1) throw std::invalid_argument("gauss_d: n must be >= 1");
  const Rational k(n / 2);
  Rational num, den;
  if (n % 2 == 0) {
    num = (p.b + k) * (p.c - p.a + k);
    den = (p.c + Rational(2) * k - Rational(1)) * (p.c + Rational(2) * k);
  } else {
    num = (p.a + k) * (p.c - p.b + k);
    den = (p.c + Rational(2) * k) * (p.c + Rational(2) * k + Rational(1));
  }
  if (den.is_zero()) throw DCoefficientPoleError(n);
  return num / den;
}

CFSpec gauss_cf(const HypParams& p, const Rational& z, bool negate, long max_head) {
  if (z.is_zero()) throw InputError("gauss_cf: z must be nonzero");
  // a_n = -z d_{n-1}. Every d_m up to the first possible pole (and up to the
  // materialized head) is evaluated so that poles are reported.
  long check_to = std::max(max_head - 1, 1L);
  if (nonpositive_integer(p.c)) {
    check_to = std::max(check_to, 1 - p.c.num().get_si());
  }
  std::vector<Rational> head{Rational(negate ? -1 : 1)};
  for (long m = 1; m <= check_to; ++m) {
    const Rational d = gauss_d(p, m);
    if (m + 1 <= max_head) head.push_back(-z * d);
  }

  // Closed forms in n with m = n - 1. For odd n (m = 2k, k = (n-1)/2):
  //   (b + (n-1)/2)(c - a + (n-1)/2) / ((c + n - 2)(c + n - 1)).
  // For even n (m = 2k+1, k = (n-2)/2):
  //   (a + (n-2)/2)(c - b + (n-2)/2) / ((c + n - 2)(c + n - 1)).
  const Rational half(1, 2);
  const Polynomial den = Polynomial::linear(1, p.c - Rational(2)) *
                         Polynomial::linear(1, p.c - Rational(1));
  const Polynomial odd_num = Polynomial::linear(half, p.b - half) *
                             Polynomial::linear(half, p.c - p.a - half);
  const Polynomial even_num = Polynomial::linear(half, p.a - Rational(1)) *
                              Polynomial::linear(half, p.c - p.b - Rational(1));
  const PolyRat scale(-z);
  const PolyRat odd_tail = scale * PolyRat(odd_num, den);
  const PolyRat even_tail = scale * PolyRat(even_num, den);

  CFSpec cf;
  cf.b0 = 0;
  cf.a = CoefficientSequence(std::move(head), even_tail, odd_tail);
  cf.b = CoefficientSequence::constant(1);
  return cf;
}

}  // namespace cfkit
