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

#include "cfkit/continued_fraction.hpp"

#include <stdexcept>

#include "cfkit/errors.hpp"

namespace cfkit {

ConvergentTrace convergents(const CFSpec& cf, long depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  ConvergentTrace trace;
  trace.depth = depth;
  trace.A.reserve(static_cast<std::size_t>(depth) + 1);
  trace.B.reserve(static_cast<std::size_t>(depth) + 1);
  trace.A.push_back(cf.b0);
  trace.B.push_back(1);
  trace.values.emplace_back(cf.b0);
  Rational a_prev = 1;  // A_{n-2}
  Rational b_prev = 0;  // B_{n-2}
  for (long n = 1; n <= depth; ++n) {
    const Rational an = cf.a.at(n);
    const Rational bn = cf.b.at(n);
    Rational a_next = bn * trace.A.back() + an * a_prev;
    Rational b_next = bn * trace.B.back() + an * b_prev;
    a_prev = trace.A.back();
    b_prev = trace.B.back();
    if (b_next.is_zero()) {
      trace.values.emplace_back(std::nullopt);
    } else {
      trace.values.emplace_back(a_next / b_next);
    }
    trace.A.push_back(std::move(a_next));
    trace.B.push_back(std::move(b_next));
  }
  return trace;
}

Rational convergent(const CFSpec& cf, long depth, const EvalOptions& options) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  // Scale by r_n = lcm(den a_n, den b_n) so that r_1 a_1, r_n r_{n-1} a_n and
  // r_n b_n are integers; the tail K(a_n/b_n) is then run on integers.
  BigInt p_prev = 1, p = 0;  // P_{-1}, P_0
  BigInt q_prev = 0, q = 1;  // Q_{-1}, Q_0
  BigInt r_prev = 1;
  BigInt r, an, bn, tmp;
  for (long n = 1; n <= depth; ++n) {
    const Rational a = cf.a.at(n);
    const Rational b = cf.b.at(n);
    mpz_lcm(r.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
    an = a.num() * (r / a.den()) * r_prev;
    bn = b.num() * (r / b.den());
    tmp = bn * p + an * p_prev;
    p_prev = std::move(p);
    p = std::move(tmp);
    tmp = bn * q + an * q_prev;
    q_prev = std::move(q);
    q = std::move(tmp);
    r_prev = r;
    if (options.reduce_every != 0 && n % options.reduce_every == 0) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), p_prev.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q_prev.get_mpz_t());
      if (g > 1) {
        mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(p_prev.get_mpz_t(), p_prev.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(q_prev.get_mpz_t(), q_prev.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
  if (q == 0) throw UndefinedConvergentError(depth);
  return cf.b0 + Rational(p, q);
}

}  // namespace cfkit
