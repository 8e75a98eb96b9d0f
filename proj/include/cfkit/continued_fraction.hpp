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

#ifndef CFKIT_CONTINUED_FRACTION_HPP_
#define CFKIT_CONTINUED_FRACTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cfkit/rational.hpp"
#include "cfkit/sequence.hpp"

namespace cfkit {

// The generalized continued fraction
//
//   b0 + a_1/(b_1 + a_2/(b_2 + ...)).
//
// Partial numerators a and partial denominators b are indexed from 1.
struct CFSpec {
  Rational b0;
  CoefficientSequence a;
  CoefficientSequence b;
  std::optional<std::string> name;

  // Compares the fraction itself; the label is ignored.
  friend bool operator==(const CFSpec& x, const CFSpec& y) {
    return x.b0 == y.b0 && x.a == y.a && x.b == y.b;
  }
};

// Numerators A_n, denominators B_n and convergents f_n = A_n/B_n for
// n = 0..depth, from
//
//   A_n = b_n A_{n-1} + a_n A_{n-2},  A_{-1} = 1, A_0 = b0,
//   B_n = b_n B_{n-1} + a_n B_{n-2},  B_{-1} = 0, B_0 = 1.
//
// values[n] is empty exactly when B_n = 0.
struct ConvergentTrace {
  long depth = 0;
  std::vector<Rational> A;
  std::vector<Rational> B;
  std::vector<std::optional<Rational>> values;
};

ConvergentTrace convergents(const CFSpec& cf, long depth);

struct EvalOptions {
  // Remove the common factor of the integer recurrence state every k steps;
  // 0 disables reduction until the final division.
  unsigned reduce_every = 1;
};

// f_depth. Evaluated on an integer recurrence (the coefficients are first
// scaled to integers by an equivalence transformation), so the result equals
// convergents(cf, depth).values[depth]. Throws UndefinedConvergentError when
// B_depth = 0.
Rational convergent(const CFSpec& cf, long depth, const EvalOptions& options = {});

}  // namespace cfkit

#endif  // CFKIT_CONTINUED_FRACTION_HPP_
