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

#ifndef CFKIT_DIAGNOSTICS_HPP_
#define CFKIT_DIAGNOSTICS_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/constants.hpp"
#include "cfkit/continued_fraction.hpp"

namespace cfkit {

// lim rho_n: a finite nonzero rational, zero, or +infinity.
struct RatioLimit {
  enum class Kind { kFinite, kZero, kInfinite };
  Kind kind = Kind::kZero;
  std::optional<Rational> value;  // present iff kind == kFinite

  std::string str() const;  // "1/4", "0" or "inf"
};

enum class Regime { kSubWorpitzky, kWorpitzkyBoundary, kIndeterminateByRatioTest };

const char* regime_name(Regime r);

struct RegimeReport {
  RatioLimit limit;
  Regime regime = Regime::kIndeterminateByRatioTest;
  // Least m such that rho is strictly decreasing on [m, probe_depth], when
  // that run has at least two terms.
  std::optional<long> rho_monotone_from;
  bool abs_b_sum_diverges = false;
};

// |a_n| / (|b_n| |b_{n-1}|) for n >= 2. Throws DivisionByZeroError when b_n
// or b_{n-1} is zero.
Rational rho(const CFSpec& cf, long n);

// Limit of rho_n from the degrees and leading coefficients of the tails.
// Throws SymbolicLimitUnavailableError when a or b has no tail, or when the
// two parity branches have different limits.
RatioLimit rho_limit(const CFSpec& cf);

// Worpitzky regime of the limit (zero counts as below 1/4), the monotone
// onset of rho up to probe_depth, and whether sum |b_n| diverges.
RegimeReport classify(const CFSpec& cf, long probe_depth);

struct RateSample {
  long depth = 0;
  Rational error;                  // certified upper bound on |f_depth - c|
  std::optional<Rational> ratio;   // error / previous error
};

// Certified errors of the convergents at `depths` against `target`.
// Throws BracketTooWideError when the bracket is wider than half the
// smallest error.
std::vector<RateSample> empirical_rate(const CFSpec& cf, const ConstantBracket& target,
                                       const std::vector<long>& depths);

// Returned by the decimal counters when the error is exactly zero.
inline constexpr std::size_t kExactDecimals = std::numeric_limits<std::size_t>::max();

// floor(-log10 error) clamped at 0, computed exactly.
std::size_t decimals_for_error(const Rational& error);

// decimals_for_error of the certified error of x against target. Throws
// BracketTooWideError when the bracket is wider than half that error.
std::size_t correct_decimals(const Rational& x, const ConstantBracket& target);

}  // namespace cfkit

#endif  // CFKIT_DIAGNOSTICS_HPP_
