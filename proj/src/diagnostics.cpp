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

#include "cfkit/diagnostics.hpp"

#include <algorithm>

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

const PolyRat& branch(const CoefficientSequence& s, bool odd) {
  return odd && s.odd_tail() ? *s.odd_tail() : *s.tail();
}

RatioLimit branch_limit(const PolyRat& a, const PolyRat& b_now, const PolyRat& b_prev) {
  if (b_now.is_zero() || b_prev.is_zero()) {
    throw DivisionByZeroError("rho: partial denominators vanish identically");
  }
  if (a.is_zero()) return {RatioLimit::Kind::kZero, std::nullopt};
  const int degree = a.degree() - b_now.degree() - b_prev.degree();
  if (degree > 0) return {RatioLimit::Kind::kInfinite, std::nullopt};
  if (degree < 0) return {RatioLimit::Kind::kZero, std::nullopt};
  return {RatioLimit::Kind::kFinite,
          a.leading().abs() / (b_now.leading().abs() * b_prev.leading().abs())};
}

bool same_limit(const RatioLimit& x, const RatioLimit& y) {
  return x.kind == y.kind && x.value == y.value;
}

}  // namespace

std::string RatioLimit::str() const {
  switch (kind) {
    case Kind::kFinite:
      return value->str();
    case Kind::kZero:
      return "0";
    case Kind::kInfinite:
      return "inf";
  }
  return "?";
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kSubWorpitzky:
      return "SubWorpitzky";
    case Regime::kWorpitzkyBoundary:
      return "WorpitzkyBoundary";
    case Regime::kIndeterminateByRatioTest:
      return "IndeterminateByRatioTest";
  }
  return "?";
}

Rational rho(const CFSpec& cf, long n) {
  if (n < 2) throw std::invalid_argument("rho: n must be >= 2");
  const Rational denom = cf.b.at(n).abs() * cf.b.at(n - 1).abs();
  if (denom.is_zero()) throw DivisionByZeroError("rho: zero partial denominator at n=" +
                                                 std::to_string(n));
  return cf.a.at(n).abs() / denom;
}

RatioLimit rho_limit(const CFSpec& cf) {
  if (!cf.a.has_tail() || !cf.b.has_tail()) {
    throw SymbolicLimitUnavailableError("rho_limit: coefficient sequence has no symbolic tail");
  }
  // b_{n-1} of the other parity, shifted; only degree and leading
  // coefficient matter, and both are shift invariant.
  const RatioLimit even = branch_limit(branch(cf.a, false), branch(cf.b, false),
                                       branch(cf.b, true));
  const RatioLimit odd = branch_limit(branch(cf.a, true), branch(cf.b, true),
                                      branch(cf.b, false));
  if (!same_limit(even, odd)) {
    throw SymbolicLimitUnavailableError("rho_limit: parity branches disagree");
  }
  return even;
}

RegimeReport classify(const CFSpec& cf, long probe_depth) {
  RegimeReport report;
  report.limit = rho_limit(cf);
  const Rational quarter(1, 4);
  if (report.limit.kind == RatioLimit::Kind::kZero ||
      (report.limit.kind == RatioLimit::Kind::kFinite && *report.limit.value < quarter)) {
    report.regime = Regime::kSubWorpitzky;
  } else if (report.limit.kind == RatioLimit::Kind::kFinite &&
             *report.limit.value == quarter) {
    report.regime = Regime::kWorpitzkyBoundary;
  } else {
    report.regime = Regime::kIndeterminateByRatioTest;
  }

  auto rho_or_none = [&](long n) -> std::optional<Rational> {
    try {
      return rho(cf, n);
    } catch (const DivisionByZeroError&) {
      return std::nullopt;
    }
  };
  if (probe_depth >= 3) {
    std::optional<Rational> later = rho_or_none(probe_depth);
    long m = probe_depth;
    while (later && m - 1 >= 2) {
      std::optional<Rational> earlier = rho_or_none(m - 1);
      if (!earlier || !(*earlier > *later)) break;
      later = std::move(earlier);
      --m;
    }
    if (m < probe_depth) report.rho_monotone_from = m;
  }

  // sum |b_n| diverges iff some parity branch of b is nonzero with
  // b_n ~ C n^k, k >= -1.
  for (bool odd : {false, true}) {
    const PolyRat& b = branch(cf.b, odd);
    if (!b.is_zero() && b.degree() >= -1) report.abs_b_sum_diverges = true;
  }
  return report;
}

std::vector<RateSample> empirical_rate(const CFSpec& cf, const ConstantBracket& target,
                                       const std::vector<long>& depths) {
  std::vector<RateSample> out;
  for (long depth : depths) {
    RateSample s;
    s.depth = depth;
    s.error = target.max_distance(convergent(cf, depth));
    if (!out.empty()) s.ratio = s.error / out.back().error;
    out.push_back(std::move(s));
  }
  for (const auto& s : out) {
    if (target.width() * Rational(2) > s.error) {
      throw BracketTooWideError("bracket width " + to_scientific(target.width(), 3) +
                                " exceeds half the error at depth " +
                                std::to_string(s.depth));
    }
  }
  return out;
}

std::size_t decimals_for_error(const Rational& error) {
  if (error.is_zero()) return kExactDecimals;
  if (error >= Rational(1)) return 0;
  // Largest k with error <= 10^-k.
  long k = static_cast<long>(mpz_sizeinbase(error.den().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(error.num().get_mpz_t(), 10)) - 1;
  k = std::max(k, 0L);
  while (error > pow10(-k)) --k;
  while (error <= pow10(-(k + 1))) ++k;
  return static_cast<std::size_t>(k);
}

std::size_t correct_decimals(const Rational& x, const ConstantBracket& target) {
  const Rational error = target.max_distance(x);
  if (target.width() * Rational(2) > error) {
    throw BracketTooWideError("bracket too wide to certify the error of " + x.str());
  }
  return decimals_for_error(error);
}

}  // namespace cfkit
