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

#include "doctest.h"

#include "cfkit/constants.hpp"
#include "cfkit/diagnostics.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/presets.hpp"
#include "cfkit/transforms.hpp"
#include "test_support.hpp"

using namespace cfkit;

namespace {

PolyRat lin(std::int64_t c1, std::int64_t c0) {
  return PolyRat(Polynomial::linear(Rational(c1), Rational(c0)));
}

CFSpec constant_cf(std::int64_t a, std::int64_t b) {
  CFSpec cf;
  cf.a = CoefficientSequence::constant(a);
  cf.b = CoefficientSequence::constant(b);
  return cf;
}

const ConstantExpr kMinusQuarterPi{Rational(-1, 4), 0};
const ConstantExpr kQuarterPi{Rational(1, 4), 0};

CFSpec conj_cf() { return preset("conjecture-pi4"); }

}  // namespace

TEST_CASE("rho") {
  const CFSpec conj = preset("conjecture-pi4");
  CHECK(rho(conj, 2) == Rational(1, 3));
  CHECK(rho(conj, 5) == Rational(16, 63));
  for (long n = 2; n <= 100; ++n) {
    CHECK(rho(conj, n) == Rational(1, 4) + Rational(1, 4 * (2 * n - 1) * (2 * n - 3)));
  }
  CFSpec zero_b = conj;
  zero_b.b = CoefficientSequence({Rational(1), Rational(0)}, lin(1, 0));
  CHECK_THROWS_AS(rho(zero_b, 2), DivisionByZeroError);
  CHECK_THROWS_AS(rho(zero_b, 3), DivisionByZeroError);
  CHECK(rho(zero_b, 4) == Rational(9, 12));
}

TEST_CASE("rho_limit") {
  const RatioLimit conj = rho_limit(preset("conjecture-pi4"));
  CHECK(conj.kind == RatioLimit::Kind::kFinite);
  CHECK(conj.value == Rational(1, 4));
  CHECK(rho_limit(preset("euler-pi4")).kind == RatioLimit::Kind::kInfinite);
  CHECK(rho_limit(constant_cf(1, 3)).value == Rational(1, 9));
  CHECK(rho_limit(constant_cf(-1, 3)).value == Rational(1, 9));
  CHECK(rho_limit(constant_cf(0, 3)).kind == RatioLimit::Kind::kZero);
  CHECK(rho_limit(preset("gauss-pi4")).value == Rational(1, 4));

  CFSpec decaying = constant_cf(1, 1);
  decaying.b = CoefficientSequence::of(lin(1, 0));
  CHECK(rho_limit(decaying).kind == RatioLimit::Kind::kZero);
  CHECK(rho_limit(decaying).str() == "0");
  CHECK(rho_limit(preset("euler-pi4")).str() == "inf");

  CFSpec head_only = constant_cf(1, 1);
  head_only.a = CoefficientSequence({Rational(1)}, std::nullopt);
  CHECK_THROWS_AS(rho_limit(head_only), SymbolicLimitUnavailableError);

  CFSpec oscillating = constant_cf(1, 1);
  oscillating.a = CoefficientSequence({}, PolyRat(Rational(1)), PolyRat(Rational(2)));
  CHECK_THROWS_AS(rho_limit(oscillating), SymbolicLimitUnavailableError);

  CFSpec dead = constant_cf(1, 0);
  CHECK_THROWS_AS(rho_limit(dead), DivisionByZeroError);
}

TEST_CASE("classify") {
  SUBCASE("conjecture-pi4 sits on the Worpitzky boundary") {
    const RegimeReport r = classify(preset("conjecture-pi4"), 100);
    CHECK(r.regime == Regime::kWorpitzkyBoundary);
    CHECK(r.limit.value == Rational(1, 4));
    CHECK(r.rho_monotone_from == 2);
    CHECK(r.abs_b_sum_diverges);
  }
  SUBCASE("euler-pi4 is indeterminate") {
    const RegimeReport r = classify(preset("euler-pi4"), 100);
    CHECK(r.regime == Regime::kIndeterminateByRatioTest);
    CHECK(r.limit.kind == RatioLimit::Kind::kInfinite);
    CHECK_FALSE(r.rho_monotone_from.has_value());
    CHECK(r.abs_b_sum_diverges);
    // ... yet its convergents still approach pi/4.
    const ConstantBracket target = const_bracket(kQuarterPi, 20);
    CHECK(target.max_distance(convergent(preset("euler-pi4"), 200)) < Rational(1, 400));
  }
  SUBCASE("lowering the degree of b diverges the ratio") {
    CFSpec cf;
    cf.a = CoefficientSequence::of(lin(1, -1) * lin(1, -1));
    cf.b = CoefficientSequence::constant(1);
    const RegimeReport r = classify(cf, 50);
    CHECK(r.regime == Regime::kIndeterminateByRatioTest);
    CHECK(r.limit.kind == RatioLimit::Kind::kInfinite);
  }
  SUBCASE("sub-Worpitzky") {
    const RegimeReport r = classify(constant_cf(1, 3), 20);
    CHECK(r.regime == Regime::kSubWorpitzky);
    CHECK_FALSE(r.rho_monotone_from.has_value());  // constant rho
    CHECK(classify(constant_cf(0, 3), 20).regime == Regime::kSubWorpitzky);
    CHECK(classify(constant_cf(1, 1), 20).regime == Regime::kIndeterminateByRatioTest);
    CHECK(classify(constant_cf(1, 2), 20).regime == Regime::kWorpitzkyBoundary);
  }
  SUBCASE("divergence of sum |b_n|") {
    CFSpec cf = constant_cf(1, 1);
    cf.b = CoefficientSequence::of(PolyRat(Polynomial(Rational(1)), Polynomial::linear(1, 0)));
    CHECK(classify(cf, 10).abs_b_sum_diverges);  // harmonic
    cf.b = CoefficientSequence::of(
        PolyRat(Polynomial(Rational(1)), Polynomial({Rational(0), Rational(0), Rational(1)})));
    CHECK_FALSE(classify(cf, 10).abs_b_sum_diverges);  // 1/n^2
  }
  SUBCASE("monotone onset after an initial bump") {
    // rho_n = |a_n| for unit denominators; a = [1, 1, 5] then 1/n.
    CFSpec cf;
    cf.a = CoefficientSequence({Rational(1), Rational(1), Rational(5)},
                               PolyRat(Polynomial(Rational(1)), Polynomial::linear(1, 0)));
    cf.b = CoefficientSequence::constant(1);
    CHECK(classify(cf, 30).rho_monotone_from == 3);
  }
}

TEST_CASE("regime depends on representation, values do not") {
  const CFSpec gauss = preset("gauss-pi4");
  const CFSpec scaled = apply_equivalence(gauss, ScalingSequence::of(lin(1, 0) * lin(1, 0)));
  CHECK(classify(gauss, 30).regime == Regime::kWorpitzkyBoundary);
  CHECK(classify(scaled, 30).regime == Regime::kWorpitzkyBoundary);
  const CFSpec euler_unit = apply_equivalence(
      preset("euler-pi4"), ScalingSequence({Rational(1)}, PolyRat(Rational(1, 2))));
  CHECK(classify(euler_unit, 30).limit.kind == RatioLimit::Kind::kInfinite);
  for (long n = 1; n <= 40; ++n) {
    CHECK(convergent(euler_unit, n) == convergent(preset("euler-pi4"), n));
  }
}

TEST_CASE("empirical_rate") {
  const CFSpec conj = preset("conjecture-pi4");
  const ConstantBracket target = const_bracket(kMinusQuarterPi, 40);
  const auto samples = empirical_rate(conj, target, {5, 6});
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].error > Rational(187, 1000000));
  CHECK(samples[0].error < Rational(188, 1000000));
  CHECK(samples[1].error > Rational(323, 10000000));
  CHECK(samples[1].error < Rational(324, 10000000));
  CHECK_FALSE(samples[0].ratio.has_value());
  CHECK(*samples[1].ratio > Rational(17, 100));
  CHECK(*samples[1].ratio < Rational(18, 100));

  const auto first = empirical_rate(conj, target, {1});
  CHECK(first[0].error > Rational(2146, 10000));
  CHECK(first[0].error < Rational(2147, 10000));

  const auto euler = empirical_rate(preset("euler-pi4"), const_bracket(kQuarterPi, 40), {10, 20});
  // Leibniz tail: error ~ 1/(4n), halves when the depth doubles.
  CHECK(*euler[1].ratio > Rational(49, 100));
  CHECK(*euler[1].ratio < Rational(51, 100));

  CHECK_THROWS_AS(empirical_rate(conj, const_bracket(kMinusQuarterPi, 10), {25, 26}),
                  BracketTooWideError);
}

TEST_CASE("correct_decimals") {
  const auto exact = [](const Rational& err) {
    return correct_decimals(err, ConstantBracket{Rational(0), Rational(0)});
  };
  CHECK(exact(Rational(877, 10000000000LL)) == 7);
  CHECK(exact(Rational(933, 10000000)) == 4);
  CHECK(exact(Rational(1, 1000)) == 3);
  CHECK(exact(Rational(1001, 1000000)) == 2);
  CHECK(exact(Rational(999, 1000000)) == 3);
  CHECK(exact(Rational(1)) == 0);
  CHECK(exact(Rational(7)) == 0);
  CHECK(exact(Rational(-1, 100)) == 2);
  CHECK(decimals_for_error(Rational(0)) == kExactDecimals);
  CHECK(decimals_for_error(pow10(-40)) == 40);
  CHECK(decimals_for_error(pow10(-40) + pow10(-80)) == 39);

  const ConstantBracket target = const_bracket(kMinusQuarterPi, 40);
  CHECK(correct_decimals(Rational(-436, 555), target) == 3);
  CHECK(correct_decimals(Rational(-161, 205), target) == 4);
  CHECK_THROWS_AS(correct_decimals(convergent(conj_cf(), 25), const_bracket(kMinusQuarterPi, 10)),
                  BracketTooWideError);
}

TEST_CASE("correct_decimals is monotone in the error") {
  testing::Random rng(67);
  for (int i = 0; i < 300; ++i) {
    const Rational e1 = Rational(rng.integer(1, 100000), rng.integer(1, 100000000));
    const Rational e2 = e1 * Rational(rng.integer(100, 1000), 100);
    CHECK(decimals_for_error(e2) <= decimals_for_error(e1));
  }
}
