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

// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfkit/bench.hpp"
#include "cfkit/constants.hpp"
#include "cfkit/diagnostics.hpp"
#include "cfkit/errors.hpp"
#include "cfkit/expr_parser.hpp"
#include "cfkit/hypergeom.hpp"
#include "cfkit/presets.hpp"
#include "cfkit/transforms.hpp"
#include "cli.hpp"
#include "expr_testing.hpp"
#include "test_support.hpp"

using namespace cfkit;

namespace {

const ConstantExpr kMinusQuarterPi{Rational(-1, 4), 0};
const ConstantExpr kQuarterPi{Rational(1, 4), 0};
constexpr unsigned kDigits = 40;

// Evidence lines printed after the verdict.
std::ostringstream note;

PolyRat lin(std::int64_t c1, std::int64_t c0) {
  return PolyRat(Polynomial::linear(Rational(c1), Rational(c0)));
}

bool same_convergents(const CFSpec& x, const CFSpec& y, long depth) {
  const ConvergentTrace tx = convergents(x, depth);
  const ConvergentTrace ty = convergents(y, depth);
  return tx.values == ty.values;
}

bool regeneration() {
  const CFSpec gauss = gauss_cf({Rational(1, 2), Rational(0), Rational(1, 2)}, Rational(-1), true);
  const CFSpec out = apply_equivalence(gauss, ScalingSequence::of(lin(-2, 1)));
  const CFSpec expected{Rational(0), CoefficientSequence({Rational(1)}, lin(1, -1) * lin(1, -1)),
                        CoefficientSequence::of(lin(-2, 1)), std::nullopt};
  if (!(out.b0 == expected.b0 && out.a == expected.a && out.b == expected.b)) return false;
  for (long n = 1; n <= 1000; ++n) {
    const Rational a = n == 1 ? Rational(1) : Rational((n - 1) * (n - 1));
    if (out.a.at(n) != a || out.b.at(n) != Rational(-(2 * n - 1))) return false;
  }
  return true;
}

bool value_verification() {
  const ConstantBracket target = const_bracket(kMinusQuarterPi, kDigits);
  const Rational err = target.max_distance(convergent(preset("conjecture-pi4"), 25));
  note << "depth 25 error <= " << to_scientific(err, 3);
  if (!(err < Rational(115, 1000000000000LL))) return false;
  std::ostringstream out, err_stream;
  const int code = cli::run({"verify", "--preset", "conjecture-pi4", "--target", "-pi/4",
                             "--digits", "10", "--max-depth", "30"},
                            out, err_stream);
  note << "; verify exit " << code;
  return code == cli::kOk;
}

bool precision_milestones() {
  const ConstantBracket target = const_bracket(kMinusQuarterPi, kDigits);
  if (!(target.width() <= pow10(-40))) return false;
  const CFSpec conj = preset("conjecture-pi4");
  bool ok = true;
  for (auto [depth, want] : {std::pair{6L, 4UL}, {16L, 7UL}, {26L, 10UL}}) {
    const std::size_t got = correct_decimals(convergent(conj, depth), target);
    note << (depth == 6 ? "" : ", ") << "depth " << depth << ": " << got;
    ok = ok && got >= want;
  }
  return ok;
}

bool error_ratio() {
  const auto rows = compare_table(preset("conjecture-pi4"), kMinusQuarterPi, {25}, kDigits);
  note << "ratio " << to_scientific(*rows[0].error_ratio, 3);
  return rows[0].error_ratio && *rows[0].error_ratio >= Rational(100000000);
}

bool equivalence_invariance() {
  testing::Random rng(2024);
  for (const auto& name : preset_names()) {
    const CFSpec cf = preset(name);
    if (!same_convergents(cf, apply_equivalence(cf, rng.scaling()), 50)) return false;
  }
  const CFSpec gauss = preset("gauss-pi4");
  if (!same_convergents(gauss, apply_equivalence(gauss, ScalingSequence::of(lin(-2, 1))), 50)) {
    return false;
  }
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const CFSpec cf = rng.cf();
    const ScalingSequence r = rng.scaling();
    if (!same_convergents(cf, apply_equivalence(cf, r), rng.integer(1, 50))) ++failures;
  }
  note << "200 random cases, " << failures << " failures";
  return failures == 0;
}

bool collapse_identity() {
  const HypParams p{Rational(1, 2), Rational(0), Rational(1, 2)};
  for (long n = 1; n <= 500; ++n) {
    if (gauss_d(p, n) != Rational(n * n, 4 * n * n - 1)) return false;
  }
  return true;
}

bool series_identity() {
  const HypParams atan{Rational(1, 2), Rational(1), Rational(3, 2)};
  for (long n = 0; n <= 500; ++n) {
    if (hyp2f1_partial(atan, Rational(-1), n) != leibniz_partial(n)) return false;
  }
  const ConvergentTrace euler = convergents(preset("euler-pi4"), 300);
  for (long n = 1; n <= 300; ++n) {
    if (euler.values[static_cast<std::size_t>(n)] != leibniz_partial(n - 1)) return false;
  }
  return true;
}

bool rho_diagnostics() {
  const CFSpec conj = preset("conjecture-pi4");
  for (long n = 2; n <= 500; ++n) {
    if (rho(conj, n) != Rational(1, 4) + Rational(1, 4 * (2 * n - 1) * (2 * n - 3))) return false;
  }
  const RatioLimit lim = rho_limit(conj);
  const RegimeReport conj_report = classify(conj, 100);
  const RegimeReport euler_report = classify(preset("euler-pi4"), 100);
  note << "limit " << lim.str() << ", " << regime_name(conj_report.regime) << "; euler "
       << regime_name(euler_report.regime) << ", limit " << euler_report.limit.str();
  return lim.kind == RatioLimit::Kind::kFinite && lim.value == Rational(1, 4) &&
         conj_report.regime == Regime::kWorpitzkyBoundary &&
         euler_report.regime == Regime::kIndeterminateByRatioTest &&
         euler_report.limit.kind == RatioLimit::Kind::kInfinite;
}

bool leibniz_sandwich() {
  const ConstantBracket quarter = const_bracket(kQuarterPi, kDigits);
  for (long n = 0; n <= 500; ++n) {
    const Rational s = leibniz_partial(n);
    const Rational near = (s - quarter.lo).abs() < (s - quarter.hi).abs() ? (s - quarter.lo).abs()
                                                                          : (s - quarter.hi).abs();
    if (quarter.contains(s)) return false;
    if (!(Rational(1, 2 * n + 3) - Rational(1, 2 * n + 5) < near)) return false;
    if (!(quarter.max_distance(s) < Rational(1, 2 * n + 3))) return false;
  }
  return true;
}

bool geometric_acceleration() {
  std::vector<long> depths;
  for (long n = 5; n <= 60; ++n) depths.push_back(n);
  const auto rows = compare_table(preset("conjecture-pi4"), kMinusQuarterPi, depths, 60);
  Rational worst = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Rational ratio = rows[i].cf_error / rows[i - 1].cf_error;
    if (ratio > worst) worst = ratio;
  }
  note << "worst ratio " << to_decimal(worst, 4);
  return worst < Rational(1, 4);
}

bool parser_properties() {
  auto poly = [](std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
  };
  const PolyRat f1 = parse_sequence_expr("(n-1)^2");
  const PolyRat f2 = parse_sequence_expr("-(2*n-1)");
  const PolyRat f3 = parse_sequence_expr("n^2/(4*n^2-1)");
  if (!(f1.num() == poly({1, -2, 1}) && f1.den() == poly({1}))) return false;
  if (!(f2.num() == poly({1, -2}) && f2.den() == poly({1}))) return false;
  if (!(f3.num() == poly({0, 0, 1}) && f3.den() == poly({-1, 0, 4}))) return false;

  testing::Random rng(99);
  for (int i = 0; i < 500; ++i) {
    Polynomial den = rng.polynomial(4);
    if (den.is_zero()) den = Polynomial(Rational(1));
    const PolyRat p(rng.polynomial(4), den);
    if (!(parse_sequence_expr(print_expr(p)) == p)) return false;
  }
  long compared = 0;
  for (int i = 0; i < 500; ++i) {
    const std::string text = testing::random_expr(rng, 4);
    const ExprNode ast = parse_expr_ast(text);
    PolyRat lowered;
    try {
      lowered = parse_sequence_expr(text);
    } catch (const ZeroDenominatorError&) {
      for (long n = 0; n < 100; ++n) {
        if (testing::interpret(ast, Rational(n))) return false;
      }
      continue;
    }
    for (long n = 0; n < 100; ++n) {
      const auto direct = testing::interpret(ast, Rational(n));
      if (!direct || lowered.den().eval(Rational(n)).is_zero()) continue;
      if (lowered.eval(Rational(n)) != *direct) return false;
      ++compared;
    }
  }
  note << "500 round trips, " << compared << " differential evaluations";
  return true;
}

bool pi_oracle() {
  const Rational pi_lo = testing::pi_truncated(100);
  const Rational pi_hi = pi_lo + pow10(-100);
  for (unsigned d : {1u, 10u, 50u, 200u}) {
    const ConstantBracket b = pi_bracket(d);
    if (!(b.width() <= pow10(-static_cast<long>(d)))) return false;
    if (d <= 100 ? !(b.lo < pi_lo && pi_hi < b.hi) : !(pi_lo < b.lo && b.hi < pi_hi)) {
      return false;
    }
  }
  const ConstantBracket b50 = pi_bracket(50);
  const std::string expected = testing::kPi100.substr(0, 52);
  return to_decimal(b50.lo, 50) == expected && to_decimal(b50.hi, 50) == expected;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"end-to-end regeneration of the conjecture from the Gauss fraction", regeneration},
      {"depth-25 error below 1.15e-10 and verify exits 0", value_verification},
      {"precision milestones at depths 6, 16, 26", precision_milestones},
      {"Leibniz/CF error ratio at n=25 at least 1e8", error_ratio},
      {"convergents invariant under equivalence scaling", equivalence_invariance},
      {"Gauss coefficient collapse d_n = n^2/(4n^2-1)", collapse_identity},
      {"hypergeometric, Leibniz and Euler fraction agree", series_identity},
      {"ratio diagnostics and regime classification", rho_diagnostics},
      {"Leibniz alternating-series sandwich", leibniz_sandwich},
      {"consecutive error ratios below 1/4 for depths 6..60", geometric_acceleration},
      {"expression parser properties and fixtures", parser_properties},
      {"pi oracle width contract and published digits", pi_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    note.str("");
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first;
    if (!note.str().empty()) std::cout << " (" << note.str() << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
