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

#ifndef CFKIT_BENCH_HPP_
#define CFKIT_BENCH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/constants.hpp"
#include "cfkit/continued_fraction.hpp"

namespace cfkit {

// S_n = sum_{k=0..n} (-1)^k / (2k+1).
Rational leibniz_partial(long n);

// One line of a series-versus-fraction comparison. Errors are certified
// upper bounds.
struct ComparisonRow {
  long n = 0;
  Rational series_error;               // |S_n - pi/4|
  Rational cf_error;                   // |f_n - target|
  std::optional<Rational> error_ratio; // series_error / cf_error; absent if cf_error = 0
  std::size_t cf_decimals = 0;         // kExactDecimals when cf_error = 0
  std::optional<double> cf_millis;     // wall time of f_n, when requested
};

struct CompareOptions {
  bool timing = false;
};

// For each depth n: the Leibniz partial sum S_n against pi/4 and the
// convergent f_n of `cf` against `target`, both certified with brackets at
// `digits`. Rows are computed concurrently. Throws BracketTooWideError unless
// each bracket is narrower than a tenth of every error it certifies, and
// UndefinedConvergentError when some f_n does not exist.
std::vector<ComparisonRow> compare_table(const CFSpec& cf, const ConstantExpr& target,
                                         const std::vector<long>& depths, unsigned digits,
                                         const CompareOptions& options = {});

enum class ReportFormat { kText, kCsv };

// csv: header "n,series_error,cf_error,error_ratio,cf_decimals" and one line
// per row; errors and ratios in scientific notation with 3 significant digits
// (truncated), or as exact "p/q" strings when `exact`. A trailing cf_ms column
// appears when rows carry timings. text: the same columns, aligned.
std::string render_report(const std::vector<ComparisonRow>& rows, ReportFormat format,
                          bool exact = false);

}  // namespace cfkit

#endif  // CFKIT_BENCH_HPP_
