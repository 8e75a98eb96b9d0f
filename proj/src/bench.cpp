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

#include "cfkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

#include "cfkit/diagnostics.hpp"
#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

void require_narrow(const ConstantBracket& bracket, const Rational& error, long n,
                    const char* what) {
  if (bracket.degenerate()) return;
  if (bracket.width() * Rational(10) > error) {
    throw BracketTooWideError(std::string("bracket too wide for the ") + what +
                              " error at n=" + std::to_string(n) +
                              "; increase --digits");
  }
}

std::string decimals_str(std::size_t d) {
  return d == kExactDecimals ? "exact" : std::to_string(d);
}

std::string millis_str(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

Rational leibniz_partial(long n) {
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Rational term(1, 2 * k + 1);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

std::vector<ComparisonRow> compare_table(const CFSpec& cf, const ConstantExpr& target,
                                         const std::vector<long>& depths, unsigned digits,
                                         const CompareOptions& options) {
  const ConstantBracket cf_bracket = const_bracket(target, digits);
  const ConstantBracket series_bracket = const_bracket({Rational(1, 4), 0}, digits);

  auto row_for = [&](long n) {
    ComparisonRow row;
    row.n = n;
    row.series_error = series_bracket.max_distance(leibniz_partial(n));
    const auto start = std::chrono::steady_clock::now();
    const Rational fn = convergent(cf, n);
    if (options.timing) {
      row.cf_millis = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    }
    row.cf_error = cf_bracket.max_distance(fn);
    require_narrow(series_bracket, row.series_error, n, "series");
    require_narrow(cf_bracket, row.cf_error, n, "continued fraction");
    if (!row.cf_error.is_zero()) row.error_ratio = row.series_error / row.cf_error;
    row.cf_decimals = decimals_for_error(row.cf_error);
    return row;
  };

  std::vector<std::future<ComparisonRow>> pending;
  pending.reserve(depths.size());
  for (long n : depths) pending.push_back(std::async(std::launch::async, row_for, n));
  std::vector<ComparisonRow> rows;
  rows.reserve(depths.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::string render_report(const std::vector<ComparisonRow>& rows, ReportFormat format,
                          bool exact) {
  const bool timed = std::any_of(rows.begin(), rows.end(),
                                 [](const auto& r) { return r.cf_millis.has_value(); });
  auto num = [&](const Rational& x) { return exact ? x.str() : to_scientific(x, 3); };

  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line{std::to_string(r.n), num(r.series_error),
                                  num(r.cf_error),
                                  r.error_ratio ? num(*r.error_ratio) : "inf",
                                  decimals_str(r.cf_decimals)};
    if (timed) line.push_back(r.cf_millis ? millis_str(*r.cf_millis) : "");
    cells.push_back(std::move(line));
  }

  std::ostringstream os;
  if (format == ReportFormat::kCsv) {
    os << "n,series_error,cf_error,error_ratio,cf_decimals" << (timed ? ",cf_ms" : "")
       << "\n";
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << line[i];
      os << "\n";
    }
    return os.str();
  }

  std::vector<std::string> header{"n", "Leibniz error", "CF error", "Error ratio",
                                  "Decimals"};
  if (timed) header.push_back("CF ms");
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) os << "  ";
      os << std::setw(static_cast<int>(width[i])) << line[i];
    }
    os << "\n";
  };
  emit(header);
  std::size_t total = 2 * (header.size() - 1);
  for (auto w : width) total += w;
  os << std::string(total, '-') << "\n";
  for (const auto& line : cells) emit(line);
  return os.str();
}

}  // namespace cfkit
