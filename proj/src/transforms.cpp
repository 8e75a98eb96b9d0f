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

#include "cfkit/transforms.hpp"

#include <algorithm>
#include <limits>

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

constexpr long kNoEnd = std::numeric_limits<long>::max() / 4;

const PolyRat& branch(const CoefficientSequence& s, bool odd) {
  return odd && s.odd_tail() ? *s.odd_tail() : *s.tail();
}

long end_of(const CoefficientSequence& s) { return s.last_index().value_or(kNoEnd); }

// Pointwise op(x_n, y_n). `op` must accept both Rational and PolyRat pairs.
template <typename Op>
CoefficientSequence zip(const CoefficientSequence& x, const CoefficientSequence& y,
                        Op op) {
  if (!x.has_tail() || !y.has_tail()) {
    const long last = std::min(end_of(x), end_of(y));
    std::vector<Rational> head;
    for (long n = 1; n <= last; ++n) head.push_back(op(x.at(n), y.at(n)));
    return CoefficientSequence(std::move(head), std::nullopt);
  }
  const long h = std::max(x.head_size(), y.head_size());
  std::vector<Rational> head;
  for (long n = 1; n <= h; ++n) head.push_back(op(x.at(n), y.at(n)));
  return CoefficientSequence(std::move(head), op(branch(x, false), branch(y, false)),
                             op(branch(x, true), branch(y, true)));
}

// s'_1 = 1, s'_n = s_{n-1}.
CoefficientSequence delayed(const CoefficientSequence& s) {
  std::vector<Rational> head{Rational(1)};
  head.insert(head.end(), s.head().begin(), s.head().end());
  if (!s.has_tail()) return CoefficientSequence(std::move(head), std::nullopt);
  const Rational back(-1);
  // Even n reads s at odd n-1 and vice versa.
  return CoefficientSequence(std::move(head), branch(s, true).shifted(back),
                             branch(s, false).shifted(back));
}

// Throws `ErrorT(n)` for the first index n in [1, last] where the numerator
// (or denominator, when `poles`) of s vanishes.
template <typename ErrorT>
void reject_zeros(const CoefficientSequence& s, bool poles, long last = kNoEnd) {
  const long h = std::min(s.head_size(), last);
  if (!poles) {
    for (long n = 1; n <= h; ++n) {
      if (s.head()[static_cast<std::size_t>(n - 1)].is_zero()) throw ErrorT(n);
    }
  }
  if (!s.has_tail() || last <= s.head_size()) return;
  long first = kNoEnd;
  for (bool odd : {false, true}) {
    const PolyRat& f = branch(s, odd);
    const Polynomial& p = poles ? f.den() : f.num();
    if (p.is_zero()) {
      // Identically zero tail: the first tail index of this parity.
      long n = s.head_size() + 1;
      if ((n % 2 != 0) != odd) ++n;
      first = std::min(first, n);
      continue;
    }
    for (long root : p.integer_roots(s.head_size() + 1, last)) {
      if ((root % 2 != 0) == odd || !s.is_branched()) {
        first = std::min(first, root);
        break;
      }
    }
  }
  if (first <= last && first != kNoEnd) throw ErrorT(first);
}

const auto kTimes = [](const auto& u, const auto& v) { return u * v; };
const auto kDivide = [](const auto& u, const auto& v) { return u / v; };

}  // namespace

CFSpec apply_equivalence(const CFSpec& cf, const ScalingSequence& r) {
  reject_zeros<ZeroScalingError>(r, false);
  reject_zeros<TailPoleError>(r, true);
  CFSpec out;
  out.b0 = cf.b0;
  out.name = cf.name;
  out.b = zip(r, cf.b, kTimes);
  out.a = zip(zip(r, delayed(r), kTimes), cf.a, kTimes);
  return out;
}

ScalingSequence scaling_to_match_denominators(const CFSpec& cf,
                                              const CoefficientSequence& target_b) {
  const long last = std::min(end_of(cf.b), end_of(target_b));
  // The tail of the quotient starts after both heads.
  const long h = std::max(cf.b.head_size(), target_b.head_size());
  for (long n = 1; n <= std::min(h, last); ++n) {
    if (cf.b.at(n).is_zero()) throw TailPoleError(n);
    if (target_b.at(n).is_zero()) throw ZeroScalingError(n);
  }
  if (last > h) {
    // Check the tails past the joint head through sequences whose head is
    // padded out to h.
    auto tail_only = [&](const CoefficientSequence& s) {
      std::vector<Rational> head(static_cast<std::size_t>(h), Rational(1));
      return CoefficientSequence(std::move(head), s.tail(), s.odd_tail());
    };
    if (cf.b.has_tail()) reject_zeros<TailPoleError>(tail_only(cf.b), false, last);
    if (target_b.has_tail()) {
      reject_zeros<ZeroScalingError>(tail_only(target_b), false, last);
    }
  }
  return zip(target_b, cf.b, kDivide);
}

ScalingSequence compose_scalings(const ScalingSequence& r, const ScalingSequence& s) {
  return zip(r, s, kTimes);
}

ScalingSequence reciprocal_scaling(const ScalingSequence& r) {
  reject_zeros<ZeroScalingError>(r, false);
  return zip(CoefficientSequence::constant(1), r, kDivide);
}

}  // namespace cfkit
