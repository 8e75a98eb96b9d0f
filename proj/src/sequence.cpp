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

#include "cfkit/sequence.hpp"

#include <stdexcept>

#include "cfkit/errors.hpp"

namespace cfkit {

CoefficientSequence::CoefficientSequence(std::vector<Rational> head,
                                         std::optional<PolyRat> tail,
                                         std::optional<PolyRat> odd_tail)
    : head_(std::move(head)), tail_(std::move(tail)), odd_tail_(std::move(odd_tail)) {
  if (odd_tail_ && !tail_) {
    throw std::invalid_argument("odd tail given without an even tail");
  }
  canonicalize();
}

void CoefficientSequence::canonicalize() {
  if (odd_tail_ && *odd_tail_ == *tail_) odd_tail_.reset();
  if (!tail_) return;
  while (!head_.empty()) {
    const long n = head_size();
    const PolyRat& f = tail_for(n);
    const Rational d = f.den().eval(Rational(n));
    if (d.is_zero() || f.num().eval(Rational(n)) / d != head_.back()) break;
    head_.pop_back();
  }
}

const PolyRat& CoefficientSequence::tail_for(long n) const {
  if (odd_tail_ && n % 2 != 0) return *odd_tail_;
  return *tail_;
}

std::optional<long> CoefficientSequence::last_index() const {
  if (tail_) return std::nullopt;
  return head_size();
}

Rational CoefficientSequence::at(long n) const {
  if (n < 1) throw std::out_of_range("sequence index must be >= 1");
  if (n <= head_size()) return head_[static_cast<std::size_t>(n - 1)];
  if (!tail_) throw UndefinedTermError(n);
  const PolyRat& f = tail_for(n);
  const Rational x(n);
  const Rational d = f.den().eval(x);
  if (d.is_zero()) throw TailPoleError(n);
  return f.num().eval(x) / d;
}

}  // namespace cfkit
