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

#ifndef CFKIT_SEQUENCE_HPP_
#define CFKIT_SEQUENCE_HPP_

#include <optional>
#include <vector>

#include "cfkit/polynomial.hpp"
#include "cfkit/rational.hpp"

namespace cfkit {

// Sequence s_1, s_2, ... given by explicit values for n = 1..H followed by a
// rational function of n for n > H. The tail may be split by parity of n, or
// be absent (head-only sequence, undefined past H).
//
// Canonical form: a parity split whose branches agree is merged, and trailing
// head entries that the tail already reproduces are dropped. Equality is
// therefore equality of the generated sequences whenever both have tails.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  CoefficientSequence(std::vector<Rational> head, std::optional<PolyRat> tail,
                      std::optional<PolyRat> odd_tail = std::nullopt);

  static CoefficientSequence constant(const Rational& c) { return {{}, PolyRat(c)}; }
  static CoefficientSequence of(const PolyRat& tail) { return {{}, tail}; }

  const std::vector<Rational>& head() const { return head_; }
  long head_size() const { return static_cast<long>(head_.size()); }
  bool has_tail() const { return tail_.has_value(); }
  bool is_branched() const { return odd_tail_.has_value(); }
  // Tail for even n (and for all n when not branched).
  const std::optional<PolyRat>& tail() const { return tail_; }
  const std::optional<PolyRat>& odd_tail() const { return odd_tail_; }
  // The rational function used at index n > head_size(); requires has_tail().
  const PolyRat& tail_for(long n) const;

  // Last index with a defined value, or nullopt when unbounded.
  std::optional<long> last_index() const;

  // Value at n >= 1. Throws TailPoleError when the tail has a pole at n and
  // UndefinedTermError past the end of a head-only sequence.
  Rational at(long n) const;

  friend bool operator==(const CoefficientSequence&,
                         const CoefficientSequence&) = default;

 private:
  void canonicalize();
  std::vector<Rational> head_;
  std::optional<PolyRat> tail_;
  std::optional<PolyRat> odd_tail_;
};

inline Rational seq_eval(const CoefficientSequence& s, long n) { return s.at(n); }

}  // namespace cfkit

#endif  // CFKIT_SEQUENCE_HPP_
