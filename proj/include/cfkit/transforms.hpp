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

#ifndef CFKIT_TRANSFORMS_HPP_
#define CFKIT_TRANSFORMS_HPP_

#include "cfkit/continued_fraction.hpp"
#include "cfkit/sequence.hpp"

namespace cfkit {

// Nonzero scaling factors r_1, r_2, ...; same head/tail structure as a
// coefficient sequence.
using ScalingSequence = CoefficientSequence;

// Equivalence transformation:
//
//   a~_1 = r_1 a_1,  a~_n = r_n r_{n-1} a_n (n >= 2),  b~_n = r_n b_n,
//
// b0 unchanged. Every convergent is preserved. Symbolic tails stay symbolic
// (products are reduced in canonical form, so common factors cancel).
// Throws ZeroScalingError at the first index where r vanishes and
// TailPoleError where r has a pole.
CFSpec apply_equivalence(const CFSpec& cf, const ScalingSequence& r);

// r_n = target_b(n) / b_n, so that apply_equivalence(cf, r) has partial
// denominators target_b. Throws TailPoleError where b_n = 0 and
// ZeroScalingError where target_b(n) = 0.
ScalingSequence scaling_to_match_denominators(const CFSpec& cf,
                                              const CoefficientSequence& target_b);

// Pointwise product: applying r then s equals applying compose_scalings(r, s).
ScalingSequence compose_scalings(const ScalingSequence& r, const ScalingSequence& s);

// Pointwise reciprocal 1/r_n; undoes apply_equivalence(., r).
ScalingSequence reciprocal_scaling(const ScalingSequence& r);

}  // namespace cfkit

#endif  // CFKIT_TRANSFORMS_HPP_
