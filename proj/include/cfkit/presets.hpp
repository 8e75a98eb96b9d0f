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

#ifndef CFKIT_PRESETS_HPP_
#define CFKIT_PRESETS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "cfkit/continued_fraction.hpp"

namespace cfkit {

// Built-in continued fractions:
//
//   conjecture-pi4   -pi/4 = 1/(-1 + 1^2/(-3 + 2^2/(-5 + ...)))
//                    a = [1] then (n-1)^2, b = -(2n-1)
//   euler-pi4         pi/4 = 1/(1 + 1^2/(2 + 3^2/(2 + ...)))
//                    a = (2n-3)^2 (a_1 = 1), b = [1] then 2
//   gauss-pi4        -pi/4 as the unit-denominator Gauss fraction
//                    a = [-1] then (n-1)^2/((2n-3)(2n-1)), b = 1
//
// Throws UnknownPresetError for any other name.
CFSpec preset(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace cfkit

#endif  // CFKIT_PRESETS_HPP_
