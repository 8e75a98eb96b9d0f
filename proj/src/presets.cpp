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

#include "cfkit/presets.hpp"

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

// c1*n + c0.
PolyRat lin(std::int64_t c1, std::int64_t c0) {
  return PolyRat(Polynomial::linear(Rational(c1), Rational(c0)));
}

}  // namespace

CFSpec preset(std::string_view name) {
  CFSpec cf;
  cf.b0 = 0;
  cf.name = std::string(name);
  if (name == "conjecture-pi4") {
    cf.a = CoefficientSequence({Rational(1)}, lin(1, -1) * lin(1, -1));
    cf.b = CoefficientSequence::of(lin(-2, 1));
  } else if (name == "euler-pi4") {
    cf.a = CoefficientSequence({Rational(1)}, lin(2, -3) * lin(2, -3));
    cf.b = CoefficientSequence({Rational(1)}, PolyRat(Rational(2)));
  } else if (name == "gauss-pi4") {
    cf.a = CoefficientSequence(
        {Rational(-1)}, lin(1, -1) * lin(1, -1) / (lin(2, -3) * lin(2, -1)));
    cf.b = CoefficientSequence::constant(1);
  } else {
    throw UnknownPresetError(std::string(name));
  }
  return cf;
}

std::vector<std::string> preset_names() {
  return {"conjecture-pi4", "euler-pi4", "gauss-pi4"};
}

}  // namespace cfkit
