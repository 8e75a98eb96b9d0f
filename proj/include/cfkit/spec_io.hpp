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

#ifndef CFKIT_SPEC_IO_HPP_
#define CFKIT_SPEC_IO_HPP_

#include <string>
#include <string_view>

#include "cfkit/continued_fraction.hpp"

namespace cfkit {

// CF-spec files are UTF-8 JSON:
//
//   {
//     "a": {"head": ["1"], "tail": {"den": ["1"], "num": ["1", "-2", "1"], "start": 2}},
//     "b": {"head": [], "tail": {"den": ["1"], "num": ["1", "-2"], "start": 1}},
//     "b0": "0",
//     "name": "conjecture-pi4"
//   }
//
// Polynomial coefficients are in ascending powers of n; every rational is a
// "p/q" string ("p" when q = 1). `start` is the first index the tail covers
// (head length + 1). A head-only sequence has "tail": null. A parity-split
// tail stores the even-n branch in "tail" and the odd-n branch in
// "tail_odd". Keys are emitted in sorted order.
std::string serialize_spec(const CFSpec& cf);
std::string serialize_sequence(const CoefficientSequence& s);

// Throw FormatError on malformed input.
CFSpec parse_spec(std::string_view text);
CoefficientSequence parse_sequence(std::string_view text);

CFSpec read_spec_file(const std::string& path);
void write_spec_file(const std::string& path, const CFSpec& cf);

}  // namespace cfkit

#endif  // CFKIT_SPEC_IO_HPP_
