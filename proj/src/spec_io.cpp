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

#include "cfkit/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "cfkit/errors.hpp"
#include "json.hpp"

namespace cfkit {

namespace {

using nlohmann::json;

json rationals_to_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

json tail_to_json(const PolyRat& f, long start) {
  return json{{"num", rationals_to_json(f.num().coeffs())},
              {"den", rationals_to_json(f.den().coeffs())},
              {"start", start}};
}

json sequence_to_json(const CoefficientSequence& s) {
  json out;
  out["head"] = rationals_to_json(s.head());
  const long start = s.head_size() + 1;
  out["tail"] = s.tail() ? tail_to_json(*s.tail(), start) : json(nullptr);
  if (s.odd_tail()) out["tail_odd"] = tail_to_json(*s.odd_tail(), start);
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw FormatError("expected a rational string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw FormatError(e.what());
  }
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

PolyRat tail_from_json(const json& j, long head_size) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw FormatError("tail needs 'num' and 'den'");
  }
  if (j.contains("start")) {
    if (!j["start"].is_number_integer() || j["start"].get<long>() != head_size + 1) {
      throw FormatError("tail 'start' must equal head length + 1");
    }
  }
  const Polynomial den(rationals_from_json(j["den"]));
  if (den.is_zero()) throw FormatError("tail denominator is the zero polynomial");
  return PolyRat(Polynomial(rationals_from_json(j["num"])), den);
}

CoefficientSequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("sequence must be an object");
  std::vector<Rational> head;
  if (j.contains("head")) head = rationals_from_json(j["head"]);
  const long h = static_cast<long>(head.size());
  std::optional<PolyRat> tail;
  std::optional<PolyRat> odd;
  if (j.contains("tail") && !j["tail"].is_null()) tail = tail_from_json(j["tail"], h);
  if (j.contains("tail_odd") && !j["tail_odd"].is_null()) {
    if (!tail) throw FormatError("'tail_odd' without 'tail'");
    odd = tail_from_json(j["tail_odd"], h);
  }
  if (head.empty() && !tail) throw FormatError("sequence has neither head nor tail");
  return CoefficientSequence(std::move(head), std::move(tail), std::move(odd));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string serialize_spec(const CFSpec& cf) {
  json out;
  out["b0"] = cf.b0.str();
  out["a"] = sequence_to_json(cf.a);
  out["b"] = sequence_to_json(cf.b);
  if (cf.name) out["name"] = *cf.name;
  return out.dump(2) + "\n";
}

std::string serialize_sequence(const CoefficientSequence& s) {
  return sequence_to_json(s).dump(2) + "\n";
}

CFSpec parse_spec(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw FormatError("spec needs 'a' and 'b'");
  }
  CFSpec cf;
  cf.b0 = j.contains("b0") ? rational_from_json(j["b0"]) : Rational(0);
  cf.a = sequence_from_json(j["a"]);
  cf.b = sequence_from_json(j["b"]);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw FormatError("'name' must be a string");
    cf.name = j["name"].get<std::string>();
  }
  return cf;
}

CoefficientSequence parse_sequence(std::string_view text) {
  return sequence_from_json(parse_json(text));
}

CFSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

void write_spec_file(const std::string& path, const CFSpec& cf) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize_spec(cf);
}

}  // namespace cfkit
