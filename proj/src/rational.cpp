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

#include "cfkit/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

mpq_class make_canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

bool parse_integer(std::string_view text, BigInt* out) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return out->set_str(s, 10) == 0;
}

}  // namespace

Rational::Rational(std::int64_t value)
    : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  value_ = make_canonical(mpq_class(mpz_class(static_cast<long>(num)),
                                    mpz_class(static_cast<long>(den))));
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  value_ = make_canonical(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, &num)) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), &num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' ||
        !parse_integer(den_text, &den)) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return Rational(make_canonical(mpq_class(value_.get_den(), value_.get_num())));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

Rational pow10(long k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(BigInt(1), p) : Rational(p);
}

std::string to_decimal(const Rational& x, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // |x| * 10^digits, truncated.
  BigInt scaled = ::abs(x.num()) * scale;
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (x.sign() < 0 && q != 0) body.insert(0, "-");
  return body;
}

std::string to_scientific(const Rational& x, unsigned significant) {
  if (x.is_zero()) return "0";
  if (significant == 0) significant = 1;
  const Rational mag = x.abs();
  // Find e with 10^e <= mag < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 10));
  while (mag < pow10(e)) --e;
  while (mag >= pow10(e + 1)) ++e;
  const BigInt mantissa =
      floor(mag * pow10(static_cast<long>(significant) - 1 - e));
  std::string digits = mantissa.get_str();
  std::string out = x.sign() < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += e < 0 ? "e-" : "e+";
  const std::string exp = std::to_string(e < 0 ? -e : e);
  if (exp.size() < 2) out += "0";
  out += exp;
  return out;
}

}  // namespace cfkit
