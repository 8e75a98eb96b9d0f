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

#include "cfkit/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "cfkit/errors.hpp"

namespace cfkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) {
  return Polynomial({b, a});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<std::int64_t>(i)));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(const Rational& k) const {
  const Polynomial x = linear(1, k);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / lc);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num,
                                                     const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial(), num};
  std::vector<Rational> rem = num.coeffs_;
  std::vector<Rational> quot(num.coeffs_.size() - den.coeffs_.size() + 1);
  const Rational lc = den.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational q = rem[i + den.coeffs_.size() - 1] / lc;
    quot[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < den.coeffs_.size(); ++j) {
      rem[i + j] -= q * den.coeffs_[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<long> Polynomial::integer_roots(long lo, long hi) const {
  if (is_zero()) throw NumericError("integer_roots of the zero polynomial");
  std::vector<long> roots;
  if (is_constant() || lo > hi) return roots;

  const Polynomial sf =
      divmod(*this, gcd(*this, derivative())).first.monic();

  // Cauchy bound on |root|.
  Rational bound = 0;
  for (int i = 0; i < sf.degree(); ++i) bound = std::max(bound, sf.coeffs_[i].abs());
  const BigInt cauchy = ceil(bound) + 1;
  if (cauchy.fits_slong_p()) {
    lo = std::max(lo, -cauchy.get_si());
    hi = std::min(hi, cauchy.get_si());
  }
  if (lo > hi) return roots;

  std::vector<Polynomial> sturm{sf, sf.derivative()};
  while (!sturm.back().is_constant()) {
    Polynomial r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }
  auto variations = [&](const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& s : sturm) {
      const int sg = s.eval(x).sign();
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  };
  // A point of (k, k + 1) that is not a root.
  auto separator = [&](long k) {
    for (std::int64_t m = 2;; ++m) {
      const Rational x = Rational(k) + Rational(1, m);
      if (!sf.eval(x).is_zero()) return x;
    }
  };

  std::function<void(long, long)> search = [&](long l, long h) {
    if (variations(separator(l - 1)) - variations(separator(h)) == 0) return;
    if (l == h) {
      if (sf.eval(Rational(l)).is_zero()) roots.push_back(l);
      return;
    }
    const long mid = l + (h - l) / 2;
    search(l, mid);
    search(mid + 1, h);
  };
  search(lo, hi);
  return roots;
}

// PolyRat

PolyRat::PolyRat(const Rational& constant)
    : num_(constant), den_(Rational(1)) {
  canonicalize();
}

PolyRat::PolyRat(const Polynomial& poly) : num_(poly), den_(Rational(1)) {
  canonicalize();
}

PolyRat::PolyRat(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  canonicalize();
}

void PolyRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  // Scale to integer coefficients with unit content and den leading > 0.
  BigInt lcm_den = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    }
  }
  BigInt content = 0;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) {
      const BigInt scaled = c.num() * (lcm_den / c.den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational factor(lcm_den, content);
  if (den_.leading().sign() < 0) factor = -factor;
  num_ *= Polynomial(factor);
  den_ *= Polynomial(factor);
}

Rational PolyRat::leading() const {
  if (is_zero()) return 0;
  return num_.leading() / den_.leading();
}

Rational PolyRat::eval(const Rational& n) const {
  const Rational d = den_.eval(n);
  if (d.is_zero()) throw DivisionByZeroError("rational function pole");
  return num_.eval(n) / d;
}

PolyRat PolyRat::shifted(const Rational& k) const {
  return PolyRat(num_.shifted(k), den_.shifted(k));
}

PolyRat PolyRat::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of the zero function");
  return PolyRat(den_, num_);
}

PolyRat& PolyRat::operator+=(const PolyRat& rhs) {
  *this = PolyRat(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

PolyRat& PolyRat::operator-=(const PolyRat& rhs) {
  *this = PolyRat(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

PolyRat& PolyRat::operator*=(const PolyRat& rhs) {
  *this = PolyRat(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

PolyRat& PolyRat::operator/=(const PolyRat& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError("division by the zero function");
  *this = PolyRat(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

PolyRat PolyRat::operator-() const {
  PolyRat out = *this;
  out.num_ = -out.num_;
  return out;
}

}  // namespace cfkit
