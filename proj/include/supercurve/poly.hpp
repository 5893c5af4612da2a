// Copyright 2026 The supercurve Authors.
//
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

// Dense univariate polynomials over a finite field. Multiplication is
// schoolbook, which is fine up to degree ~1e4.

#ifndef SUPERCURVE_POLY_HPP
#define SUPERCURVE_POLY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "supercurve/error.hpp"
#include "supercurve/ff.hpp"

namespace supercurve {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field field) : field_(field) {}

  /// coeffs[i] is the x^i coefficient; all must belong to `field`.
  Polynomial(Field field, std::vector<FieldElement> coeffs)
      : field_(field), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
      if (c.field() != field_) throw field_mismatch("coefficient outside " + field_.name());
    }
    trim();
  }

  /// Coefficients given as integers, reduced into the field.
  static Polynomial from_ints(Field field, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.from_int(v));
    return Polynomial(field, std::move(c));
  }

  static Polynomial constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

  static Polynomial monomial(const FieldElement& c, std::size_t degree) {
    std::vector<FieldElement> v(degree + 1, c.field().zero());
    v[degree] = c;
    return Polynomial(c.field(), std::move(v));
  }

  static Polynomial x(Field field) { return monomial(field.one(), 1); }

  Field field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  /// x^n coefficient; zero outside [0, deg].
  FieldElement coeff(long n) const {
    if (n < 0 || n > degree()) return field_.zero();
    return c_[static_cast<std::size_t>(n)];
  }

  FieldElement leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial& operator+=(const Polynomial& b) {
    check(b);
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), field_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& b) {
    check(b);
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), field_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(r));
  }

  friend Polynomial operator*(const FieldElement& s, const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree()) return {Polynomial(a.field_), rem};
    std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                                a.field_.zero());
    const FieldElement lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const FieldElement c = rem.leading() * lead_inv;
      const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
      q[shift] = c;
      for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[shift + i] -= c * b.c_[i];
      rem.trim();
    }
    return {Polynomial(a.field_, std::move(q)), rem};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
  }

  /// Formal derivative.
  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<FieldElement> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d.push_back(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())) * c_[i]);
    }
    return Polynomial(field_, std::move(d));
  }

  /// f^e by binary exponentiation; f^0 = 1 (also for f = 0).
  Polynomial pow(std::uint64_t e) const {
    Polynomial result = constant(field_.one());
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Horner evaluation at a point of this field or of an extension of it.
  FieldElement eval(const FieldElement& at) const {
    const Field k = at.field();
    FieldElement acc = k.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + embed(c_[i], k);
    return acc;
  }

  /// The same polynomial read over an extension K of the prime field.
  Polynomial lift(Field k) const {
    if (k == field_) return *this;
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(embed(v, k));
    return Polynomial(k, std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << f.to_string();
  }

 private:
  void check(const Polynomial& b) const {
    if (field_ != b.field_) {
      throw field_mismatch("polynomials over " + field_.name() + " and " + b.field_.name());
    }
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<FieldElement> c_;
};

/// Human-readable form, highest degree first: "x^5 + 4*x".
inline std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const auto& c = c_[i];
    if (c.is_zero()) continue;
    std::string coef = c.to_string();
    const bool compound = coef.find_first_of("+t") != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += coef;
    } else {
      if (!c.is_one()) out += coef + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

/// Monic gcd (zero when both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod modulus; modulus must be nonzero.
inline Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = divmod(Polynomial::constant(base.field().one()), modulus).second;
  Polynomial b = divmod(base, modulus).second;
  while (e != 0) {
    if (e & 1U) result = divmod(result * b, modulus).second;
    e >>= 1U;
    if (e != 0) b = divmod(b * b, modulus).second;
  }
  return result;
}

/// f has no repeated factor: gcd(f, f') is constant.
inline bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw domain_error("is_squarefree of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

/// All roots of f lying in K, found by evaluating f on every element of K.
/// K must contain the coefficient field of f and have at most 2^24 elements.
inline std::vector<FieldElement> roots_in_field(const Polynomial& f, const Field& k) {
  if (!embeds_into(f.field(), k)) {
    throw field_mismatch(k.name() + " does not contain " + f.field().name());
  }
  const std::uint64_t q = k.enumerable_order();
  if (f.is_zero()) throw domain_error("roots of the zero polynomial");
  const Polynomial g = f.lift(k);
  std::vector<FieldElement> roots;
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement a = k.element_at(i);
    if (g.eval(a).is_zero()) roots.push_back(std::move(a));
  }
  return roots;
}

/// Distinct roots of f in its own coefficient field, ascending. Only the
/// split part gcd(f, x^q - x) is searched element by element.
inline std::vector<FieldElement> distinct_roots(const Polynomial& f) {
  if (f.is_zero()) throw domain_error("roots of the zero polynomial");
  const Field k = f.field();
  const std::uint64_t q = k.enumerable_order();
  const Polynomial x = Polynomial::x(k);
  const Polynomial split = gcd(f, powmod(x, q, f) - x);
  if (split.degree() <= 0) return {};
  if (split.degree() == 1) return {-split.coeff(0)};
  return roots_in_field(split, k);
}

/// x^p - x over F_p.
inline Polynomial artin_schreier_poly(Field fp) {
  const auto p = fp.characteristic();
  return Polynomial::monomial(fp.one(), p) - Polynomial::x(fp);
}

}  // namespace supercurve

#endif  // SUPERCURVE_POLY_HPP
