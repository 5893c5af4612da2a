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

// Superelliptic curves y^m = f(x) over F_p: genus, rational points over
// F_{p^e}, and the explicit automorphisms of y^m = x^p - x.

#ifndef SUPERCURVE_CURVE_HPP
#define SUPERCURVE_CURVE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercurve/arith.hpp"
#include "supercurve/error.hpp"
#include "supercurve/ff.hpp"
#include "supercurve/poly.hpp"

namespace supercurve {

enum class CurveKind { hyperelliptic, artin_schreier_quotient, general };

inline const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::hyperelliptic: return "hyperelliptic";
    case CurveKind::artin_schreier_quotient: return "artin-schreier-quotient";
    case CurveKind::general: return "general";
  }
  return "?";
}

class SuperellipticCurve {
 public:
  /// y^m = f(x) with the kind inferred: m = 2 and f squarefree gives
  /// hyperelliptic, f = x^p - x with m | p + 1 gives the quotient family,
  /// anything else is general.
  static SuperellipticCurve make(std::uint64_t m, const Polynomial& f) {
    validate_common(m, f);
    const auto p = f.field().characteristic();
    CurveKind kind = CurveKind::general;
    if (m == 2 && is_squarefree(f)) {
      kind = CurveKind::hyperelliptic;
    } else if (f == artin_schreier_poly(f.field()) && (p + 1) % m == 0) {
      kind = CurveKind::artin_schreier_quotient;
    }
    return SuperellipticCurve(m, f, kind);
  }

  /// y^m = x^p - x over F_p; m must divide p + 1.
  static SuperellipticCurve quotient_family(std::uint64_t p, std::uint64_t m) {
    const Field fp = make_field(p);
    if (m < 2 || (p + 1) % m != 0) {
      throw invalid_curve("m = " + std::to_string(m) + " does not divide p + 1 = " +
                          std::to_string(p + 1));
    }
    const Polynomial f = artin_schreier_poly(fp);
    validate_common(m, f);
    return SuperellipticCurve(m, f, CurveKind::artin_schreier_quotient);
  }

  std::uint64_t p() const { return f_.field().characteristic(); }
  std::uint64_t m() const { return m_; }
  const Polynomial& f() const { return f_; }
  Field base_field() const { return f_.field(); }
  CurveKind kind() const { return kind_; }

  /// f = x^p - x and m | p + 1, whatever kind was inferred. Such curves carry
  /// the Mobius automorphisms.
  bool is_quotient_model() const {
    return (p() + 1) % m_ == 0 && f_ == artin_schreier_poly(f_.field());
  }

  /// (p + 1) / m; only for the quotient model.
  std::uint64_t m_prime() const {
    if (!is_quotient_model()) throw unsupported_model("m' is defined only for y^m = x^p - x");
    return (p() + 1) / m_;
  }

  /// Genus of the smooth projective model.
  std::uint64_t genus() const {
    switch (kind_) {
      case CurveKind::hyperelliptic:
        return static_cast<std::uint64_t>((f_.degree() - 1) / 2);
      case CurveKind::artin_schreier_quotient:
        return (p() - 1) * (m_ - 1) / 2;
      case CurveKind::general:
        break;
    }
    throw unsupported_model("genus is not implemented for general superelliptic models");
  }

  std::string to_string() const {
    return "y^" + std::to_string(m_) + " = " + f_.to_string() + " mod " + std::to_string(p());
  }

 private:
  SuperellipticCurve(std::uint64_t m, Polynomial f, CurveKind kind)
      : m_(m), f_(std::move(f)), kind_(kind) {}

  static void validate_common(std::uint64_t m, const Polynomial& f) {
    if (!f.field().valid() || !f.field().is_prime_field()) {
      throw invalid_curve("f must have coefficients in a prime field");
    }
    const auto p = f.field().characteristic();
    if (m < 2) throw invalid_curve("the exponent m must be at least 2");
    if (std::gcd(m, p) != 1) {
      throw invalid_curve("gcd(m, p) = gcd(" + std::to_string(m) + ", " + std::to_string(p) +
                          ") must be 1");
    }
    if (f.degree() < 1) throw invalid_curve("f must be non-constant");
  }

  std::uint64_t m_;
  Polynomial f_;
  CurveKind kind_;
};

enum class PointStatus { maximal, minimal, neither };

inline const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::maximal: return "maximal";
    case PointStatus::minimal: return "minimal";
    case PointStatus::neither: return "neither";
  }
  return "?";
}

struct PointCount {
  int e = 0;                    // counted over F_{p^e}
  std::uint64_t field_order = 0;  // p^e
  std::uint64_t count = 0;
  PointStatus status = PointStatus::neither;  // only set when e is even
};

namespace detail {

/// Points at infinity of the smooth model over F_Q.
inline std::uint64_t points_at_infinity(const SuperellipticCurve& c, const Field& k) {
  switch (c.kind()) {
    case CurveKind::artin_schreier_quotient:
      return 1;
    case CurveKind::hyperelliptic: {
      if (c.f().degree() % 2 == 1) return 1;
      // Two branches y/x^{d/2} = +-sqrt(lc), rational iff lc is a square.
      return is_mth_power(embed(c.f().leading(), k), 2) ? 2 : 0;
    }
    case CurveKind::general:
      break;
  }
  throw unsupported_model("points at infinity are not normalized for general models");
}

inline void require_supported(const SuperellipticCurve& c) {
  if (c.kind() == CurveKind::general) {
    throw unsupported_model("operation not supported for general superelliptic models");
  }
}

inline Field extension(const SuperellipticCurve& c, int e) {
  if (e < 1) throw domain_error("extension degree e must be at least 1");
  const Field k = make_field(c.p(), e);
  (void)k.enumerable_order();
  return k;
}

}  // namespace detail

/// Number of F_{p^e}-rational points of the smooth model, with the Weil bound
/// checked and the maximal/minimal status for even e.
inline PointCount count_points(const SuperellipticCurve& c, int e) {
  detail::require_supported(c);
  const Field k = detail::extension(c, e);
  const std::uint64_t q_e = k.enumerable_order();
  const Polynomial f = c.f().lift(k);
  const std::uint64_t fiber = std::gcd(c.m(), q_e - 1);

  std::uint64_t n = detail::points_at_infinity(c, k);
  for (std::uint64_t i = 0; i < q_e; ++i) {
    const FieldElement v = f.eval(k.element_at(i));
    if (v.is_zero()) {
      n += 1;
    } else if (is_mth_power(v, c.m())) {
      n += fiber;
    }
  }

  const Integer g = c.genus();
  const Integer dev = Integer(n) - Integer(q_e) - 1;
  if (dev * dev > 4 * g * g * Integer(q_e)) {
    throw error("Weil bound violated by " + c.to_string() + " over F_" + std::to_string(q_e));
  }

  PointCount pc{e, q_e, n, PointStatus::neither};
  if (e % 2 == 0) {
    const Integer q = *checked_pow(c.p(), static_cast<unsigned>(e / 2));
    const Integer nn = n;
    if (nn == q * q + 2 * g * q + 1) {
      pc.status = PointStatus::maximal;
    } else if (nn == q * q - 2 * g * q + 1) {
      pc.status = PointStatus::minimal;
    }
  }
  return pc;
}

/// A point of the smooth model. Affine points carry (x, y). Points at infinity
/// carry y = 0 when there is a single one, and the branch value
/// s = lim y / x^{deg f / 2} when a hyperelliptic model has two.
struct CurvePoint {
  bool at_infinity = false;
  FieldElement x;
  FieldElement y;

  static CurvePoint affine(FieldElement x, FieldElement y) {
    return {false, std::move(x), std::move(y)};
  }
  static CurvePoint infinity(const Field& k) { return {true, k.zero(), k.zero()}; }
  static CurvePoint infinity_branch(FieldElement s) {
    Field k = s.field();
    return {true, k.zero(), std::move(s)};
  }

  std::string to_string() const {
    if (at_infinity) return y.is_zero() ? "inf" : "inf[" + y.to_string() + "]";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
  }

  /// Affine points first, by (x, y); then the points at infinity.
  friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
    if (a.at_infinity != b.at_infinity) return a.at_infinity <=> b.at_infinity;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return (a <=> b) == 0;
  }
};

/// All F_{p^e}-rational points in ascending order.
inline std::vector<CurvePoint> rational_points(const SuperellipticCurve& c, int e) {
  detail::require_supported(c);
  const Field k = detail::extension(c, e);
  const std::uint64_t q_e = k.enumerable_order();
  // m-th roots by table: index of y^m -> list of y.
  std::vector<std::vector<std::uint64_t>> roots(q_e);
  for (std::uint64_t i = 1; i < q_e; ++i) {
    roots[k.index_of(k.element_at(i).pow(c.m()))].push_back(i);
  }
  const Polynomial f = c.f().lift(k);
  std::vector<CurvePoint> pts;
  for (std::uint64_t i = 0; i < q_e; ++i) {
    const FieldElement x = k.element_at(i);
    const FieldElement v = f.eval(x);
    if (v.is_zero()) {
      pts.push_back(CurvePoint::affine(x, k.zero()));
      continue;
    }
    for (auto j : roots[k.index_of(v)]) pts.push_back(CurvePoint::affine(x, k.element_at(j)));
  }
  if (c.kind() == CurveKind::hyperelliptic && c.f().degree() % 2 == 0) {
    const FieldElement lc = embed(c.f().leading(), k);
    for (auto j : roots[k.index_of(lc)]) pts.push_back(CurvePoint::infinity_branch(k.element_at(j)));
  } else {
    pts.push_back(CurvePoint::infinity(k));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// The automorphisms used on y^m = x^p - x: (x, y) -> (x, zeta y); the
/// SL(2, F_p) action (x, y) -> ((ax+b)/(cx+d), y/(cx+d)^{m'}); and, for
/// m = p + 1, the translations (x, y) -> (x - beta^p y + gamma, y + beta) with
/// beta^{p^2 - 1} = -1 and gamma^p - gamma = beta^{p+1}.
class CurveAutomorphism {
 public:
  enum class Kind { root_of_unity, mobius, translation };

  static CurveAutomorphism root_of_unity(FieldElement zeta) {
    if (zeta.is_zero()) throw domain_error("zeta must be a root of unity");
    CurveAutomorphism s(Kind::root_of_unity);
    s.coef_ = {std::move(zeta)};
    return s;
  }

  /// Entries in F_p with ad - bc = 1.
  static CurveAutomorphism mobius(const FieldElement& a, const FieldElement& b,
                                  const FieldElement& c, const FieldElement& d) {
    for (const auto* v : {&a, &b, &c, &d}) {
      if (!v->field().is_prime_field()) throw domain_error("Mobius entries must lie in F_p");
    }
    if (!(a * d - b * c).is_one()) throw domain_error("Mobius matrix must have determinant 1");
    CurveAutomorphism s(Kind::mobius);
    s.coef_ = {a, b, c, d};
    return s;
  }

  static CurveAutomorphism mobius(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t d) {
    const Field fp = make_field(p);
    return mobius(fp.from_int(a), fp.from_int(b), fp.from_int(c), fp.from_int(d));
  }

  static CurveAutomorphism translation(const FieldElement& beta, const FieldElement& gamma) {
    const auto p = beta.characteristic();
    if (beta.field() != gamma.field()) throw field_mismatch("beta and gamma in different fields");
    if (!(beta.pow(p * p - 1) == -beta.field().one())) {
      throw domain_error("translation needs beta^(p^2 - 1) = -1");
    }
    if (!(gamma.pow(p) - gamma == beta.pow(p + 1))) {
      throw domain_error("translation needs gamma^p - gamma = beta^(p + 1)");
    }
    CurveAutomorphism s(Kind::translation);
    s.coef_ = {beta, gamma};
    return s;
  }

  Kind kind() const { return kind_; }
  const FieldElement& zeta() const { return coef_.at(0); }
  const FieldElement& a() const { return coef_.at(0); }
  const FieldElement& b() const { return coef_.at(1); }
  const FieldElement& c() const { return coef_.at(2); }
  const FieldElement& d() const { return coef_.at(3); }
  const FieldElement& beta() const { return coef_.at(0); }
  const FieldElement& gamma() const { return coef_.at(1); }

  /// Composite acting as this after other on points: (this o other)(P).
  /// Defined for two Mobius maps.
  CurveAutomorphism after(const CurveAutomorphism& other) const {
    if (kind_ != Kind::mobius || other.kind_ != Kind::mobius) {
      throw domain_error("composition is implemented for Mobius maps only");
    }
    return mobius(a() * other.a() + b() * other.c(), a() * other.b() + b() * other.d(),
                  c() * other.a() + d() * other.c(), c() * other.b() + d() * other.d());
  }

  std::string label() const {
    switch (kind_) {
      case Kind::root_of_unity: return "zeta=" + zeta().to_string();
      case Kind::mobius:
        return "mobius(" + a().to_string() + "," + b().to_string() + "," + c().to_string() + "," +
               d().to_string() + ")";
      case Kind::translation:
        return "translation(beta=" + beta().to_string() + ",gamma=" + gamma().to_string() + ")";
    }
    return "?";
  }

 private:
  explicit CurveAutomorphism(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<FieldElement> coef_;
};

/// Image of P under sigma. The point's coordinates must lie in a field that
/// contains the entries of sigma.
inline CurvePoint apply_automorphism(const SuperellipticCurve& c, const CurveAutomorphism& s,
                                     const CurvePoint& pt) {
  detail::require_supported(c);
  const Field k = pt.y.field();
  using K = CurveAutomorphism::Kind;
  if (s.kind() == K::root_of_unity) {
    const FieldElement z = embed(s.zeta(), k);
    if (!z.pow(c.m()).is_one()) throw domain_error("zeta^m != 1");
    if (pt.at_infinity) {
      // Two branches at infinity are swapped by y -> -y; a lone point is fixed.
      return CurvePoint{true, pt.x, z * pt.y};
    }
    return CurvePoint::affine(pt.x, z * pt.y);
  }
  if (!c.is_quotient_model()) {
    throw unsupported_model("Mobius and translation maps act only on y^m = x^p - x, m | p + 1");
  }
  if (s.kind() == K::translation) {
    if (pt.at_infinity) return pt;
    const FieldElement beta = embed(s.beta(), k);
    const FieldElement gamma = embed(s.gamma(), k);
    return CurvePoint::affine(pt.x - beta.frobenius() * pt.y + gamma, pt.y + beta);
  }
  const FieldElement a = embed(s.a(), k), b = embed(s.b(), k);
  const FieldElement cc = embed(s.c(), k), d = embed(s.d(), k);
  if (pt.at_infinity) {
    if (cc.is_zero()) return pt;
    return CurvePoint::affine(a / cc, k.zero());
  }
  const FieldElement den = cc * pt.x + d;
  if (den.is_zero()) return CurvePoint::infinity(k);
  return CurvePoint::affine((a * pt.x + b) / den, pt.y / den.pow(c.m_prime()));
}

struct OrbitPartition {
  std::vector<CurvePoint> points;                // ascending
  std::vector<std::vector<std::size_t>> orbits;  // indices into points, each ascending

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& o : orbits) s.push_back(o.size());
    return s;
  }
};

namespace detail {

inline std::size_t point_index(const std::vector<CurvePoint>& pts, const CurvePoint& pt) {
  auto it = std::lower_bound(pts.begin(), pts.end(), pt);
  if (it == pts.end() || !(*it == pt)) {
    throw error("automorphism image " + pt.to_string() + " is not a rational point");
  }
  return static_cast<std::size_t>(it - pts.begin());
}

}  // namespace detail

/// Orbits of the group generated by gens on the F_{p^e}-rational points,
/// found by breadth-first closure from each unvisited point in ascending order.
inline OrbitPartition orbit_partition(const SuperellipticCurve& c,
                                      const std::vector<CurveAutomorphism>& gens, int e) {
  OrbitPartition out;
  out.points = rational_points(c, e);
  const auto& pts = out.points;
  std::vector<bool> seen(pts.size(), false);
  for (std::size_t start = 0; start < pts.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gens) {
        const std::size_t j = detail::point_index(pts, apply_automorphism(c, g, pts[orbit[head]]));
        if (!seen[j]) {
          seen[j] = true;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

/// sigma maps the F_{p^e}-rational points bijectively onto themselves.
inline bool permutes_rational_points(const SuperellipticCurve& c, const CurveAutomorphism& s,
                                     int e) {
  const auto pts = rational_points(c, e);
  std::vector<bool> hit(pts.size(), false);
  for (const auto& pt : pts) {
    const CurvePoint img = apply_automorphism(c, s, pt);
    auto it = std::lower_bound(pts.begin(), pts.end(), img);
    if (it == pts.end() || !(*it == img)) return false;
    const auto j = static_cast<std::size_t>(it - pts.begin());
    if (hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

/// The generators of the automorphism group of y^m = x^p - x used throughout:
/// a primitive m-th root of unity in F_{p^2}, x -> x + 1, x -> w^2 x (as the
/// SL(2) element diag(w, 1/w) with w primitive in F_p), and x -> -1/x.
inline std::vector<CurveAutomorphism> standard_generators(const SuperellipticCurve& c) {
  if (!c.is_quotient_model()) throw unsupported_model("standard generators need y^m = x^p - x");
  const auto p = c.p();
  const Field fp = make_field(p);
  std::vector<CurveAutomorphism> gens;
  gens.push_back(CurveAutomorphism::root_of_unity(make_field(p, 2).root_of_unity(c.m())));
  gens.push_back(CurveAutomorphism::mobius(p, 1, 1, 0, 1));
  if (p > 2) {
    const FieldElement w = fp.primitive_element();
    gens.push_back(CurveAutomorphism::mobius(w, fp.zero(), fp.zero(), w.inverse()));
  }
  gens.push_back(CurveAutomorphism::mobius(p, 0, 1, -1, 0));
  return gens;
}

}  // namespace supercurve

#endif  // SUPERCURVE_CURVE_HPP
