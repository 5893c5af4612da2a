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

// The action of automorphisms of y^m = x^p - x on holomorphic differentials.
//
// Basis: x^i dx / y^j with 1 <= j <= m - 1 and 0 <= i <= m' j - 2, where
// m' = (p + 1) / m, ordered by (j, i). Matrices act on column vectors and the
// k-th column holds the pullback of the k-th basis element.

#ifndef SUPERCURVE_CANREP_HPP
#define SUPERCURVE_CANREP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "supercurve/curve.hpp"
#include "supercurve/error.hpp"
#include "supercurve/matrix.hpp"
#include "supercurve/meataxe.hpp"
#include "supercurve/poly.hpp"

namespace supercurve {

struct BasisEntry {
  std::uint64_t j = 0;  // power of y in the denominator
  std::uint64_t i = 0;  // power of x

  std::string label() const {
    std::string num = i == 0 ? "dx" : (i == 1 ? "x dx" : "x^" + std::to_string(i) + " dx");
    return num + (j == 1 ? "/y" : "/y^" + std::to_string(j));
  }
  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

struct DifferentialBasis {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t m_prime = 0;
  std::vector<BasisEntry> entries;

  std::size_t size() const { return entries.size(); }

  /// Position of x^i dx / y^j, or throws when it is not a basis element.
  std::size_t index_of(std::uint64_t j, std::uint64_t i) const {
    if (j < 1 || j >= m || i + 2 > m_prime * j) {
      throw error("x^" + std::to_string(i) + " dx/y^" + std::to_string(j) +
                  " falls outside the differential basis");
    }
    // Block j starts after sum_{l<j} (m' l - 1) entries.
    const std::uint64_t before = m_prime * (j - 1) * j / 2 - (j - 1);
    return static_cast<std::size_t>(before + i);
  }
};

inline DifferentialBasis build_basis(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) throw modulus_error(std::to_string(p) + " is not prime");
  if (m < 2 || (p + 1) % m != 0) {
    throw domain_error("m = " + std::to_string(m) + " must be at least 2 and divide p + 1 = " +
                       std::to_string(p + 1));
  }
  DifferentialBasis b{p, m, (p + 1) / m, {}};
  for (std::uint64_t j = 1; j < m; ++j) {
    for (std::uint64_t i = 0; i + 2 <= b.m_prime * j; ++i) b.entries.push_back({j, i});
  }
  return b;
}

/// The field the representation is written over: F_{p^2} holds the m-th
/// roots of unity; for m = p + 1 the translations need F_{p^4}.
inline Field representation_field(std::uint64_t p, std::uint64_t m) {
  return make_field(p, m == p + 1 ? 4 : 2);
}

namespace detail {

/// Dense bivariate polynomial sum c[a][b] x^a y^b.
struct Bivariate {
  Field k;
  std::vector<std::vector<FieldElement>> c;

  static Bivariate constant(const FieldElement& v) { return {v.field(), {{v}}}; }

  Bivariate operator*(const Bivariate& o) const {
    const std::size_t ax = c.size() + o.c.size() - 1;
    const std::size_t ay = c.front().size() + o.c.front().size() - 1;
    Bivariate r{k, std::vector<std::vector<FieldElement>>(ax, std::vector<FieldElement>(ay, k.zero()))};
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c[a].size(); ++b) {
        if (c[a][b].is_zero()) continue;
        for (std::size_t a2 = 0; a2 < o.c.size(); ++a2) {
          for (std::size_t b2 = 0; b2 < o.c[a2].size(); ++b2) {
            if (!o.c[a2][b2].is_zero()) r.c[a + a2][b + b2] += c[a][b] * o.c[a2][b2];
          }
        }
      }
    }
    return r;
  }

  Bivariate pow(std::uint64_t e) const {
    Bivariate r = constant(k.one());
    for (std::uint64_t t = 0; t < e; ++t) r = r * *this;
    return r;
  }
};

}  // namespace detail

/// Matrix of the pullback sigma^* on the basis, over `field`.
inline FieldMatrix generator_matrix(const DifferentialBasis& basis, const CurveAutomorphism& s,
                                    const Field& field) {
  const std::size_t n = basis.size();
  FieldMatrix mat(field, n, n);
  using K = CurveAutomorphism::Kind;
  switch (s.kind()) {
    case K::root_of_unity: {
      const FieldElement z = embed(s.zeta(), field);
      if (!z.pow(basis.m).is_one()) throw domain_error("zeta^m != 1");
      const FieldElement zinv = z.inverse();
      for (std::size_t k = 0; k < n; ++k) mat(k, k) = zinv.pow(basis.entries[k].j);
      return mat;
    }
    case K::mobius: {
      // sigma^*(x^i dx/y^j) = (ax + b)^i (cx + d)^{m'j - 2 - i} dx/y^j
      const Polynomial num(field, {embed(s.b(), field), embed(s.a(), field)});
      const Polynomial den(field, {embed(s.d(), field), embed(s.c(), field)});
      for (std::size_t k = 0; k < n; ++k) {
        const auto [j, i] = basis.entries[k];
        const Polynomial image = num.pow(i) * den.pow(basis.m_prime * j - 2 - i);
        for (long a = 0; a <= image.degree(); ++a) {
          mat(basis.index_of(j, static_cast<std::uint64_t>(a)), k) = image.coeff(a);
        }
      }
      return mat;
    }
    case K::translation: {
      // tau^*(x^i dx/y^j) = (x - beta^p y + gamma)^i (y + beta)^{p - j} dx/y^p, and
      // x^a y^b dx/y^p = x^a dx/y^{p - b}.
      if (basis.m != basis.p + 1) throw domain_error("translations act only when m = p + 1");
      const FieldElement beta = embed(s.beta(), field);
      const FieldElement gamma = embed(s.gamma(), field);
      const detail::Bivariate lin{field, {{gamma, -beta.frobenius()}, {field.one(), field.zero()}}};
      const detail::Bivariate shift{field, {{beta, field.one()}}};
      for (std::size_t k = 0; k < n; ++k) {
        const auto [j, i] = basis.entries[k];
        const detail::Bivariate image = lin.pow(i) * shift.pow(basis.p - j);
        for (std::size_t a = 0; a < image.c.size(); ++a) {
          for (std::size_t b = 0; b < image.c[a].size(); ++b) {
            if (image.c[a][b].is_zero()) continue;
            if (b >= basis.p) throw error("translation image leaves the differential basis");
            mat(basis.index_of(basis.p - b, a), k) = image.c[a][b];
          }
        }
      }
      return mat;
    }
  }
  throw domain_error("unknown automorphism kind");
}

inline FieldMatrix generator_matrix(const DifferentialBasis& basis, const CurveAutomorphism& s) {
  return generator_matrix(basis, s, representation_field(basis.p, basis.m));
}

/// The Mobius map whose pullback matrix is generator_matrix(first) *
/// generator_matrix(second): on points it applies `first` and then `second`.
inline CurveAutomorphism pullback_compose(const CurveAutomorphism& first,
                                          const CurveAutomorphism& second) {
  return second.after(first);
}

/// A translation (beta, gamma) of y^{p+1} = x^p - x: beta is the first power
/// of the primitive element of F_{p^4} with beta^{p^2 - 1} = -1, and gamma the
/// smallest solution of gamma^p - gamma = beta^{p+1}.
inline CurveAutomorphism hermitian_translation(std::uint64_t p) {
  const Field k = make_field(p, 4);
  const FieldElement w = k.primitive_element();
  const FieldElement beta = w.pow((p * p + 1) / 2);
  const FieldElement rhs = beta.pow(p + 1);
  const std::uint64_t q = k.enumerable_order();
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    const FieldElement g = k.element_at(idx);
    if (g.pow(p) - g == rhs) return CurveAutomorphism::translation(beta, g);
  }
  throw error("no gamma solves gamma^p - gamma = beta^(p+1)");
}

struct RepresentationModule {
  DifferentialBasis basis;
  Field field;
  std::vector<FieldMatrix> generators;
  std::vector<std::string> labels;

  std::size_t dim() const { return basis.size(); }
};

/// Generators: a primitive m-th root of unity, x -> x + 1, x -> w^2 x,
/// x -> -1/x, and for m = p + 1 also a translation.
inline RepresentationModule build_module(std::uint64_t p, std::uint64_t m) {
  RepresentationModule mod{build_basis(p, m), representation_field(p, m), {}, {}};
  const SuperellipticCurve curve = SuperellipticCurve::quotient_family(p, m);
  std::vector<CurveAutomorphism> autos = standard_generators(curve);
  if (m == p + 1) {
    // zeta must live in the representation field.
    autos.front() = CurveAutomorphism::root_of_unity(mod.field.root_of_unity(m));
    autos.push_back(hermitian_translation(p));
  }
  for (const auto& a : autos) {
    FieldMatrix g = generator_matrix(mod.basis, a, mod.field);
    if (!g.is_invertible()) throw error("generator matrix is singular: " + a.label());
    mod.generators.push_back(std::move(g));
    mod.labels.push_back(a.label());
  }
  return mod;
}

inline IrreducibilityVerdict decide_irreducibility(const RepresentationModule& mod,
                                                   std::uint64_t seed = 0,
                                                   std::size_t budget = 200) {
  MeatAxeOptions opt;
  opt.seed = seed;
  opt.budget = budget;
  return decide_irreducibility(mod.generators, opt);
}

/// Inclusion of the j = 1 block, span{x^i dx/y : 0 <= i <= m' - 2}, checked
/// invariant under the module generators. Proper only for 2 < m < p + 1.
inline FieldMatrix explicit_invariant_subspace(const DifferentialBasis& basis) {
  if (basis.m <= 2 || basis.m >= basis.p + 1) {
    throw not_applicable("the j = 1 block is proper and invariant only for 2 < m < p + 1");
  }
  const RepresentationModule mod = build_module(basis.p, basis.m);
  const std::size_t k = basis.m_prime - 1;
  FieldMatrix w(mod.field, basis.size(), k);
  for (std::size_t c = 0; c < k; ++c) w(basis.index_of(1, c), c) = mod.field.one();
  if (!is_invariant(w, mod.generators)) throw error("j = 1 block is not invariant");
  return w;
}

struct DivisorTerm {
  std::string support;  // "(a,0) for a in F_p", "(0,0)" or "inf"
  std::int64_t multiplicity = 0;
};

struct DivisorTable {
  std::uint64_t p = 0, m = 0, genus = 0;
  std::vector<DivisorTerm> div_x, div_y, div_dx;
  std::int64_t canonical_degree = 0;
  bool genus_at_least_two = false;
};

/// Divisors of x, y and dx on y^m = x^p - x, and deg K = p m - p - m - 1.
inline DivisorTable divisor_table(std::uint64_t p, std::uint64_t m) {
  const DifferentialBasis b = build_basis(p, m);
  const auto P = static_cast<std::int64_t>(p);
  const auto M = static_cast<std::int64_t>(m);
  DivisorTable t;
  t.p = p;
  t.m = m;
  t.genus = (p - 1) * (m - 1) / 2;
  t.div_x = {{"(0,0)", M}, {"inf", -M}};
  t.div_y = {{"(a,0) for a in F_p", 1}, {"inf", -P}};
  t.div_dx = {{"(a,0) for a in F_p", M - 1}, {"inf", -(M + 1)}};
  // Each support "(a,0) for a in F_p" stands for p points.
  auto degree = [&](const std::vector<DivisorTerm>& d) {
    std::int64_t s = 0;
    for (const auto& term : d) s += term.multiplicity * (term.support.rfind("(a,0)", 0) == 0 ? P : 1);
    return s;
  };
  if (degree(t.div_x) != 0 || degree(t.div_y) != 0) throw error("principal divisor of nonzero degree");
  t.canonical_degree = degree(t.div_dx);
  if (t.canonical_degree != 2 * static_cast<std::int64_t>(t.genus) - 2) {
    throw error("canonical degree differs from 2g - 2");
  }
  if (b.size() != t.genus) throw error("basis size differs from the genus");
  t.genus_at_least_two = t.genus >= 2;
  return t;
}

}  // namespace supercurve

#endif  // SUPERCURVE_CANREP_HPP
