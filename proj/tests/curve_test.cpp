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

#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "supercurve/canrep.hpp"
#include "supercurve/curve.hpp"

namespace sc = supercurve;

namespace {

sc::SuperellipticCurve hyper(std::uint64_t p, const std::vector<std::int64_t>& f) {
  return sc::SuperellipticCurve::make(2, sc::Polynomial::from_ints(sc::make_field(p), f));
}

std::vector<std::uint64_t> divisors_of_p_plus_one(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 2; m <= p + 1; ++m) {
    if ((p + 1) % m == 0) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Curve, KindInference) {
  EXPECT_EQ(hyper(5, {0, -1, 0, 0, 0, 1}).kind(), sc::CurveKind::hyperelliptic);
  const auto f5 = sc::make_field(5);
  EXPECT_EQ(sc::SuperellipticCurve::make(6, sc::artin_schreier_poly(f5)).kind(),
            sc::CurveKind::artin_schreier_quotient);
  EXPECT_EQ(sc::SuperellipticCurve::make(4, sc::artin_schreier_poly(f5)).kind(), sc::CurveKind::general);
  EXPECT_EQ(sc::SuperellipticCurve::make(2, sc::Polynomial::from_ints(f5, {0, 0, 1})).kind(),
            sc::CurveKind::general);
  EXPECT_THROW(sc::SuperellipticCurve::make(3, sc::artin_schreier_poly(sc::make_field(3))),
               sc::invalid_curve);
}

TEST(Curve, Genus) {
  EXPECT_EQ(sc::SuperellipticCurve::quotient_family(5, 6).genus(), 10u);
  EXPECT_EQ(hyper(5, {0, -1, 0, 0, 0, 1}).genus(), 2u);
  EXPECT_EQ(sc::SuperellipticCurve::quotient_family(3, 4).genus(), 3u);
  const auto general = sc::SuperellipticCurve::make(4, sc::artin_schreier_poly(sc::make_field(5)));
  EXPECT_THROW(general.genus(), sc::unsupported_model);
  EXPECT_THROW(sc::count_points(general, 1), sc::unsupported_model);
}

TEST(Curve, BolzaOverF25IsExtremal) {
  const auto c = hyper(5, {0, -1, 0, 0, 0, 1});
  const auto pc = sc::count_points(c, 2);
  EXPECT_TRUE(pc.count == 6 || pc.count == 46);
  EXPECT_NE(pc.status, sc::PointStatus::neither);
  EXPECT_EQ(pc.count, oracle::brute_force_count(c, 2));
}

TEST(Curve, WeilWindowOverF5) {
  const auto c = hyper(5, {0, 1, 0, 1});
  const auto n = sc::count_points(c, 1).count;
  EXPECT_GE(n, 2u);
  EXPECT_LE(n, 10u);
  EXPECT_EQ(n, oracle::brute_force_count(c, 1));
}

TEST(Curve, HermitianSmallestCaseCount) {
  // y^4 = x^3 - x over F_9. The affine points are the p points with x in F_3:
  // for x outside F_3, x^3 - x is a nonzero element whose (p-1)-th power is -1,
  // so it is not a 4th power in F_9.
  const auto c = sc::SuperellipticCurve::quotient_family(3, 4);
  const auto pc = sc::count_points(c, 2);
  EXPECT_EQ(pc.count, oracle::brute_force_count(c, 2));
  EXPECT_EQ(pc.count, 4u);
}

TEST(CurveProperty, CountMatchesPairEnumeration) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (const auto& f : oracle::squarefree_sample(p, 8)) {
      const auto c = sc::SuperellipticCurve::make(2, f);
      for (int e : {1, 2}) EXPECT_EQ(sc::count_points(c, e).count, oracle::brute_force_count(c, e));
    }
    for (auto m : divisors_of_p_plus_one(p)) {
      const auto c = sc::SuperellipticCurve::quotient_family(p, m);
      for (int e : {1, 2, 3}) EXPECT_EQ(sc::count_points(c, e).count, oracle::brute_force_count(c, e));
    }
  }
  // even degree, both parities of the leading coefficient
  for (const auto& f : std::vector<std::vector<std::int64_t>>{{1, 0, 0, 0, 0, 0, 1}, {1, 2, 0, 0, 0, 0, 2}, {3, 1, 0, 0, 0, 0, 3}}) {
    const auto c = hyper(7, f);
    ASSERT_EQ(c.kind(), sc::CurveKind::hyperelliptic);
    for (int e : {1, 2, 3}) EXPECT_EQ(sc::count_points(c, e).count, oracle::brute_force_count(c, e));
  }
}

TEST(CurveProperty, WeilBoundAndStatusConsistency) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    for (const auto& f : oracle::squarefree_sample(p, 10)) {
      const auto c = sc::SuperellipticCurve::make(2, f);
      const auto g = static_cast<std::int64_t>(c.genus());
      const auto q = static_cast<std::int64_t>(p);
      const auto pc = sc::count_points(c, 2);
      const auto n = static_cast<std::int64_t>(pc.count);
      const auto dev = n - q * q - 1;
      EXPECT_LE(dev * dev, 4 * g * g * q * q);
      EXPECT_EQ(pc.status == sc::PointStatus::maximal, n == q * q + 2 * g * q + 1);
      EXPECT_EQ(pc.status == sc::PointStatus::minimal, n == q * q - 2 * g * q + 1);
      if (pc.status == sc::PointStatus::maximal) EXPECT_LE(2 * g, q * (q - 1));
      if (pc.status == sc::PointStatus::minimal) EXPECT_GE(n, 1);
    }
  }
}

TEST(Curve, OversizedFieldRejected) {
  EXPECT_THROW(sc::count_points(hyper(5, {0, -1, 0, 0, 0, 1}), 11), sc::oversized_field);
}

TEST(Automorphism, Examples) {
  const auto bolza = hyper(5, {0, -1, 0, 0, 0, 1});
  const auto f5 = sc::make_field(5);
  const auto origin = sc::CurvePoint::affine(f5.zero(), f5.zero());
  EXPECT_EQ(sc::apply_automorphism(bolza, sc::CurveAutomorphism::root_of_unity(f5.from_int(-1)), origin),
            origin);

  const auto herm = sc::SuperellipticCurve::quotient_family(5, 6);
  EXPECT_EQ(sc::apply_automorphism(herm, sc::CurveAutomorphism::mobius(5, 1, 1, 0, 1), origin),
            sc::CurvePoint::affine(f5.one(), f5.zero()));
  const auto f25 = sc::make_field(5, 2);
  const auto img = sc::apply_automorphism(herm, sc::CurveAutomorphism::mobius(5, 0, 1, -1, 0),
                                          sc::CurvePoint::infinity(f25));
  EXPECT_EQ(img, sc::CurvePoint::affine(f25.zero(), f25.zero()));
}

TEST(Automorphism, IdentityFixesEverything) {
  for (std::uint64_t p : {3u, 5u}) {
    for (auto m : divisors_of_p_plus_one(p)) {
      const auto c = sc::SuperellipticCurve::quotient_family(p, m);
      const auto id = sc::CurveAutomorphism::mobius(p, 1, 0, 0, 1);
      for (const auto& pt : sc::rational_points(c, 2)) EXPECT_EQ(sc::apply_automorphism(c, id, pt), pt);
    }
  }
}

TEST(Automorphism, ValidatesInputs) {
  EXPECT_THROW(sc::CurveAutomorphism::mobius(5, 1, 1, 1, 1), sc::domain_error);
  const auto f9 = sc::make_field(3, 2);
  EXPECT_THROW(sc::CurveAutomorphism::mobius(f9.generator(), f9.zero(), f9.zero(), f9.generator().inverse()),
               sc::domain_error);
}

TEST(Automorphism, GeneratorsPermuteRationalPoints) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (auto m : divisors_of_p_plus_one(p)) {
      const auto c = sc::SuperellipticCurve::quotient_family(p, m);
      for (const auto& s : sc::standard_generators(c)) {
        EXPECT_TRUE(sc::permutes_rational_points(c, s, 2)) << "p=" << p << " m=" << m << " " << s.label();
      }
    }
  }
}

TEST(Automorphism, ActionIsAGroupActionOnPoints) {
  // Composition on points agrees with after().
  const auto c = sc::SuperellipticCurve::quotient_family(5, 3);
  const auto gens = sc::standard_generators(c);
  const auto pts = sc::rational_points(c, 2);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    for (std::size_t j = 1; j < gens.size(); ++j) {
      const auto comp = gens[i].after(gens[j]);
      for (const auto& pt : pts) {
        EXPECT_EQ(sc::apply_automorphism(c, comp, pt),
                  sc::apply_automorphism(c, gens[i], sc::apply_automorphism(c, gens[j], pt)));
      }
    }
  }
}

TEST(Orbits, TranslationSubgroupOnSmallHermitian) {
  const auto c = sc::SuperellipticCurve::quotient_family(3, 4);
  const auto part = sc::orbit_partition(c, {sc::CurveAutomorphism::mobius(3, 1, 1, 0, 1)}, 2);
  auto sizes = part.sizes();
  std::sort(sizes.begin(), sizes.end());
  ASSERT_FALSE(sizes.empty());
  EXPECT_EQ(sizes.front(), 1u);
  EXPECT_EQ(std::count(sizes.begin(), sizes.end(), 1u), 1);
  for (std::size_t i = 1; i < sizes.size(); ++i) EXPECT_EQ(sizes[i], 3u);
  // The fixed point is the point at infinity.
  for (const auto& o : part.orbits) {
    if (o.size() == 1) EXPECT_TRUE(part.points[o[0]].at_infinity);
  }
}

TEST(Orbits, HermitianTranslationActsFreelyOffOnePoint) {
  for (std::uint64_t p : {3u, 5u}) {
    const auto c = sc::SuperellipticCurve::quotient_family(p, p + 1);
    const auto tau = sc::hermitian_translation(p);
    const auto part = sc::orbit_partition(c, {tau}, 4);
    std::size_t fixed = 0;
    for (auto s : part.sizes()) {
      if (s == 1) {
        ++fixed;
      } else {
        EXPECT_EQ(s, p);
      }
    }
    EXPECT_EQ(fixed, 1u);
  }
}

TEST(Orbits, FullGroupOnDegreeThreeQuotient) {
  // y^3 = x^5 - x over F_25 under zeta_3 and SL(2, F_5). Enumeration gives a
  // short orbit of size p + 1 = 6 (the points with y = 0 and infinity) and one
  // orbit holding every other rational point.
  const auto c = sc::SuperellipticCurve::quotient_family(5, 3);
  const auto part = sc::orbit_partition(c, sc::standard_generators(c), 2);
  auto sizes = part.sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 60}));
}

TEST(Orbits, EmptyGeneratorListGivesSingletons) {
  const auto c = sc::SuperellipticCurve::quotient_family(5, 2);
  const auto part = sc::orbit_partition(c, {}, 2);
  EXPECT_EQ(part.orbits.size(), part.points.size());
}

TEST(Orbits, DeterministicOrder) {
  const auto c = sc::SuperellipticCurve::quotient_family(7, 4);
  const auto a = sc::orbit_partition(c, sc::standard_generators(c), 2);
  const auto b = sc::orbit_partition(c, sc::standard_generators(c), 2);
  EXPECT_EQ(a.orbits, b.orbits);
  EXPECT_TRUE(std::is_sorted(a.points.begin(), a.points.end()));
}
