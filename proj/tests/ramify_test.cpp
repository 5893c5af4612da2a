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

#include <random>

#include <gtest/gtest.h>

#include "supercurve/ramify.hpp"

namespace sc = supercurve;
using sc::Integer;
using sc::Rational;

TEST(RiemannHurwitz, BolzaDoubleCover) {
  sc::CoverProfile prof;
  prof.base_genus = 0;
  prof.group_order = 2;
  prof.ram_points.assign(6, {2, 1});
  const auto r = sc::riemann_hurwitz(prof, sc::HurwitzUnknown::cover_genus);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.integer(), 2);
}

TEST(RiemannHurwitz, IdentityCover) {
  sc::CoverProfile prof;
  prof.base_genus = 3;
  prof.group_order = 1;
  EXPECT_EQ(sc::riemann_hurwitz(prof, sc::HurwitzUnknown::cover_genus).integer(), 3);
}

TEST(RiemannHurwitz, FinalFamilyGenus) {
  // Wild point (Eq, Eq + q - 2) and tame point (e, e - 1) over a rational base.
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    const Integer pn = sc::ipow(p, n);
    const Integer E = pn - 1, e = pn + 1, q = pn * pn;
    sc::CoverProfile prof;
    prof.base_genus = 0;
    prof.group_order = E * q * e;
    prof.ram_points = {{E * q, E * q + q - 2}, {e, e - 1}};
    const auto r = sc::riemann_hurwitz(prof, sc::HurwitzUnknown::cover_genus);
    ASSERT_TRUE(r.feasible) << r.reason;
    EXPECT_EQ(r.integer(), q - pn) << p << "," << n;
  }
}

TEST(RiemannHurwitz, InfeasibleAndErrors) {
  sc::CoverProfile prof;
  prof.base_genus = 0;
  prof.group_order = 2;
  prof.ram_points.assign(3, {2, 1});
  const auto r = sc::riemann_hurwitz(prof, sc::HurwitzUnknown::cover_genus);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(*r.value, Rational(1, 2));
  EXPECT_THROW(r.integer(), sc::domain_error);

  sc::CoverProfile neg;
  neg.base_genus = 0;
  neg.group_order = 2;
  EXPECT_FALSE(sc::riemann_hurwitz(neg, sc::HurwitzUnknown::cover_genus).feasible);

  sc::CoverProfile zero;
  zero.cover_genus = 1;
  zero.base_genus = 1;
  EXPECT_THROW(sc::riemann_hurwitz(zero, sc::HurwitzUnknown::group_order), sc::division_by_zero);

  sc::CoverProfile bad;
  bad.base_genus = 0;
  bad.group_order = 4;
  bad.ram_points = {{2, 0}};
  EXPECT_THROW(sc::riemann_hurwitz(bad, sc::HurwitzUnknown::cover_genus), sc::domain_error);
  bad.ram_points = {{3, 2}};
  EXPECT_THROW(sc::riemann_hurwitz(bad, sc::HurwitzUnknown::cover_genus), sc::domain_error);
}

TEST(RiemannHurwitz, SolveForOrder) {
  sc::CoverProfile prof;
  prof.cover_genus = 2;
  prof.base_genus = 0;
  prof.ram_points.assign(6, {2, 1});
  const auto r = sc::riemann_hurwitz(prof, sc::HurwitzUnknown::group_order);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.integer(), 2);
}

TEST(RiemannHurwitzProperty, RoundTrip) {
  std::mt19937_64 rng(9);
  int checked = 0;
  while (checked < 500) {
    const Integer n = 1 + static_cast<int>(rng() % 24);
    sc::CoverProfile prof;
    prof.group_order = n;
    prof.base_genus = static_cast<int>(rng() % 4);
    const int k = static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      std::vector<Integer> divs;
      for (Integer d = 2; d <= n; ++d) {
        if (n % d == 0) divs.push_back(d);
      }
      if (divs.empty()) break;
      const Integer e = divs[rng() % divs.size()];
      const Integer extra = (rng() % 3 == 0) ? Integer(static_cast<int>(rng() % 3)) : Integer(0);
      prof.ram_points.push_back({e, e - 1 + extra});
    }
    const auto gx = sc::riemann_hurwitz(prof, sc::HurwitzUnknown::cover_genus);
    if (!gx.feasible) continue;
    sc::CoverProfile back = prof;
    back.base_genus.reset();
    back.cover_genus = gx.integer();
    const auto gy = sc::riemann_hurwitz(back, sc::HurwitzUnknown::base_genus);
    ASSERT_TRUE(gy.feasible);
    EXPECT_EQ(gy.integer(), *prof.base_genus);
    ++checked;
  }
}

TEST(RiemannHurwitzProperty, TameContributionAndOrderIndependence) {
  std::vector<sc::RamPoint> pts{{2, 1}, {3, 2}, {4, 5}};
  EXPECT_EQ(sc::different_sum({{5, 4}}), Rational(4, 5));
  auto shuffled = pts;
  std::reverse(shuffled.begin(), shuffled.end());
  EXPECT_EQ(sc::different_sum(pts), sc::different_sum(shuffled));
  EXPECT_TRUE(pts[0].tame());
  EXPECT_FALSE(pts[2].tame());
}

TEST(DeuringShafarevich, Examples) {
  for (int p : {2, 3, 5, 7}) {
    sc::PRankProfile prof{p, Integer(p), 0, std::nullopt, {Integer(p)}};
    EXPECT_EQ(sc::deuring_shafarevich(prof, sc::PRankUnknown::base_prank).integer(), 0);
    sc::PRankProfile etale{p, Integer(p), 1, 1, {}};
    EXPECT_TRUE(sc::deuring_shafarevich_consistent(etale));
  }
  sc::PRankProfile bad{6, std::nullopt, 0, std::nullopt, {}};
  EXPECT_THROW(sc::deuring_shafarevich(bad, sc::PRankUnknown::base_prank), sc::domain_error);
  sc::PRankProfile wrong_p{9, Integer(2), 0, std::nullopt, {}};
  EXPECT_THROW(sc::deuring_shafarevich(wrong_p, sc::PRankUnknown::base_prank), sc::domain_error);
}

TEST(DeuringShafarevich, ZeroPRankForcesOneTotallyRamifiedPoint) {
  for (int pk : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const auto sols = sc::deuring_shafarevich_search(0, pk);
    ASSERT_EQ(sols.size(), 1u) << pk;
    EXPECT_EQ(sols[0].base_prank, 0);
    EXPECT_EQ(sols[0].ram_indices, std::vector<Integer>{pk});
  }
}

TEST(CaseEquation, FinalFamilyResidualZero) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {5, 2}}) {
    const Integer pn = sc::ipow(p, n);
    const Integer E = pn - 1, e = pn + 1, q = pn * pn;
    const auto r = sc::case_equation_check({E, q, e, q - pn, q * q - q, Integer(p)});
    EXPECT_TRUE(r.holds) << p << "," << n;
    EXPECT_EQ(r.residual, 0);
    EXPECT_FALSE(r.p_divides_E);
    EXPECT_FALSE(r.p_divides_e);
  }
  const auto off = sc::case_equation_check({2, 9, 4, 6, 71, std::nullopt});
  EXPECT_FALSE(off.holds);
  EXPECT_NE(off.residual, 0);
  EXPECT_THROW(sc::case_equation_check({0, 9, 4, 6, 72, std::nullopt}), sc::division_by_zero);
}

TEST(CaseEquation, LambdaMu) {
  EXPECT_EQ(sc::case_lambda(1, 4, 4), Rational(1, 2));
  EXPECT_EQ(sc::case_mu(1, 4, 4), Rational(1, 2) / Rational(5, 4));
}

TEST(CaseEquation, LambdaMuGridBounds) {
  std::size_t checked = 0;
  for (int E = 444; E <= 520; ++E) {
    for (int d = 1; d <= 40; ++d) {
      for (int eps = 1; eps <= 40; ++eps) {
        const Rational lam = sc::case_lambda(d, E, eps);
        if (lam <= 0) continue;
        EXPECT_GE(lam, 1 - Rational(6, E));
        EXPECT_GE(sc::case_mu(d, E, eps), Rational(1, 3) - Rational(4, E));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}
