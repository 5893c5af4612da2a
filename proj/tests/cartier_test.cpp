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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "supercurve/cartier.hpp"

namespace sc = supercurve;

namespace {

sc::SuperellipticCurve bolza(std::uint64_t p) {
  return sc::SuperellipticCurve::make(2, sc::Polynomial::from_ints(sc::make_field(p), {0, -1, 0, 0, 0, 1}));
}

}  // namespace

TEST(HasseWitt, BolzaCharThree) {
  const auto hw = sc::hasse_witt(bolza(3));
  EXPECT_EQ(hw.entries, sc::FieldMatrix::from_ints(sc::make_field(3), {{0, 2}, {1, 0}}));
  EXPECT_EQ(hw.basis_labels, (std::vector<std::string>{"y/x", "y/x^2"}));
  const auto cls = sc::classify_p_rank(hw);
  EXPECT_EQ(cls.stable_rank, 2u);
  EXPECT_EQ(cls.verdict, sc::PRankVerdict::ordinary);
}

TEST(HasseWitt, BolzaCharFiveIsZero) {
  const auto hw = sc::hasse_witt(bolza(5));
  EXPECT_TRUE(hw.entries.is_zero());
  EXPECT_EQ(sc::classify_p_rank(hw).verdict, sc::PRankVerdict::superspecial);
}

TEST(HasseWitt, SubcaseModelSupport) {
  // y^2 = x(x^4 - 1), p = 3: entry (i, j) is nonzero iff 4 | 3i - j - 1.
  const auto f3 = sc::make_field(3);
  const auto hw = sc::hasse_witt(sc::Polynomial::from_ints(f3, {0, -1, 0, 0, 0, 1}));
  for (std::size_t i = 1; i <= hw.genus; ++i) {
    for (std::size_t j = 1; j <= hw.genus; ++j) {
      const auto k = static_cast<long>(3 * i) - static_cast<long>(j) - 1;
      EXPECT_EQ(!hw.entries(i - 1, j - 1).is_zero(), k >= 0 && k % 4 == 0) << i << "," << j;
    }
  }
}

TEST(HasseWitt, RejectsUnsupportedInputs) {
  EXPECT_THROW(sc::hasse_witt(sc::SuperellipticCurve::quotient_family(5, 3)), sc::unsupported_model);
  EXPECT_THROW(sc::hasse_witt(sc::Polynomial::from_ints(sc::make_field(2), {0, 1, 0, 1, 1, 1})),
               sc::unsupported_model);
  EXPECT_THROW(sc::hasse_witt(sc::Polynomial::from_ints(sc::make_field(5), {0, 0, 1, 0, 0, 1})),
               sc::unsupported_model);
}

TEST(PRank, Classifier) {
  const auto f3 = sc::make_field(3);
  EXPECT_EQ(sc::classify_p_rank(sc::FieldMatrix(f3, 2, 2)).verdict, sc::PRankVerdict::superspecial);
  const auto half = sc::classify_p_rank(sc::FieldMatrix::from_ints(f3, {{1, 0}, {0, 0}}));
  EXPECT_EQ(half.stable_rank, 1u);
  EXPECT_EQ(half.verdict, sc::PRankVerdict::intermediate);
  // Nilpotent but nonzero: rank 1, stable rank 0, not superspecial.
  const auto nil = sc::classify_p_rank(sc::FieldMatrix::from_ints(f3, {{0, 1}, {0, 0}}));
  EXPECT_EQ(nil.stable_rank, 0u);
  EXPECT_EQ(nil.verdict, sc::PRankVerdict::intermediate);
}

TEST(PRank, ZeroAndInvertibleExtremes) {
  const auto k = sc::make_field(5, 2);
  for (std::size_t g = 1; g <= 10; ++g) {
    EXPECT_EQ(sc::classify_p_rank(sc::FieldMatrix(k, g, g)).verdict, sc::PRankVerdict::superspecial);
    sc::FieldMatrix a(k, g, g);
    for (std::size_t i = 0; i < g; ++i) {
      a(i, i) = k.generator();
      if (i + 1 < g) a(i, i + 1) = k.one();
    }
    EXPECT_EQ(sc::classify_p_rank(a).verdict, sc::PRankVerdict::ordinary);
  }
}

TEST(PRank, SemilinearOrderMatters) {
  // Over F_9 with A = [[0, 1], [t, 0]] neither ordering is the identity, but
  // the stable rank must be invariant under a change of basis B^(p)^-1 A B.
  const auto k = sc::make_field(3, 2);
  const auto t = k.generator();
  sc::FieldMatrix a(k, 3, 3);
  a(0, 1) = k.one();
  a(1, 2) = t;
  a(2, 0) = t + k.one();
  sc::FieldMatrix b(k, 3, 3);
  b(0, 0) = k.one();
  b(0, 1) = t;
  b(1, 1) = k.one();
  b(2, 2) = t;
  b(2, 0) = k.one();
  ASSERT_TRUE(b.is_invertible());
  // Row convention: c -> c^(p) A. Under c = c' B, A' = B^(p) A B^-1.
  const auto a2 = b.frobenius() * a * b.inverse();
  EXPECT_EQ(sc::stable_rank(a), sc::stable_rank(a2));
}

TEST(HasseWittProperty, MatchesCechOracle) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (const auto& f : oracle::squarefree_sample(p, 50)) {
      const auto hw = sc::hasse_witt(f);
      const auto ref = oracle::cech_hasse_witt(oracle::to_ints(f), static_cast<std::int64_t>(p));
      ASSERT_EQ(hw.genus, ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        for (std::size_t j = 0; j < ref.size(); ++j) {
          EXPECT_EQ(hw.entries(i, j).value(), static_cast<std::uint64_t>(ref[i][j]));
        }
      }
    }
  }
}

TEST(HasseWittProperty, EkedahlBoundOnSample) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (const auto& f : oracle::squarefree_sample(p, 50)) {
      const auto c = sc::SuperellipticCurve::make(2, f);
      if (sc::classify_p_rank(sc::hasse_witt(c)).verdict == sc::PRankVerdict::superspecial) {
        EXPECT_LE(2 * c.genus(), p - 1);
      }
    }
  }
}

TEST(Crosscheck, Examples) {
  const auto b5 = sc::crosscheck_superspecial(bolza(5));
  EXPECT_EQ(b5.p_rank.verdict, sc::PRankVerdict::superspecial);
  EXPECT_NE(b5.count.status, sc::PointStatus::neither);
  EXPECT_TRUE(b5.consistent());

  const auto b3 = sc::crosscheck_superspecial(bolza(3));
  EXPECT_EQ(b3.p_rank.verdict, sc::PRankVerdict::ordinary);
  EXPECT_EQ(b3.count.status, sc::PointStatus::neither);
  EXPECT_TRUE(b3.consistent());

  const auto roq = sc::crosscheck_superspecial(
      sc::SuperellipticCurve::make(2, sc::artin_schreier_poly(sc::make_field(7))));
  EXPECT_EQ(roq.p_rank.verdict, sc::PRankVerdict::superspecial);
  EXPECT_NE(roq.count.status, sc::PointStatus::neither);
}

TEST(Crosscheck, OrdinaryCurvesAreNeverExtremal) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (const auto& f : oracle::squarefree_sample(p, 50)) {
      const auto r = sc::crosscheck_superspecial(sc::SuperellipticCurve::make(2, f));
      EXPECT_TRUE(r.ordinary_not_extremal);
    }
  }
}
