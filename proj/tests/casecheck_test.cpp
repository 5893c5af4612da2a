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

#include <cstdlib>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "supercurve/casecheck.hpp"

namespace sc = supercurve;
using sc::Integer;
using sc::Rational;

namespace {

bool is_prime_oracle(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::set<std::uint64_t> primes_of(const sc::SearchSpec& s) {
  const auto v = s.solution_primes();
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Search, TameOutside) {
  const auto s = sc::run_search("tame-outside", 200);
  for (auto p : s.solution_primes()) EXPECT_TRUE(p == 2 || p == 3 || p == 5 || p == 7) << p;
  // Independent loop over the same ranges.
  std::set<std::uint64_t> ref;
  for (std::uint64_t p = 2; p <= 200; ++p) {
    if (!is_prime_oracle(p)) continue;
    for (std::uint64_t n = 2; n <= 4; ++n) {
      for (std::uint64_t c = 0; c <= 2; ++c) {
        for (std::uint64_t d = 1; 2 * d + c <= 4; ++d) {
          if ((n * (n + c) + 2 * d + c + 1) % (n * p + 1) == 0) ref.insert(p);
        }
      }
    }
  }
  EXPECT_EQ(primes_of(s), ref);
}

TEST(Search, TameInsideIsTwoAndFive) {
  const auto s = sc::run_search("tame-inside", 200);
  EXPECT_EQ(primes_of(s), (std::set<std::uint64_t>{2, 5}));
  // Witnesses: n = 4, p = 2 via 9 | 288 and n = 3, p = 5 via 16 | 192, 16 | 128.
  bool w2 = false, w5 = false;
  for (const auto& x : s.solutions) {
    w2 = w2 || (x.p == 2 && x.n == 4 && x.divisor == 9);
    w5 = w5 || (x.p == 5 && x.n == 3 && x.divisor == 16);
  }
  EXPECT_TRUE(w2);
  EXPECT_TRUE(w5);
}

TEST(Search, MersenneHasNoSolutions) {
  const auto s = sc::run_search("mersenne", 200);
  EXPECT_EQ(s.primes_tested, (std::vector<std::uint64_t>{31, 127}));
  EXPECT_TRUE(s.solutions.empty());
  for (std::uint64_t p : {31u, 127u}) {
    for (auto [c, d] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}, {0, 2}}) {
      const std::int64_t lhs = (c + 1) * static_cast<std::int64_t>(p - 1) - 2 * d;
      const std::int64_t rhs = 32 * d * (c + d + 1) * (c + d + 1);
      EXPECT_NE(rhs % lhs, 0);
    }
  }
}

TEST(Search, UnknownSpec) { EXPECT_THROW(sc::run_search("nope"), sc::domain_error); }

TEST(SearchProperty, MonotoneInPMax) {
  for (const auto& id : sc::builtin_searches()) {
    const auto a = sc::run_search(id, 200);
    const auto b = sc::run_search(id, 400);
    std::vector<sc::SearchSolution> restricted;
    for (const auto& x : b.solutions) {
      if (x.p <= 200) restricted.push_back(x);
    }
    EXPECT_EQ(a.solutions, restricted) << id;
  }
}

TEST(SearchProperty, WorkerCountDoesNotChangeResult) {
  const auto base = sc::run_search("tame-inside", 300);
  ::setenv("SUPERCURVE_WORKERS", "1", 1);
  const auto one = sc::run_search("tame-inside", 300);
  ::setenv("SUPERCURVE_WORKERS", "7", 1);
  const auto seven = sc::run_search("tame-inside", 300);
  ::unsetenv("SUPERCURVE_WORKERS");
  EXPECT_EQ(base.solutions, one.solutions);
  EXPECT_EQ(base.solutions, seven.solutions);
}

TEST(DivisibilityBound, Examples) {
  EXPECT_EQ(sc::divisibility_bound("max-rough", 5, 2).integer_value(), 36000);
  EXPECT_EQ(sc::divisibility_bound("max-fine", 5, 2).integer_value(), 12000);
  EXPECT_EQ(sc::divisibility_bound("min-rough", 5, 2).integer_value(), 2 * 125 * 24 * 4);
  const auto cor = sc::divisibility_bound("fine-cor", 5, 2, 1, 0);
  EXPECT_EQ(cor.integer_value(), 0);
  EXPECT_TRUE(cor.degenerate);
  EXPECT_THROW(sc::divisibility_bound("fine-cor", 5, 3, 1, 0), sc::domain_error);
  EXPECT_THROW(sc::divisibility_bound("max-rough", 6, 2), sc::domain_error);
  EXPECT_THROW(sc::divisibility_bound("bogus", 5, 2), sc::domain_error);
}

TEST(AutBound, Examples) {
  EXPECT_EQ(sc::aut_bound_ordinary(4), 2760);
  EXPECT_EQ(sc::aut_bound_ordinary(2), 960);
  const Integer b100 = sc::aut_bound_ordinary(100);
  EXPECT_LE(b100, 390000);
  EXPECT_GT(b100, 389000);
  EXPECT_LT(b100, 84 * 100 * 99);
  EXPECT_THROW(sc::aut_bound_ordinary(1), sc::domain_error);
}

TEST(AutBoundProperty, CertifiedUpperBound) {
  // 6 g^2 + 72 sqrt(21 g^3) <= B  iff  B - 6 g^2 >= 0 and (B - 6 g^2)^2 >= 5184 * 21 g^3.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const Integer g = 2 + static_cast<int>(rng() % 100000);
    const Integer b = sc::aut_bound_ordinary(g);
    const Integer slack = b - 6 * g * g;
    ASSERT_GE(slack, 0);
    EXPECT_GE(slack * slack, 5184 * 21 * g * g * g);
    // and not grossly over: dropping 72 leaves it below the real value
    const Integer lower = slack - 72;
    EXPECT_TRUE(lower < 0 || lower * lower < 5184 * 21 * g * g * g);
    EXPECT_TRUE(sc::dominates_ordinary_bound(b, g));
    EXPECT_FALSE(sc::dominates_ordinary_bound(sc::aut_bound_ordinary_floor(g) - 1, g));
  }
}

TEST(AutBound, CrossoverAgainstLinearBound) {
  const auto g0 = sc::ordinary_bound_crossover(10000);
  ASSERT_GT(g0, 2u);
  for (std::uint64_t g = g0; g <= 10000; ++g) {
    ASSERT_LT(sc::aut_bound_ordinary(g), 84 * Integer(g) * (g - 1)) << g;
  }
  EXPECT_GE(sc::aut_bound_ordinary(g0 - 1), 84 * Integer(g0 - 1) * (g0 - 2));
  EXPECT_EQ(g0, 21u);  // regression pin
}

TEST(CaseClosedForms, Examples) {
  const auto one = sc::case_closed_forms("I", {{"g", 10}, {"a", 1}, {"d", 1}});
  EXPECT_EQ(one.integer_value(), 220);
  EXPECT_TRUE(one.holds());
  const auto small = sc::case_closed_forms("I", {{"g", 2}, {"a", 1}, {"d", 1}});
  EXPECT_EQ(small.integer_value(), 12);
  EXPECT_LE(small.value, 20);

  const auto iv = sc::case_closed_forms("IV-final", {{"p", 3}, {"n", 1}});
  EXPECT_EQ(iv.integer_value(), 72);
  EXPECT_TRUE(iv.holds());

  const auto iib = sc::case_closed_forms("II-b", {{"g", 3}, {"a", 2}, {"q'", 2}, {"b2", 1}});
  EXPECT_EQ(iib.integer_value(), 24);
  EXPECT_TRUE(iib.holds());
  EXPECT_THROW(sc::case_closed_forms("II-b", {{"g", 3}, {"a", 1}, {"q'", 2}, {"b2", 1}}), sc::domain_error);
  EXPECT_THROW(sc::case_closed_forms("I", {{"g", 3}, {"a", 3}, {"d", 1}}), sc::domain_error);
  EXPECT_THROW(sc::case_closed_forms("V", {}), sc::domain_error);
}

TEST(CaseClosedFormsProperty, InequalityChainsHoldOnGrids) {
  for (int g = 2; g <= 60; ++g) {
    for (int a = 1; a < g; ++a) {
      EXPECT_TRUE(sc::case_closed_forms("I", {{"g", g}, {"a", a}, {"d", 1}}).holds()) << g << "," << a;
      EXPECT_TRUE(sc::case_closed_forms("II-a", {{"g", g}, {"a", a}, {"b2", 1}}).holds()) << g << "," << a;
    }
  }
  for (int q : {16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    for (int g = 2; g <= 400; ++g) {
      if ((2 * (g - 1)) % (q - 2) != 0) continue;
      // The first link needs q (q - 1) / (q - 2) <= (15/14) g, which holds for
      // g >= q >= 16 but not for every admissible g.
      const auto r = sc::case_closed_forms("II-c", {{"g", g}, {"q", q}, {"b1", 1}, {"b2", 0}});
      const bool first_link = Rational(q * (q - 1), q - 2) <= Rational(15, 14) * g;
      EXPECT_EQ(r.holds(), first_link) << q << "," << g;
      if (g >= q) EXPECT_TRUE(r.holds()) << q << "," << g;
    }
  }
}

TEST(CaseClosedFormsProperty, FinalFamily) {
  for (int p : {2, 3, 5}) {
    for (int n : {1, 2}) {
      if (p == 2 && n == 1) {
        EXPECT_THROW(sc::case_closed_forms("IV-final", {{"p", p}, {"n", n}}), sc::domain_error);
        continue;
      }
      EXPECT_TRUE(sc::case_closed_forms("IV-final", {{"p", p}, {"n", n}}).holds()) << p << "," << n;
    }
  }
}

TEST(Subcase1, ExamplesAndImplication) {
  const auto f3 = sc::make_field(3);
  for (std::uint64_t E = 14; E <= 40; E += 2) {
    for (int a : {1, 2}) {
      const auto r = sc::subcase1_ordinarity_bound(3, E, f3.from_int(a));
      if (!r.applicable) {
        EXPECT_EQ((E / 2) % 3, 0u);
        continue;
      }
      EXPECT_FALSE(r.is_ordinary) << E << "," << a;
      EXPECT_TRUE(r.implication_holds());
    }
  }
  const auto easy = sc::subcase1_ordinarity_bound(5, 8, sc::make_field(5).one());
  EXPECT_TRUE(easy.applicable);
  EXPECT_TRUE(easy.within_bound);
  EXPECT_TRUE(easy.implication_holds());

  const auto f9 = sc::make_field(3, 2);
  for (std::uint64_t idx = 1; idx < 9; ++idx) {
    const auto r = sc::subcase1_ordinarity_bound(3, 40, f9.element_at(idx));
    ASSERT_TRUE(r.applicable);
    EXPECT_FALSE(r.is_ordinary);
  }
  EXPECT_EQ(sc::subcase1_constant(3), 3024);
}
