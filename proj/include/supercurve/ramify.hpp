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

// Riemann-Hurwitz and Deuring-Shafarevich in exact rationals.
//
//   (2 g_X - 2) / |G| = 2 g_Y - 2 + sum d_Q / e_Q
//   (gamma_X - 1) / |H| = gamma_Z - 1 + sum (1 - 1 / e_Q)

#ifndef SUPERCURVE_RAMIFY_HPP
#define SUPERCURVE_RAMIFY_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercurve/arith.hpp"
#include "supercurve/error.hpp"

namespace supercurve {

struct RamPoint {
  Integer e = 1;  // ramification index
  Integer d = 0;  // different exponent
  bool tame() const { return d == e - 1; }
};

/// Ramification data of a Galois cover X -> X/G.
struct CoverProfile {
  std::optional<Integer> group_order;
  std::optional<Integer> base_genus;   // g_Y
  std::optional<Integer> cover_genus;  // g_X
  std::vector<RamPoint> ram_points;
};

enum class HurwitzUnknown { cover_genus, base_genus, group_order };

/// Exact solution of a formula for one unknown. An infeasible result has no
/// integral non-negative solution; `value` still holds the rational root when
/// there is one.
struct SolveResult {
  bool feasible = false;
  std::optional<Rational> value;
  std::string reason;

  Integer integer() const {
    if (!feasible || !value) throw domain_error("no integral solution: " + reason);
    return boost::multiprecision::numerator(*value);
  }
};

namespace detail {

inline const Integer& need(const std::optional<Integer>& v, const char* what) {
  if (!v) throw domain_error(std::string(what) + " must be supplied");
  return *v;
}

inline void validate_points(const std::vector<RamPoint>& pts, const std::optional<Integer>& order) {
  for (const auto& q : pts) {
    if (q.e < 1) throw domain_error("ramification index must be at least 1");
    if (q.d < q.e - 1) throw domain_error("different exponent must be at least e - 1");
    if (order && *order > 0 && *order % q.e != 0) {
      throw domain_error("ramification index " + q.e.str() + " does not divide |G| = " +
                         order->str());
    }
  }
}

inline SolveResult genus_result(const Rational& v, const char* what) {
  SolveResult r{false, v, ""};
  if (!is_integral(v)) {
    r.reason = std::string(what) + " = " + v.str() + " is not an integer";
  } else if (v < 0) {
    r.reason = std::string(what) + " = " + v.str() + " is negative";
  } else {
    r.feasible = true;
  }
  return r;
}

}  // namespace detail

/// Sum of d_Q / e_Q over the ramified points.
inline Rational different_sum(const std::vector<RamPoint>& pts) {
  Rational s = 0;
  for (const auto& q : pts) s += Rational(q.d, q.e);
  return s;
}

inline SolveResult riemann_hurwitz(const CoverProfile& prof, HurwitzUnknown unknown) {
  detail::validate_points(prof.ram_points, unknown == HurwitzUnknown::group_order
                                               ? std::nullopt
                                               : prof.group_order);
  const Rational ram = different_sum(prof.ram_points);
  switch (unknown) {
    case HurwitzUnknown::cover_genus: {
      const Integer& n = detail::need(prof.group_order, "|G|");
      if (n < 1) throw domain_error("|G| must be positive");
      const Integer& gy = detail::need(prof.base_genus, "g_Y");
      const Rational rhs = Rational(2 * gy - 2) + ram;
      return detail::genus_result((Rational(n) * rhs + 2) / 2, "g_X");
    }
    case HurwitzUnknown::base_genus: {
      const Integer& n = detail::need(prof.group_order, "|G|");
      if (n < 1) throw domain_error("|G| must be positive");
      const Integer& gx = detail::need(prof.cover_genus, "g_X");
      const Rational lhs = Rational(2 * gx - 2, n);
      return detail::genus_result((lhs - ram + 2) / 2, "g_Y");
    }
    case HurwitzUnknown::group_order: {
      const Integer& gx = detail::need(prof.cover_genus, "g_X");
      const Integer& gy = detail::need(prof.base_genus, "g_Y");
      const Rational rhs = Rational(2 * gy - 2) + ram;
      if (rhs == 0) throw division_by_zero("right-hand side vanishes; |G| is undetermined");
      const Rational n = Rational(2 * gx - 2) / rhs;
      SolveResult r{false, n, ""};
      if (!is_integral(n) || n < 1) {
        r.reason = "|G| = " + n.str() + " is not a positive integer";
        return r;
      }
      for (const auto& q : prof.ram_points) {
        if (boost::multiprecision::numerator(n) % q.e != 0) {
          r.reason = "e = " + q.e.str() + " does not divide |G| = " + n.str();
          return r;
        }
      }
      r.feasible = true;
      return r;
    }
  }
  throw domain_error("unknown Riemann-Hurwitz unknown");
}

/// Data for the p-rank formula; only e_Q of each point is used.
struct PRankProfile {
  Integer group_order = 1;  // |H|, a power of p
  std::optional<Integer> p;  // when set, |H| must be a power of this prime
  std::optional<Integer> cover_prank;  // gamma_X
  std::optional<Integer> base_prank;   // gamma_Z
  std::vector<Integer> ram_indices;
};

enum class PRankUnknown { cover_prank, base_prank };

namespace detail {

inline void validate_p_group(const PRankProfile& prof) {
  const Integer& h = prof.group_order;
  if (h < 1) throw domain_error("|H| must be positive");
  if (h == 1) return;
  if (h > Integer(UINT64_MAX)) throw domain_error("|H| too large");
  const auto pk = prime_power(static_cast<std::uint64_t>(h));
  if (!pk || (prof.p && Integer(pk->first) != *prof.p)) {
    throw domain_error("|H| = " + h.str() + " is not a power of p");
  }
  for (const auto& e : prof.ram_indices) {
    if (e < 1 || h % e != 0) throw domain_error("ramification index must divide |H|");
  }
}

inline Rational wild_sum(const std::vector<Integer>& es) {
  Rational s = 0;
  for (const auto& e : es) s += 1 - Rational(1, e);
  return s;
}

}  // namespace detail

inline SolveResult deuring_shafarevich(const PRankProfile& prof, PRankUnknown unknown) {
  detail::validate_p_group(prof);
  const Rational ram = detail::wild_sum(prof.ram_indices);
  const Integer& h = prof.group_order;
  if (unknown == PRankUnknown::cover_prank) {
    const Integer& gz = detail::need(prof.base_prank, "gamma_Z");
    return detail::genus_result(Rational(h) * (Rational(gz - 1) + ram) + 1, "gamma_X");
  }
  const Integer& gx = detail::need(prof.cover_prank, "gamma_X");
  return detail::genus_result(Rational(gx - 1, h) + 1 - ram, "gamma_Z");
}

/// Both sides of the p-rank formula agree for fully specified data.
inline bool deuring_shafarevich_consistent(const PRankProfile& prof) {
  detail::validate_p_group(prof);
  const Integer& gx = detail::need(prof.cover_prank, "gamma_X");
  const Integer& gz = detail::need(prof.base_prank, "gamma_Z");
  return Rational(gx - 1, prof.group_order) ==
         Rational(gz - 1) + detail::wild_sum(prof.ram_indices);
}

struct PRankSolution {
  Integer base_prank;
  std::vector<Integer> ram_indices;  // ascending
};

/// All (gamma_Z, multiset of e > 1 dividing |H|) solving the p-rank formula
/// for the given gamma_X and |H|. Each ramified point contributes at least
/// 1/2, so the search is finite.
inline std::vector<PRankSolution> deuring_shafarevich_search(const Integer& cover_prank,
                                                             const Integer& group_order) {
  PRankProfile base{group_order, std::nullopt, cover_prank, std::nullopt, {}};
  detail::validate_p_group(base);
  std::vector<Integer> choices;
  for (Integer e = 2; e <= group_order; ++e) {
    if (group_order % e == 0) choices.push_back(e);
  }
  const Rational lhs = Rational(cover_prank - 1, group_order);
  std::vector<PRankSolution> out;
  // gamma_Z - 1 + S = lhs with S >= 0 gives gamma_Z <= lhs + 1.
  for (Integer gz = 0; Rational(gz) <= lhs + 1; ++gz) {
    const Rational target = lhs - Rational(gz - 1);
    std::vector<Integer> chosen;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t from, Rational left) {
      if (left == 0) {
        out.push_back({gz, chosen});
        return;
      }
      for (std::size_t i = from; i < choices.size(); ++i) {
        const Rational term = 1 - Rational(1, choices[i]);
        if (term > left) break;  // terms increase with e
        chosen.push_back(choices[i]);
        rec(i, left - term);
        chosen.pop_back();
      }
    };
    if (target >= 0) rec(0, target);
  }
  return out;
}

/// Inputs of the tame-plus-wild case equation
///   (2 g - 2) / |G| = ((e - E) q - 2 e) / (E q e).
struct CaseEquationData {
  Rational E, q, e, genus, group_order;
  std::optional<Integer> p;  // when set, p | E and p | e are flagged
};

struct CaseEquationResult {
  bool holds = false;
  Rational residual;  // left side minus right side
  bool p_divides_E = false;
  bool p_divides_e = false;
};

inline CaseEquationResult case_equation_check(const CaseEquationData& d) {
  if (d.group_order == 0 || d.E == 0 || d.q == 0 || d.e == 0) {
    throw division_by_zero("case equation with a zero denominator");
  }
  CaseEquationResult r;
  const Rational lhs = (2 * d.genus - 2) / d.group_order;
  const Rational rhs = ((d.e - d.E) * d.q - 2 * d.e) / (d.E * d.q * d.e);
  r.residual = lhs - rhs;
  r.holds = r.residual == 0;
  if (d.p) {
    auto divides = [&](const Rational& v) {
      return is_integral(v) && boost::multiprecision::numerator(v) % *d.p == 0;
    };
    r.p_divides_E = divides(d.E);
    r.p_divides_e = divides(d.e);
  }
  return r;
}

/// lambda = (d E eps - 2 E - eps) / (E + eps), where |G| = (2 E q / lambda)(g - 1).
inline Rational case_lambda(const Integer& d, const Integer& E, const Integer& eps) {
  if (E + eps == 0) throw division_by_zero("E + eps = 0");
  return Rational(d * E * eps - 2 * E - eps, E + eps);
}

/// mu = lambda / (d + 1/E), where |G| = (2 E^2 / mu)(g - 1) and q = d E + 1.
inline Rational case_mu(const Integer& d, const Integer& E, const Integer& eps) {
  if (E == 0) throw division_by_zero("E = 0");
  const Rational denom = Rational(d) + Rational(1, E);
  if (denom == 0) throw division_by_zero("d + 1/E = 0");
  return case_lambda(d, E, eps) / denom;
}

}  // namespace supercurve

#endif  // SUPERCURVE_RAMIFY_HPP
