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

// Command-line front end. run_cli is kept separate from main so the tests can
// drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage error, 2 infeasible or inconsistent result.

#ifndef SUPERCURVE_TOOLS_CLI_HPP
#define SUPERCURVE_TOOLS_CLI_HPP

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "supercurve/supercurve.hpp"

namespace supercurve::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kUsage = 1, kInfeasible = 2 };

namespace detail {

inline std::string str(const Integer& v) { return v.str(); }

inline std::string str(const Rational& v) {
  if (is_integral(v)) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

inline Json matrix_json(const FieldMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void print_matrix(std::ostream& out, const FieldMatrix& m, const std::string& indent) {
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, m(i, j).to_string().size());
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << std::setw(static_cast<int>(w)) << m(i, j).to_string();
    }
    out << "]\n";
  }
}

inline Json envelope(const std::string& command, Json inputs, Json results,
                     std::vector<std::string> provenance) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["provenance"] = std::move(provenance);
  return j;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// "e:d,e:d,..." into ramification points.
inline std::vector<RamPoint> parse_ram(const std::string& text) {
  std::vector<RamPoint> pts;
  if (text.find_first_not_of(" \t") == std::string::npos) return pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw domain_error("malformed --ram entry '" + item + "', expected e:d");
    auto to_int = [&](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw domain_error("malformed --ram entry '" + item + "', expected e:d");
      }
      return Integer(s);
    };
    pts.push_back({to_int(item.substr(0, colon)), to_int(item.substr(colon + 1))});
  }
  return pts;
}

struct ClassifyArgs {
  std::string curve;
  std::vector<int> e{2};
  bool json = false;
};

inline int run_classify(const ClassifyArgs& a, std::ostream& out) {
  const SuperellipticCurve c = parse_curve(a.curve);
  if (c.kind() == CurveKind::general) {
    throw unsupported_model("'" + c.to_string() +
                            "' is neither hyperelliptic nor y^m = x^p - x with m | p + 1");
  }
  Json inputs;
  inputs["curve"] = a.curve;
  inputs["p"] = c.p();
  inputs["m"] = c.m();
  inputs["f"] = c.f().to_string();
  inputs["e"] = a.e;

  std::vector<std::string> provenance{"genus:closed-form", "point-count:mth-power-character",
                                      "weil-bound:exact-square"};
  Json results;
  results["kind"] = to_string(c.kind());
  results["genus"] = c.genus();
  Json counts = Json::array();
  std::vector<PointCount> pcs;
  for (int e : a.e) {
    pcs.push_back(count_points(c, e));
    Json pc;
    pc["e"] = e;
    pc["field_order"] = pcs.back().field_order;
    pc["count"] = pcs.back().count;
    pc["status"] = e % 2 == 0 ? to_string(pcs.back().status) : "not-applicable";
    counts.push_back(std::move(pc));
  }
  results["point_counts"] = std::move(counts);

  std::optional<HasseWittMatrix> hw;
  std::optional<PRankClass> pr;
  std::optional<SuperspecialCrosscheck> cross;
  if (c.kind() == CurveKind::hyperelliptic) {
    hw = hasse_witt(c);
    pr = classify_p_rank(*hw);
    provenance.push_back("hasse-witt:coefficient-extraction");
    provenance.push_back("p-rank:semilinear-stable-rank");
    if (c.p() * c.p() <= kMaxEnumerableOrder) {
      cross = crosscheck_superspecial(c);
      provenance.push_back("superspecial-crosscheck:extremal-point-count");
    }
  }
  if (hw) {
    Json h;
    h["basis"] = hw->basis_labels;
    h["matrix"] = matrix_json(hw->entries);
    results["hasse_witt"] = std::move(h);
    Json r;
    r["stable_rank"] = pr->stable_rank;
    r["verdict"] = to_string(pr->verdict);
    results["p_rank"] = std::move(r);
  } else {
    results["hasse_witt"] = nullptr;
    results["p_rank"] = nullptr;
  }
  if (cross) {
    Json x;
    x["count_e2"] = cross->count.count;
    x["status_e2"] = to_string(cross->count.status);
    x["consistent"] = cross->consistent();
    results["crosscheck"] = std::move(x);
  } else {
    results["crosscheck"] = nullptr;
  }

  const int code = cross && !cross->consistent() ? kInfeasible : kOk;
  if (a.json) {
    emit(out, envelope("classify", std::move(inputs), std::move(results), provenance));
    return code;
  }
  out << "curve:  " << c.to_string() << "\n";
  out << "kind:   " << to_string(c.kind()) << "\n";
  out << "genus:  " << c.genus() << "\n";
  out << "points:\n";
  for (const auto& pc : pcs) {
    out << "  e=" << pc.e << "  |F|=" << pc.field_order << "  N=" << pc.count;
    if (pc.e % 2 == 0) out << "  " << to_string(pc.status);
    out << "\n";
  }
  if (hw) {
    out << "hasse-witt (rows: ";
    for (std::size_t i = 0; i < hw->basis_labels.size(); ++i) out << (i ? ", " : "") << hw->basis_labels[i];
    out << "):\n";
    print_matrix(out, hw->entries, "  ");
    out << "p-rank: " << pr->stable_rank << " (" << to_string(pr->verdict) << ")\n";
  }
  if (cross) {
    out << "crosscheck over F_" << cross->count.field_order << ": " << to_string(cross->count.status)
        << ", " << (cross->consistent() ? "consistent" : "INCONSISTENT") << "\n";
  }
  return code;
}

struct RepArgs {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 200;
  bool json = false;
  bool matrices = false;
};

inline int run_rep(const RepArgs& a, std::ostream& out) {
  const RepresentationModule mod = build_module(a.p, a.m);
  const IrreducibilityVerdict v = decide_irreducibility(mod, a.seed, a.budget);
  const DivisorTable dt = divisor_table(a.p, a.m);
  std::optional<FieldMatrix> block;
  if (a.m > 2 && a.m < a.p + 1) block = explicit_invariant_subspace(mod.basis);

  Json inputs;
  inputs["p"] = a.p;
  inputs["m"] = a.m;
  inputs["seed"] = a.seed;
  inputs["budget"] = a.budget;

  Json results;
  results["dim"] = mod.dim();
  results["field"] = mod.field.name();
  results["m_prime"] = mod.basis.m_prime;
  Json basis = Json::array();
  for (const auto& b : mod.basis.entries) basis.push_back(b.label());
  results["basis"] = std::move(basis);
  Json gens = Json::array();
  for (std::size_t k = 0; k < mod.generators.size(); ++k) {
    Json g;
    g["label"] = mod.labels[k];
    g["matrix"] = matrix_json(mod.generators[k]);
    gens.push_back(std::move(g));
  }
  results["generators"] = std::move(gens);
  results["verdict"] = to_string(v.verdict);
  results["endo_dim"] = v.endo_dim ? Json(*v.endo_dim) : Json(nullptr);
  results["samples_used"] = v.samples_used;
  if (v.witness) {
    Json w;
    w["dim"] = v.witness->cols();
    w["columns"] = matrix_json(v.witness->transpose());
    results["witness"] = std::move(w);
  } else {
    results["witness"] = nullptr;
  }
  if (block) {
    Json w;
    w["dim"] = block->cols();
    w["columns"] = matrix_json(block->transpose());
    results["explicit_invariant_subspace"] = std::move(w);
  } else {
    results["explicit_invariant_subspace"] = nullptr;
  }
  Json div;
  auto terms = [](const std::vector<DivisorTerm>& d) {
    Json arr = Json::array();
    for (const auto& t : d) {
      Json x;
      x["support"] = t.support;
      x["multiplicity"] = t.multiplicity;
      arr.push_back(std::move(x));
    }
    return arr;
  };
  div["x"] = terms(dt.div_x);
  div["y"] = terms(dt.div_y);
  div["dx"] = terms(dt.div_dx);
  div["canonical_degree"] = dt.canonical_degree;
  div["genus"] = dt.genus;
  div["genus_at_least_two"] = dt.genus_at_least_two;
  results["divisors"] = std::move(div);

  const std::vector<std::string> provenance{
      "basis:differential-monomials", "action:pullback-substitution",
      "irreducibility:meataxe-norton", "commutant:cyclic-vector", "divisors:closed-form"};
  if (a.json) {
    emit(out, envelope("rep", std::move(inputs), std::move(results), provenance));
    return kOk;
  }
  out << "curve:   y^" << a.m << " = x^" << a.p << " - x over " << mod.field.name() << "\n";
  out << "dim:     " << mod.dim() << "   (m' = " << mod.basis.m_prime << ")\n";
  out << "basis:  ";
  for (const auto& b : mod.basis.entries) out << " " << b.label();
  out << "\n";
  out << "generators:\n";
  for (std::size_t k = 0; k < mod.generators.size(); ++k) {
    out << "  " << mod.labels[k] << "\n";
    if (a.matrices) print_matrix(out, mod.generators[k], "    ");
  }
  out << "verdict: " << to_string(v.verdict);
  if (v.endo_dim) out << "  (commutant dim " << *v.endo_dim << ")";
  out << "  after " << v.samples_used << " sample(s)\n";
  if (v.witness) {
    out << "witness: dim " << v.witness->cols() << "\n";
    print_matrix(out, v.witness->transpose(), "  ");
  }
  if (block) out << "j=1 block: dim " << block->cols() << ", invariant\n";
  out << "deg K:   " << dt.canonical_degree << " = 2g - 2 with g = " << dt.genus
      << (dt.genus_at_least_two ? "" : "  (g < 2)") << "\n";
  return kOk;
}

struct SearchArgs {
  std::string spec;
  std::uint64_t p_max = 200;
  bool json = false;
};

inline int run_search_cmd(const SearchArgs& a, std::ostream& out) {
  const SearchSpec s = run_search(a.spec, a.p_max);
  Json inputs;
  inputs["spec"] = a.spec;
  inputs["p_max"] = a.p_max;
  Json results;
  Json ranges;
  for (const auto& [k, v] : s.ranges) ranges[k] = v;
  results["ranges"] = std::move(ranges);
  results["predicate"] = s.predicate;
  results["primes_tested"] = s.primes_tested.size();
  Json sols = Json::array();
  for (const auto& x : s.solutions) {
    Json j;
    j["p"] = x.p;
    j["n"] = x.n == 0 ? Json(nullptr) : Json(x.n);
    j["c"] = x.c;
    j["d"] = x.genus_d;
    j["divisor"] = str(x.divisor);
    j["dividend"] = str(x.dividend);
    sols.push_back(std::move(j));
  }
  results["solutions"] = std::move(sols);
  results["solution_primes"] = s.solution_primes();
  if (a.json) {
    emit(out, envelope("search", std::move(inputs), std::move(results),
                       {"search:exhaustive-divisibility"}));
    return kOk;
  }
  out << "search:    " << s.name << "\n";
  out << "predicate: " << s.predicate << "\n";
  for (const auto& [k, v] : s.ranges) out << "  " << k << ": " << v << "\n";
  out << "solutions: " << s.solutions.size() << "\n";
  for (const auto& x : s.solutions) {
    out << "  p=" << x.p;
    if (x.n) out << " n=" << x.n;
    out << " c=" << x.c << " d=" << x.genus_d << "  " << x.divisor << " | " << x.dividend << "\n";
  }
  out << "primes:   ";
  for (auto p : s.solution_primes()) out << " " << p;
  out << "\n";
  return kOk;
}

struct BoundsArgs {
  std::string kind;
  std::map<std::string, std::int64_t> params;
  bool json = false;
};

inline int run_bounds(const BoundsArgs& a, std::ostream& out) {
  auto get = [&](const char* name) -> Integer {
    auto it = a.params.find(name);
    if (it == a.params.end()) throw domain_error("--kind " + a.kind + " needs --" + name);
    return it->second;
  };
  Json inputs;
  inputs["kind"] = a.kind;
  for (const auto& [k, v] : a.params) inputs[k] = v;
  Json results;
  bool ok = true;
  std::vector<std::string> provenance;

  if (a.kind == "aut-ordinary") {
    const Integer g = get("g");
    const Integer bound = aut_bound_ordinary(g);
    const Integer nakajima = 84 * g * (g - 1);
    results["bound"] = str(bound);
    results["lower_bracket"] = str(aut_bound_ordinary_floor(g));
    results["tight_bound"] = str(aut_bound_ordinary_tight(g));
    results["certified"] = dominates_ordinary_bound(bound, g);
    results["nakajima_84g(g-1)"] = str(nakajima);
    results["below_nakajima"] = bound < nakajima;
    ok = dominates_ordinary_bound(bound, g);
    provenance.push_back("aut-bound:isqrt-bracketing");
  } else if (a.kind == "crossover") {
    const Integer gmax = get("g-max");
    const auto g0 = ordinary_bound_crossover(static_cast<std::uint64_t>(gmax));
    results["g_max"] = str(gmax);
    results["crossover"] = g0;
    provenance.push_back("aut-bound:isqrt-bracketing");
  } else if (a.kind.rfind("case-", 0) == 0) {
    std::map<std::string, Integer> ps;
    for (const auto& [k, v] : a.params) ps[k == "qprime" ? "q'" : k] = v;
    const BoundReport r = case_closed_forms(a.kind.substr(5), ps);
    results["formula_id"] = r.formula_id;
    Json in;
    for (const auto& [k, v] : r.inputs) in[k] = str(v);
    results["derived_inputs"] = std::move(in);
    results["value"] = str(r.value);
    Json checks = Json::array();
    for (const auto& [name, holds] : r.checks) checks.push_back(Json{{"name", name}, {"holds", holds}});
    results["checks"] = std::move(checks);
    ok = r.holds();
    provenance.push_back("case-closed-form:exact-rational");
  } else {
    const auto c = a.params.count("c") ? get("c") : Integer(0);
    const auto d = a.params.count("d") ? get("d") : Integer(0);
    const BoundReport r = divisibility_bound(a.kind, get("q"), get("g"), c, d);
    results["formula_id"] = r.formula_id;
    results["value"] = str(r.value);
    Json checks = Json::array();
    for (const auto& [name, holds] : r.checks) checks.push_back(Json{{"name", name}, {"holds", holds}});
    results["checks"] = std::move(checks);
    results["degenerate"] = r.degenerate;
    provenance.push_back("divisibility-bound:orbit-structure");
  }

  if (a.json) {
    emit(out, envelope("bounds", std::move(inputs), results, provenance));
    return ok ? kOk : kInfeasible;
  }
  out << "bounds: " << a.kind << "\n";
  for (const auto& [k, v] : results.items()) {
    if (v.is_array()) {
      for (const auto& c : v) {
        out << "  " << c["name"].get<std::string>() << ": " << (c["holds"].get<bool>() ? "yes" : "NO")
            << "\n";
      }
    } else if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) out << "  " << k2 << " = " << v2.get<std::string>() << "\n";
    } else {
      out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return ok ? kOk : kInfeasible;
}

struct HurwitzArgs {
  std::optional<std::int64_t> gx, gy, order;
  std::string ram;
  std::string solve = "gx";
  bool json = false;
};

inline int run_hurwitz(const HurwitzArgs& a, std::ostream& out) {
  CoverProfile prof;
  if (a.gx) prof.cover_genus = Integer(*a.gx);
  if (a.gy) prof.base_genus = Integer(*a.gy);
  if (a.order) prof.group_order = Integer(*a.order);
  prof.ram_points = parse_ram(a.ram);
  HurwitzUnknown unknown;
  if (a.solve == "gx") {
    unknown = HurwitzUnknown::cover_genus;
  } else if (a.solve == "gy") {
    unknown = HurwitzUnknown::base_genus;
  } else if (a.solve == "order") {
    unknown = HurwitzUnknown::group_order;
  } else {
    throw domain_error("--solve must be gx, gy or order");
  }
  const SolveResult r = riemann_hurwitz(prof, unknown);

  Json inputs;
  inputs["gx"] = a.gx ? Json(*a.gx) : Json(nullptr);
  inputs["gy"] = a.gy ? Json(*a.gy) : Json(nullptr);
  inputs["order"] = a.order ? Json(*a.order) : Json(nullptr);
  Json ram = Json::array();
  std::size_t wild = 0;
  for (const auto& q : prof.ram_points) {
    ram.push_back(Json{{"e", str(q.e)}, {"d", str(q.d)}, {"tame", q.tame()}});
    if (!q.tame()) ++wild;
  }
  inputs["ram"] = std::move(ram);
  inputs["solve"] = a.solve;
  Json results;
  results["unknown"] = a.solve;
  results["value"] = r.value ? Json(str(*r.value)) : Json(nullptr);
  results["feasible"] = r.feasible;
  results["reason"] = r.reason;
  results["wild_points"] = wild;
  if (a.json) {
    emit(out, envelope("hurwitz", std::move(inputs), std::move(results),
                       {"riemann-hurwitz:exact-rational"}));
    return r.feasible ? kOk : kInfeasible;
  }
  out << "riemann-hurwitz: solve for " << a.solve << "\n";
  out << "  value:    " << (r.value ? str(*r.value) : "-") << "\n";
  out << "  feasible: " << (r.feasible ? "yes" : "no") << "\n";
  if (!r.reason.empty()) out << "  reason:   " << r.reason << "\n";
  return r.feasible ? kOk : kInfeasible;
}

}  // namespace detail

inline const char* grammar_help() {
  return "Curve syntax:  y^m = <poly> mod p\n"
         "  expr := ['+'|'-'] term (('+'|'-') term)*\n"
         "  term := int ['*'] ['x' ['^' uint]] | 'x' ['^' uint]\n"
         "  whitespace between tokens is ignored; exponents are at most 1000000\n"
         "Exit codes: 0 ok, 1 usage error, 2 infeasible or inconsistent result\n"
         "Environment: SUPERCURVE_WORKERS sets the number of search threads";
}

/// Parses argv and runs one subcommand, writing results to out and
/// diagnostics to err. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves in positive characteristic: classification, canonical representations "
               "and case checks",
               "supercurve"};
  app.footer(grammar_help());
  app.require_subcommand(1);

  detail::ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "genus, point counts, Hasse-Witt matrix and p-rank");
  classify->add_option("curve", ca.curve, "curve, e.g. \"y^2 = x^5 - x mod 5\"")->required();
  classify->add_option("--e", ca.e, "extension degrees to count over (comma separated)")
      ->delimiter(',')
      ->check(CLI::Range(1, 64));
  classify->add_flag("--json", ca.json, "machine-readable output");

  detail::RepArgs ra;
  auto* rep = app.add_subcommand("rep", "canonical representation of y^m = x^p - x");
  rep->add_option("--p", ra.p, "prime p")->required();
  rep->add_option("--m", ra.m, "m dividing p + 1")->required();
  rep->add_option("--seed", ra.seed, "MeatAxe seed")->capture_default_str();
  rep->add_option("--budget", ra.budget, "MeatAxe sample budget")->capture_default_str();
  rep->add_flag("--matrices", ra.matrices, "print generator matrices");
  rep->add_flag("--json", ra.json, "machine-readable output");

  detail::SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive divisibility searches");
  search->add_option("--spec", sa.spec, "tame-outside | tame-inside | mersenne")
      ->required()
      ->check(CLI::IsMember(builtin_searches()));
  search->add_option("--p-max", sa.p_max, "largest prime searched")->capture_default_str();
  search->add_flag("--json", sa.json, "machine-readable output");

  detail::BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "automorphism-group bounds");
  const std::vector<std::string> kinds{"max-rough", "min-rough", "max-fine", "min-fine", "fine-cor",
                                       "aut-ordinary", "crossover", "case-I", "case-II-a",
                                       "case-II-b", "case-II-c", "case-IV-final"};
  bounds->add_option("--kind", ba.kind, "bound family")->required()->check(CLI::IsMember(kinds));
  std::map<std::string, std::int64_t> raw;
  static const char* const names[] = {"q", "g", "c", "d", "a", "b1", "b2", "qprime", "p", "n", "g-max"};
  std::map<std::string, CLI::Option*> opts;
  for (const char* n : names) opts[n] = bounds->add_option(std::string("--") + n, raw[n], n);
  bounds->add_flag("--json", ba.json, "machine-readable output");

  detail::HurwitzArgs ha;
  auto* hurwitz = app.add_subcommand("hurwitz", "Riemann-Hurwitz with exact rationals");
  std::int64_t gx = 0, gy = 0, order = 0;
  auto* gx_opt = hurwitz->add_option("--gx", gx, "genus of the cover");
  auto* gy_opt = hurwitz->add_option("--gy", gy, "genus of the quotient");
  auto* order_opt = hurwitz->add_option("--order", order, "group order");
  hurwitz->add_option("--ram", ha.ram, "ramification list \"e:d,e:d,...\"");
  hurwitz->add_option("--solve", ha.solve, "unknown: gx | gy | order")
      ->check(CLI::IsMember({"gx", "gy", "order"}))
      ->capture_default_str();
  hurwitz->add_flag("--json", ha.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*classify) return detail::run_classify(ca, out);
    if (*rep) return detail::run_rep(ra, out);
    if (*search) return detail::run_search_cmd(sa, out);
    if (*bounds) {
      for (const auto& [n, opt] : opts) {
        if (opt->count() > 0) ba.params[n] = raw[n];
      }
      return detail::run_bounds(ba, out);
    }
    if (*hurwitz) {
      if (gx_opt->count()) ha.gx = gx;
      if (gy_opt->count()) ha.gy = gy;
      if (order_opt->count()) ha.order = order;
      return detail::run_hurwitz(ha, out);
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInfeasible;
  } catch (const division_by_zero& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const modulus_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const invalid_curve& e) {
    err << "error: invalid curve: " << e.what() << "\n";
    return kUsage;
  } catch (const unsupported_model& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const not_applicable& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const oversized_field& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const field_mismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    err << "inconsistent: " << e.what() << "\n";
    return kInfeasible;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace supercurve::cli

#endif  // SUPERCURVE_TOOLS_CLI_HPP
