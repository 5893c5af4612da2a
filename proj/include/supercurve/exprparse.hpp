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

// Recursive-descent parser for polynomial and curve expressions.
//
//   expr  := ['+' | '-'] term (('+' | '-') term)*
//   term  := int ['*'] ['x' ['^' uint]] | 'x' ['^' uint]
//   curve := 'y' '^' uint '=' expr 'mod' uint
//
// Whitespace between tokens is ignored. Exponents are capped at 10^6.

#ifndef SUPERCURVE_EXPRPARSE_HPP
#define SUPERCURVE_EXPRPARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercurve/arith.hpp"
#include "supercurve/curve.hpp"
#include "supercurve/error.hpp"
#include "supercurve/poly.hpp"

namespace supercurve {

inline constexpr std::uint64_t kMaxExponent = 1'000'000;

struct ExprTerm {
  Integer coeff;  // signed
  std::uint64_t exponent = 0;
};

struct ExprAst {
  std::vector<ExprTerm> terms;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : s_(src) {}

  std::size_t pos() const { return i_; }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool at_end() {
    skip_ws();
    return i_ == s_.size();
  }

  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool peek_digit() {
    skip_ws();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (s_.substr(i_, w.size()) != w) fail({std::string(w)});
    i_ += w.size();
  }

  Integer integer() {
    skip_ws();
    if (!peek_digit()) fail({"integer"});
    Integer v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
    }
    return v;
  }

  std::uint64_t exponent() {
    skip_ws();
    const std::size_t start = i_;
    if (!peek_digit()) fail({"unsigned integer"});
    const Integer v = integer();
    if (v > kMaxExponent) {
      throw parse_error(start, {"exponent <= 1000000"},
                        "exponent overflow at offset " + std::to_string(start) + ": " + v.str() +
                            " exceeds 1000000");
    }
    return static_cast<std::uint64_t>(v);
  }

  ExprTerm term() {
    ExprTerm t{1, 0};
    bool have_int = false;
    if (peek_digit()) {
      t.coeff = integer();
      have_int = true;
    }
    const bool star = have_int && accept('*');
    if (accept('x')) {
      t.exponent = 1;
      if (accept('^')) t.exponent = exponent();
    } else if (!have_int || star) {
      fail(have_int ? std::vector<std::string>{"x"} : std::vector<std::string>{"integer", "x"});
    }
    return t;
  }

  ExprAst expr() {
    ExprAst ast;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      ExprTerm t = term();
      if (negative) t.coeff = -t.coeff;
      ast.terms.push_back(std::move(t));
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return ast;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string msg = "syntax error at offset " + std::to_string(i_) + ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      msg += (k ? " or '" : "'") + expected[k] + "'";
    }
    if (i_ < s_.size()) {
      msg += ", found '" + std::string(1, s_[i_]) + "'";
    } else {
      msg += ", found end of input";
    }
    throw parse_error(i_, std::move(expected), msg);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

inline Polynomial reduce_ast(const ExprAst& ast, const Field& field) {
  const Integer p = field.characteristic();
  std::uint64_t top = 0;
  for (const auto& t : ast.terms) top = std::max(top, t.exponent);
  std::vector<FieldElement> coeffs(top + 1, field.zero());
  for (const auto& t : ast.terms) {
    Integer r = t.coeff % p;
    if (r < 0) r += p;
    coeffs[t.exponent] += field.from_int(static_cast<std::int64_t>(r));
  }
  return Polynomial(field, std::move(coeffs));
}

}  // namespace detail

inline ExprAst parse_expr(std::string_view src) {
  detail::Parser ps(src);
  if (ps.at_end()) throw parse_error(ps.pos(), {"integer", "x"}, "empty expression");
  ExprAst ast = ps.expr();
  if (!ps.at_end()) ps.fail({"+", "-", "end of input"});
  return ast;
}

/// Polynomial over `field` with integer coefficients reduced mod p.
inline Polynomial parse_poly(std::string_view src, const Field& field) {
  return detail::reduce_ast(parse_expr(src), field);
}

/// "y^m = <poly> mod p". A composite p raises modulus_error and gcd(m, p) > 1
/// raises invalid_curve.
inline SuperellipticCurve parse_curve(std::string_view src) {
  detail::Parser ps(src);
  ps.expect('y');
  ps.expect('^');
  const std::size_t m_at = ps.pos();
  const std::uint64_t m = ps.exponent();
  if (m < 2) throw parse_error(m_at, {"exponent >= 2"}, "the exponent of y must be at least 2");
  ps.expect('=');
  const ExprAst ast = ps.expr();
  ps.expect_word("mod");
  ps.skip_ws();
  const std::size_t p_at = ps.pos();
  const Integer p = ps.integer();
  if (!ps.at_end()) ps.fail({"end of input"});
  if (p > Integer(1U << 30)) {
    throw parse_error(p_at, {"modulus < 2^30"}, "modulus " + p.str() + " is too large");
  }
  const Field k = make_field(static_cast<std::uint64_t>(p));
  return SuperellipticCurve::make(m, detail::reduce_ast(ast, k));
}

/// Canonical text of a polynomial over a prime field, accepted by parse_poly.
inline std::string render(const Polynomial& f) { return f.to_string(); }

}  // namespace supercurve

#endif  // SUPERCURVE_EXPRPARSE_HPP
