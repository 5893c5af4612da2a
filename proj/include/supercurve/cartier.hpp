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

// Frobenius on H^1(X, O_X) for hyperelliptic y^2 = f(x): the Hasse-Witt
// matrix, its stable rank (the p-rank), and a point-count cross-check.

#ifndef SUPERCURVE_CARTIER_HPP
#define SUPERCURVE_CARTIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "supercurve/curve.hpp"
#include "supercurve/error.hpp"
#include "supercurve/matrix.hpp"

namespace supercurve {

/// Row i is the image of the class y/x^{i+1}: F(y/x^i) = sum_j A(i,j) y/x^j.
struct HasseWittMatrix {
  FieldMatrix entries;
  std::uint64_t genus = 0;
  std::vector<std::string> basis_labels;
};

/// Hasse-Witt matrix of y^2 = f(x) for squarefree f over any field of odd
/// characteristic: entry (i, j) = [x^{p i - j}] f(x)^{(p-1)/2}, 1 <= i, j <= g.
inline HasseWittMatrix hasse_witt(const Polynomial& f) {
  const std::uint64_t p = f.field().characteristic();
  if (p == 2) throw unsupported_model("y^2 = f(x) is inseparable in characteristic 2");
  if (f.degree() < 1 || !is_squarefree(f)) {
    throw unsupported_model("Hasse-Witt matrices need a squarefree non-constant f");
  }
  const auto g = static_cast<std::uint64_t>((f.degree() - 1) / 2);
  const Polynomial h = f.pow((p - 1) / 2);
  HasseWittMatrix hw{FieldMatrix(f.field(), g, g), g, {}};
  for (std::uint64_t i = 1; i <= g; ++i) {
    hw.basis_labels.push_back(i == 1 ? "y/x" : "y/x^" + std::to_string(i));
    for (std::uint64_t j = 1; j <= g; ++j) {
      hw.entries(i - 1, j - 1) = h.coeff(static_cast<long>(p * i - j));
    }
  }
  return hw;
}

inline HasseWittMatrix hasse_witt(const SuperellipticCurve& c) {
  if (c.kind() != CurveKind::hyperelliptic) {
    throw unsupported_model("Hasse-Witt matrices are implemented for hyperelliptic models only");
  }
  return hasse_witt(c.f());
}

enum class PRankVerdict { ordinary, superspecial, intermediate };

inline const char* to_string(PRankVerdict v) {
  switch (v) {
    case PRankVerdict::ordinary: return "ordinary";
    case PRankVerdict::superspecial: return "superspecial";
    case PRankVerdict::intermediate: return "intermediate";
  }
  return "?";
}

struct PRankClass {
  std::uint64_t stable_rank = 0;
  PRankVerdict verdict = PRankVerdict::intermediate;
};

/// Rank of the g-fold semilinear iterate. With row vectors c, F(c) = c^(p) A,
/// so F^g(c) = c^(p^g) A^(p^{g-1}) ... A^(p) A.
inline std::uint64_t stable_rank(const FieldMatrix& a) {
  if (!a.is_square()) throw domain_error("Hasse-Witt matrix must be square");
  const std::size_t g = a.rows();
  if (g == 0) return 0;
  FieldMatrix acc = a;
  FieldMatrix twist = a;
  for (std::size_t k = 1; k < g; ++k) {
    twist = twist.frobenius();
    acc = twist * acc;
  }
  return acc.rank();
}

inline PRankClass classify_p_rank(const FieldMatrix& a) {
  PRankClass out;
  out.stable_rank = stable_rank(a);
  if (a.is_zero()) {
    out.verdict = PRankVerdict::superspecial;
  } else if (out.stable_rank == a.rows()) {
    out.verdict = PRankVerdict::ordinary;
  } else {
    out.verdict = PRankVerdict::intermediate;
  }
  return out;
}

inline PRankClass classify_p_rank(const HasseWittMatrix& hw) { return classify_p_rank(hw.entries); }

struct SuperspecialCrosscheck {
  PRankClass p_rank;
  PointCount count;  // over F_{p^2}
  /// superspecial implies maximal or minimal over F_{p^2}.
  bool superspecial_extremal = true;
  /// ordinary implies neither maximal nor minimal over F_{p^2}.
  bool ordinary_not_extremal = true;
  bool consistent() const { return superspecial_extremal && ordinary_not_extremal; }
};

/// Hasse-Witt verdict against the F_{p^2} point count. Either extremal status
/// is accepted for a superspecial curve: a twist may be minimal.
inline SuperspecialCrosscheck crosscheck_superspecial(const SuperellipticCurve& c) {
  SuperspecialCrosscheck r;
  r.p_rank = classify_p_rank(hasse_witt(c));
  r.count = count_points(c, 2);
  const bool extremal = r.count.status != PointStatus::neither;
  if (r.p_rank.verdict == PRankVerdict::superspecial) r.superspecial_extremal = extremal;
  if (r.p_rank.verdict == PRankVerdict::ordinary) r.ordinary_not_extremal = !extremal;
  return r;
}

}  // namespace supercurve

#endif  // SUPERCURVE_CARTIER_HPP
