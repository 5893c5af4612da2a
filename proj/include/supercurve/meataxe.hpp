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

// Randomized invariant-subspace search for a matrix representation
// (Parker's MeatAxe with Norton's irreducibility test).

#ifndef SUPERCURVE_MEATAXE_HPP
#define SUPERCURVE_MEATAXE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "supercurve/error.hpp"
#include "supercurve/ff.hpp"
#include "supercurve/matrix.hpp"

namespace supercurve {

/// A subspace of K^n kept in reduced echelon form, one vector per pivot.
class EchelonSpace {
 public:
  EchelonSpace(Field field, std::size_t n) : field_(field), n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

  /// Reduce v against the basis; the remainder is zero iff v is in the span.
  std::vector<FieldElement> reduce(std::vector<FieldElement> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const FieldElement t = v[pivots_[r]];
      if (t.is_zero()) continue;
      for (std::size_t j = pivots_[r]; j < n_; ++j) {
        if (!rows_[r][j].is_zero()) v[j] -= t * rows_[r][j];
      }
    }
    return v;
  }

  bool contains(const std::vector<FieldElement>& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v to the span; returns false when it was already there.
  bool add(const std::vector<FieldElement>& v) {
    std::vector<FieldElement> w = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && w[piv].is_zero()) ++piv;
    if (piv == n_) return false;
    const FieldElement inv = w[piv].inverse();
    for (std::size_t j = piv; j < n_; ++j) w[j] *= inv;
    // Keep the basis fully reduced so the representation is canonical.
    for (auto& row : rows_) {
      const FieldElement t = row[piv];
      if (t.is_zero()) continue;
      for (std::size_t j = piv; j < n_; ++j) {
        if (!w[j].is_zero()) row[j] -= t * w[j];
      }
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    return true;
  }

  /// Basis vectors as the columns of an n x dim matrix, in pivot order.
  FieldMatrix basis() const { return FieldMatrix::from_columns(field_, n_, rows_); }

 private:
  static bool is_zero_vec(const std::vector<FieldElement>& v) {
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Field field_;
  std::size_t n_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<FieldElement>> rows_;
};

/// Smallest subspace containing v and stable under every generator.
inline EchelonSpace spin(const std::vector<FieldElement>& v, const std::vector<FieldMatrix>& gens) {
  const std::size_t n = v.size();
  EchelonSpace space(gens.empty() ? v.front().field() : gens.front().field(), n);
  std::vector<std::vector<FieldElement>> queue;
  if (space.add(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size() && space.dim() < n; ++head) {
    for (const auto& g : gens) {
      auto w = g.apply(queue[head]);
      if (space.add(w)) queue.push_back(std::move(w));
    }
  }
  return space;
}

/// The columns of `subspace` span a space mapped into itself by every generator.
inline bool is_invariant(const FieldMatrix& subspace, const std::vector<FieldMatrix>& gens) {
  for (const auto& g : gens) {
    if (!column_span_contains(subspace, g * subspace)) return false;
  }
  return true;
}

/// Dimension of {C : C G = G C for all generators G}, by solving the full
/// n^2-unknown linear system. Cost grows like n^6; meant for small n.
inline std::size_t commutant_dimension(const std::vector<FieldMatrix>& gens) {
  if (gens.empty()) throw domain_error("commutant of an empty generator list");
  const std::size_t n = gens.front().rows();
  const Field k = gens.front().field();
  const std::size_t unknowns = n * n;  // C(r, c) -> r * n + c
  FieldMatrix sys(k, gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& g : gens) {
    // (C G - G C)(i, j) = sum_l C(i, l) G(l, j) - G(i, l) C(l, j)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t l = 0; l < n; ++l) {
          sys(row, i * n + l) += g(l, j);
          sys(row, l * n + j) -= g(i, l);
        }
      }
    }
  }
  return unknowns - sys.rank();
}

enum class Irreducibility { absolutely_irreducible, reducible };

inline const char* to_string(Irreducibility v) {
  return v == Irreducibility::reducible ? "reducible" : "absolutely-irreducible";
}

struct IrreducibilityVerdict {
  Irreducibility verdict = Irreducibility::reducible;
  /// Reducible only: columns span a proper nonzero invariant subspace.
  std::optional<FieldMatrix> witness;
  std::optional<std::size_t> endo_dim;
  std::size_t samples_used = 0;
};

struct MeatAxeOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 200;  // random algebra elements tried
  /// Also spin every standard basis vector and report the smallest invariant
  /// subspace found, which makes witnesses small and reproducible.
  bool minimize_witness = true;
  /// Cross-check the commutant with the full linear system up to this dimension.
  std::size_t full_commutant_max_dim = 12;
};

namespace detail {

inline std::vector<FieldElement> unit_vector(const Field& k, std::size_t n, std::size_t i) {
  std::vector<FieldElement> v(n, k.zero());
  v[i] = k.one();
  return v;
}

/// Dimension of the commutant restricted to maps sending v into ker_basis,
/// where v is cyclic. Any commuting C preserves ker(X - lambda), so this is
/// the full commutant when v spans that kernel's orbit source.
inline std::size_t cyclic_commutant_dimension(const std::vector<FieldMatrix>& gens,
                                              const std::vector<FieldElement>& v,
                                              const FieldMatrix& kernel) {
  const Field k = gens.front().field();
  const std::size_t n = v.size();
  // Record the spinning words: basis[t] = gens[gen_of[t]] * basis[parent[t]].
  EchelonSpace space(k, n);
  std::vector<std::vector<FieldElement>> basis{v};
  std::vector<std::size_t> parent{0}, gen_of{0};
  space.add(v);
  for (std::size_t head = 0; head < basis.size() && basis.size() < n; ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto w = gens[g].apply(basis[head]);
      if (space.add(w)) {
        basis.push_back(std::move(w));
        parent.push_back(head);
        gen_of.push_back(g);
      }
    }
  }
  if (basis.size() != n) throw domain_error("vector is not cyclic");
  const FieldMatrix b_inv = FieldMatrix::from_columns(k, n, basis).inverse();

  // C_u = U B^{-1}, where U follows the same words from u.
  std::vector<FieldMatrix> defects;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    std::vector<std::vector<FieldElement>> images{kernel.column(c)};
    for (std::size_t t = 1; t < n; ++t) images.push_back(gens[gen_of[t]].apply(images[parent[t]]));
    const FieldMatrix cu = FieldMatrix::from_columns(k, n, images) * b_inv;
    FieldMatrix stacked(k, gens.size() * n * n, 1);
    std::size_t r = 0;
    for (const auto& g : gens) {
      const FieldMatrix d = cu * g - g * cu;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) stacked(r++, 0) = d(i, j);
      }
    }
    defects.push_back(std::move(stacked));
  }
  FieldMatrix sys(k, gens.size() * n * n, kernel.cols());
  for (std::size_t c = 0; c < defects.size(); ++c) {
    for (std::size_t r = 0; r < sys.rows(); ++r) sys(r, c) = defects[c](r, 0);
  }
  return kernel.cols() - sys.rank();
}

/// The smallest invariant subspace spanned from a standard basis vector, if
/// any is proper.
inline std::optional<EchelonSpace> smallest_basis_spin(const std::vector<FieldMatrix>& gens) {
  const Field k = gens.front().field();
  const std::size_t n = gens.front().rows();
  std::optional<EchelonSpace> best;
  for (std::size_t i = 0; i < n; ++i) {
    EchelonSpace s = spin(unit_vector(k, n, i), gens);
    if (s.dim() < n && (!best || s.dim() < best->dim())) best = std::move(s);
  }
  return best;
}

/// Annihilator {x : s . x = 0 for all s in S}.
inline FieldMatrix annihilator(const EchelonSpace& s) { return s.basis().transpose().nullspace(); }

}  // namespace detail

/// Decides whether the representation generated by `gens` is absolutely
/// irreducible or reducible. A reducible verdict always carries a checked
/// witness; when the sample budget runs out without a certificate this throws
/// inconclusive.
inline IrreducibilityVerdict decide_irreducibility(const std::vector<FieldMatrix>& gens,
                                                   const MeatAxeOptions& opt = {}) {
  if (gens.empty()) throw domain_error("decide_irreducibility needs at least one generator");
  const Field k = gens.front().field();
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (g.field() != k || g.rows() != n || g.cols() != n) {
      throw domain_error("generators must be square matrices of one size over one field");
    }
  }

  IrreducibilityVerdict out;
  auto finish_reducible = [&](FieldMatrix witness) {
    if (opt.minimize_witness) {
      if (auto s = detail::smallest_basis_spin(gens); s && s->dim() < witness.cols()) {
        witness = s->basis();
      }
    }
    if (witness.cols() == 0 || witness.cols() >= n || !is_invariant(witness, gens)) {
      throw error("MeatAxe produced an invalid invariant subspace");
    }
    out.verdict = Irreducibility::reducible;
    out.witness = std::move(witness);
    if (n <= opt.full_commutant_max_dim) out.endo_dim = commutant_dimension(gens);
    return out;
  };

  if (n == 0) throw domain_error("zero-dimensional representation");
  if (n == 1) {
    out.verdict = Irreducibility::absolutely_irreducible;
    out.endo_dim = 1;
    return out;
  }

  std::vector<FieldMatrix> transposed;
  for (const auto& g : gens) transposed.push_back(g.transpose());

  std::mt19937_64 rng(opt.seed);
  const std::uint64_t q = k.enumerable_order();
  auto random_scalar = [&] { return k.element_at(rng() % q); };

  // Running pool of words in the generators; each sample multiplies two
  // pool members and takes a random combination of the pool.
  std::vector<FieldMatrix> pool = gens;
  const std::size_t pool_cap = gens.size() + 8;
  const FieldMatrix identity = FieldMatrix::identity(k, n);

  for (std::size_t s = 0; s < opt.budget; ++s) {
    out.samples_used = s + 1;
    const FieldMatrix word = pool[rng() % pool.size()] * pool[rng() % pool.size()];
    if (pool.size() < pool_cap) {
      pool.push_back(word);
    } else {
      pool[gens.size() + rng() % (pool_cap - gens.size())] = word;
    }
    FieldMatrix x(k, n, n);
    for (const auto& w : pool) x = x + random_scalar() * w;

    for (const auto& lambda : distinct_roots(x.char_poly())) {
      const FieldMatrix a = x - lambda * identity;
      const FieldMatrix kernel = a.nullspace();
      for (std::size_t c = 0; c < kernel.cols(); ++c) {
        EchelonSpace sub = spin(kernel.column(c), gens);
        if (sub.dim() < n) return finish_reducible(sub.basis());
      }
      if (kernel.cols() != 1) continue;
      const FieldMatrix dual_kernel = a.transpose().nullspace();
      EchelonSpace dual = spin(dual_kernel.column(0), transposed);
      if (dual.dim() < n) return finish_reducible(detail::annihilator(dual));
      // Norton: both spins are full, so the module is irreducible, and the
      // commutant embeds in the one-dimensional kernel.
      out.verdict = Irreducibility::absolutely_irreducible;
      out.endo_dim = detail::cyclic_commutant_dimension(gens, kernel.column(0), kernel);
      if (*out.endo_dim != 1) throw error("commutant of a Norton-certified module is not scalar");
      if (n <= opt.full_commutant_max_dim && commutant_dimension(gens) != 1) {
        throw error("full commutant disagrees with the Norton certificate");
      }
      return out;
    }
  }
  throw inconclusive("MeatAxe budget of " + std::to_string(opt.budget) +
                     " samples exhausted without a certificate");
}

}  // namespace supercurve

#endif  // SUPERCURVE_MEATAXE_HPP
