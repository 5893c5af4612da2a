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

/**
 * @file ff.hpp
 * @brief Prime fields F_p and extension fields F_{p^k} = F_p[t]/(m(t)).
 *
 * A Field is a lightweight handle to an interned, immutable descriptor. The
 * modulus m(t) of an extension is the smallest monic irreducible polynomial
 * of degree k when coefficient vectors (c_0, c_1, ..., c_{k-1}) are compared
 * lexicographically, so F_9 is always F_3[t]/(t^2 + 1). Two calls to
 * Field::make with the same (p, k) return equal handles.
 *
 * Elements store their k residues in [0, p) together with the field handle;
 * mixing elements of different fields throws field_mismatch.
 *
 * @code{.cpp}
 * auto f9 = supercurve::Field::make(3, 2);
 * auto t = f9.generator();         // t^2 = -1
 * auto u = t.frobenius();          // t^3 = -t
 * @endcode
 */

#ifndef SUPERCURVE_FF_HPP
#define SUPERCURVE_FF_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "supercurve/arith.hpp"
#include "supercurve/error.hpp"

namespace supercurve {

/// Fields larger than this are never enumerated element by element.
inline constexpr std::uint64_t kMaxEnumerableOrder = std::uint64_t{1} << 24;

namespace detail {

using Coeffs = boost::container::small_vector<std::uint64_t, 4>;
using RawPoly = std::vector<std::uint64_t>;  // index = degree, over F_p

inline void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
  }
  trim(r);
  return r;
}

/// Remainder of a modulo b (b nonzero).
inline RawPoly raw_mod(RawPoly a, const RawPoly& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
    }
    trim(a);
  }
  return a;
}

inline std::pair<RawPoly, RawPoly> raw_divmod(RawPoly a, const RawPoly& b, std::uint64_t p) {
  trim(a);
  RawPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
    }
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline RawPoly raw_sub(RawPoly a, const RawPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// base^exp mod m over F_p, with base already reduced.
inline RawPoly raw_powmod(RawPoly base, std::uint64_t exp, const RawPoly& m, std::uint64_t p) {
  RawPoly result{1};
  while (exp != 0) {
    if (exp & 1U) result = raw_mod(raw_mul(result, base, p), m, p);
    base = raw_mod(raw_mul(base, base, p), m, p);
    exp >>= 1U;
  }
  return result;
}

/// Ben-Or: a monic f of degree k is irreducible iff gcd(f, x^{p^i} - x) = 1
/// for 1 <= i <= k/2. For k <= 3 this is exactly the "no roots" test.
inline bool raw_is_irreducible(const RawPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  const RawPoly x{0, 1};
  RawPoly h = x;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = raw_powmod(h, p, f, p);
    RawPoly g = raw_gcd(f, raw_sub(h, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

/// Smallest monic irreducible of degree k in lexicographic order of
/// (c_0, c_1, ..., c_{k-1}).
inline RawPoly smallest_irreducible(std::uint64_t p, int k) {
  RawPoly f(static_cast<std::size_t>(k) + 1, 0);
  f[static_cast<std::size_t>(k)] = 1;
  for (;;) {
    if (f[0] != 0 && raw_is_irreducible(f, p)) return f;
    // Odometer with c_{k-1} as the fastest digit.
    int pos = k - 1;
    while (pos >= 0) {
      auto& c = f[static_cast<std::size_t>(pos)];
      if (++c < p) break;
      c = 0;
      --pos;
    }
    if (pos < 0) throw domain_error("no irreducible polynomial found");
  }
}

}  // namespace detail

struct FieldData {
  std::uint64_t p = 0;
  int k = 1;
  detail::RawPoly modulus;  // monic, size k + 1; empty for prime fields
  std::optional<std::uint64_t> order;
};

class FieldElement;

class Field {
 public:
  Field() = default;

  /// Interned descriptor for F_{p^k}. Throws modulus_error for composite p and
  /// domain_error for k < 1.
  static Field make(std::uint64_t p, int k = 1) {
    if (!is_prime(p)) throw modulus_error("modulus " + std::to_string(p) + " is not prime");
    if (k < 1) throw domain_error("extension degree must be at least 1");
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<const FieldData>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) {
      auto data = std::make_unique<FieldData>();
      data->p = p;
      data->k = k;
      if (k > 1) data->modulus = detail::smallest_irreducible(p, k);
      data->order = checked_pow(p, static_cast<unsigned>(k));
      slot = std::move(data);
    }
    return Field(slot.get());
  }

  bool valid() const noexcept { return data_ != nullptr; }
  std::uint64_t characteristic() const { return data().p; }
  int degree() const { return data().k; }
  bool is_prime_field() const { return data().k == 1; }
  const detail::RawPoly& modulus() const { return data().modulus; }
  std::optional<std::uint64_t> order() const { return data().order; }

  /// Order of the field, throwing oversized_field past the enumeration guard.
  std::uint64_t enumerable_order() const {
    const auto q = order();
    if (!q || *q > kMaxEnumerableOrder) {
      throw oversized_field(name() + " is too large to enumerate");
    }
    return *q;
  }

  Field prime_field() const { return make(characteristic(), 1); }

  std::string name() const {
    const auto q = order();
    if (q) return "F_" + std::to_string(*q);
    return "F_" + std::to_string(characteristic()) + "^" + std::to_string(degree());
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(std::span<const std::uint64_t> c) const;
  /// The class of t in F_p[t]/(m(t)); only for k >= 2.
  FieldElement generator() const;

  /// Element whose base-p digits (c_0 least significant) spell index.
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  /// The element of smallest index that generates the multiplicative group.
  FieldElement primitive_element() const;
  /// Primitive m-th root of unity; requires m | q - 1.
  FieldElement root_of_unity(std::uint64_t m) const;

  const FieldData* raw() const noexcept { return data_; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

 private:
  explicit Field(const FieldData* d) : data_(d) {}
  const FieldData& data() const {
    if (data_ == nullptr) throw domain_error("use of an unset field");
    return *data_;
  }

  const FieldData* data_ = nullptr;
  friend class FieldElement;
};

inline Field make_field(std::uint64_t p, int k = 1) { return Field::make(p, k); }

class FieldElement {
 public:
  FieldElement() = default;

  Field field() const { return Field(f_); }
  std::uint64_t characteristic() const { return data().p; }
  std::span<const std::uint64_t> coeffs() const { return {c_.data(), c_.size()}; }

  bool is_zero() const {
    for (auto v : c_) {
      if (v != 0) return false;
    }
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }

  /// Residue of a prime-field element (the constant coefficient).
  std::uint64_t value() const { return c_.at(0); }

  /// True when the element lies in the prime subfield.
  bool in_prime_field() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }

  FieldElement& operator+=(const FieldElement& b) {
    check(b);
    const auto p = data().p;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = addmod(c_[i], b.c_[i], p);
    return *this;
  }
  FieldElement& operator-=(const FieldElement& b) {
    check(b);
    const auto p = data().p;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = submod(c_[i], b.c_[i], p);
    return *this;
  }
  FieldElement& operator*=(const FieldElement& b) {
    *this = *this * b;
    return *this;
  }
  FieldElement& operator/=(const FieldElement& b) {
    *this = *this * b.inverse();
    return *this;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement operator-() const {
    FieldElement r = *this;
    const auto p = data().p;
    for (auto& v : r.c_) v = v == 0 ? 0 : p - v;
    return r;
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    const FieldData& d = a.data();
    const auto p = d.p;
    FieldElement r;
    r.f_ = a.f_;
    if (d.k == 1) {
      r.c_.push_back(mulmod(a.c_[0], b.c_[0], p));
      return r;
    }
    const std::size_t k = static_cast<std::size_t>(d.k);
    boost::container::small_vector<u128, 8> prod(2 * k - 1, 0);
    // Accumulate in 128 bits and reduce lazily while the residues are small.
    const bool lazy = p < (std::uint64_t{1} << 28);
    for (std::size_t i = 0; i < k; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const u128 t = static_cast<u128>(a.c_[i]) * b.c_[j];
        prod[i + j] = lazy ? prod[i + j] + t : (prod[i + j] + t % p) % p;
      }
    }
    boost::container::small_vector<std::uint64_t, 8> red(2 * k - 1);
    for (std::size_t i = 0; i < prod.size(); ++i) red[i] = static_cast<std::uint64_t>(prod[i] % p);
    const auto& m = d.modulus;
    for (std::size_t top = 2 * k - 2; top >= k; --top) {
      const std::uint64_t c = red[top];
      if (c == 0) continue;
      red[top] = 0;
      // t^top = t^{top-k} * t^k and t^k = -sum m_i t^i.
      for (std::size_t i = 0; i < k; ++i) {
        if (m[i] != 0) red[top - k + i] = submod(red[top - k + i], mulmod(c, m[i], p), p);
      }
    }
    r.c_.assign(red.begin(), red.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
  }

  FieldElement pow(std::uint64_t e) const {
    FieldElement result = field().one();
    FieldElement base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  FieldElement frobenius() const { return pow(data().p); }

  /// Multiplicative inverse by extended Euclid on the coefficient polynomials.
  FieldElement inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in " + field().name());
    const FieldData& d = data();
    const auto p = d.p;
    FieldElement r;
    r.f_ = f_;
    if (d.k == 1) {
      r.c_.push_back(invmod(c_[0], p));
      return r;
    }
    using detail::RawPoly;
    RawPoly old_r = d.modulus, cur_r(c_.begin(), c_.end());
    detail::trim(cur_r);
    RawPoly old_s{}, cur_s{1};
    while (!cur_r.empty()) {
      auto [q, rem] = detail::raw_divmod(old_r, cur_r, p);
      old_r = std::move(cur_r);
      cur_r = std::move(rem);
      RawPoly next_s = detail::raw_sub(old_s, detail::raw_mul(q, cur_s, p), p);
      old_s = std::move(cur_s);
      cur_s = std::move(next_s);
    }
    // old_r is a nonzero constant since the modulus is irreducible.
    const std::uint64_t scale = invmod(old_r[0], p);
    r.c_.assign(static_cast<std::size_t>(d.k), 0);
    for (std::size_t i = 0; i < old_s.size(); ++i) r.c_[i] = mulmod(old_s[i], scale, p);
    return r;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }

  /// Lexicographic on (c_{k-1}, ..., c_0), which agrees with Field::index_of.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (f_ == nullptr) return "<unset>";
    if (c_.size() == 1) return std::to_string(c_[0]);
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const auto v = c_[i];
      if (v == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(v);
        continue;
      }
      if (v != 1) out += std::to_string(v) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.to_string();
  }

 private:
  friend class Field;

  const FieldData& data() const {
    if (f_ == nullptr) throw domain_error("use of an unset field element");
    return *f_;
  }
  void check(const FieldElement& b) const {
    if (f_ != b.f_) {
      throw field_mismatch("field mismatch: " + field().name() + " vs " + b.field().name());
    }
  }

  const FieldData* f_ = nullptr;
  detail::Coeffs c_;
};

inline FieldElement Field::zero() const {
  FieldElement r;
  r.f_ = &data();
  r.c_.assign(static_cast<std::size_t>(data().k), 0);
  return r;
}

inline FieldElement Field::one() const {
  FieldElement r = zero();
  r.c_[0] = 1 % data().p;
  return r;
}

inline FieldElement Field::from_int(std::int64_t v) const {
  FieldElement r = zero();
  const auto p = data().p;
  if (v >= 0) {
    r.c_[0] = static_cast<std::uint64_t>(v) % p;
  } else {
    // -(|v| mod p), computed without overflowing on INT64_MIN.
    const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    r.c_[0] = submod(0, mag % p, p);
  }
  return r;
}

inline FieldElement Field::from_coeffs(std::span<const std::uint64_t> c) const {
  if (c.size() > static_cast<std::size_t>(degree())) {
    throw domain_error("too many coefficients for " + name());
  }
  FieldElement r = zero();
  for (std::size_t i = 0; i < c.size(); ++i) r.c_[i] = c[i] % data().p;
  return r;
}

inline FieldElement Field::generator() const {
  if (degree() < 2) throw domain_error(name() + " is a prime field; it has no generator t");
  FieldElement r = zero();
  r.c_[1] = 1;
  return r;
}

inline FieldElement Field::element_at(std::uint64_t index) const {
  FieldElement r = zero();
  const auto p = data().p;
  for (auto& v : r.c_) {
    v = index % p;
    index /= p;
  }
  return r;
}

inline std::uint64_t Field::index_of(const FieldElement& a) const {
  if (a.f_ != data_) throw field_mismatch("element of " + a.field().name() + " indexed in " + name());
  (void)enumerable_order();
  std::uint64_t idx = 0;
  for (std::size_t i = a.c_.size(); i-- > 0;) idx = idx * data().p + a.c_[i];
  return idx;
}

inline FieldElement Field::primitive_element() const {
  const auto q = order();
  if (!q) throw oversized_field(name() + " order exceeds 64 bits");
  const std::uint64_t n = *q - 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t idx = 1; idx < *q; ++idx) {
    const FieldElement a = element_at(idx);
    bool primitive = true;
    for (auto r : factors) {
      if (a.pow(n / r).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  // The multiplicative group of a finite field is cyclic.
  throw domain_error("no primitive element found");
}

inline FieldElement Field::root_of_unity(std::uint64_t m) const {
  const auto q = order();
  if (!q) throw oversized_field(name() + " order exceeds 64 bits");
  if (m == 0 || (*q - 1) % m != 0) {
    throw domain_error("no primitive " + std::to_string(m) + "-th root of unity in " + name());
  }
  return primitive_element().pow((*q - 1) / m);
}

/// Image of a under the inclusion F_p -> K (or the identity when a lies in K).
inline FieldElement embed(const FieldElement& a, const Field& target) {
  if (a.field() == target) return a;
  if (!a.field().is_prime_field() || a.characteristic() != target.characteristic()) {
    throw field_mismatch("cannot embed " + a.field().name() + " into " + target.name());
  }
  return target.from_int(static_cast<std::int64_t>(a.value()));
}

/// True when `target` contains `source` via embed().
inline bool embeds_into(const Field& source, const Field& target) {
  return source == target ||
         (source.is_prime_field() && source.characteristic() == target.characteristic());
}

/// a is an m-th power in K^x, i.e. a^{(q-1)/gcd(m, q-1)} = 1. a must be nonzero.
inline bool is_mth_power(const FieldElement& a, std::uint64_t m) {
  if (a.is_zero()) throw domain_error("is_mth_power of zero");
  const auto q = a.field().order();
  if (!q) throw oversized_field(a.field().name() + " order exceeds 64 bits");
  const std::uint64_t n = *q - 1;
  return a.pow(n / std::gcd(m, n)).is_one();
}

}  // namespace supercurve

#endif  // SUPERCURVE_FF_HPP
