/*
 * Copyright 2026 The sumrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file field.hpp
 * @brief Exact arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^m} with q = p^s.
 *
 * The big field is realized as F_p[z]/(modulus) where the modulus is the
 * smallest monic irreducible polynomial of degree s·m over F_p, ordering
 * candidates by the integer Σ c_i p^i of their non-leading coefficients.
 *
 * An element is stored by its index Σ c_i p^i, where c_i are the
 * coefficients of its canonical representative (ascending powers of z).
 * Under this encoding the zero element has index 0 and the one element has
 * index 1. Multiplication goes through discrete log/exp tables relative to
 * a primitive element; addition is digitwise mod p (XOR for p = 2).
 *
 * The subfield F_q is the fixed field of x ↦ x^(p^s). A fixed F_q-basis of
 * F_{q^m} (the power basis of the first suitable element w) is used to
 * expand elements into F_q-coordinates.
 *
 * @code{.cpp}
 * auto F = sumrank::Field::build(3, 1, 2);    // GF(9) over F_3
 * sumrank::Elem g = F->generator_z();         // the class of z
 * auto g4 = F->pow(g, 4);
 * auto coords = F->fq_coords(g4);             // two F_3 elements
 * @endcode
 */

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sumrank/rng.hpp"

namespace sumrank {

/// Element of F_{q^m}, identified by its coefficient index.
struct Elem {
  std::uint32_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t index) : v(index) {}

  constexpr bool is_zero() const { return v == 0; }
  constexpr bool is_one() const { return v == 1; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

/// Largest supported field order; keeps every table and enumeration small.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

class Field {
 public:
  /// Builds GF(p^(s·m)) with the deterministic modulus and F_q-basis.
  /// Throws Error(NotPrime) or Error(SizeGuardExceeded).
  static std::shared_ptr<const Field> build(unsigned p, unsigned s, unsigned m);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned m() const { return m_; }
  /// Extension degree of F_{q^m} over F_p.
  unsigned degree() const { return s_ * m_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, ascending coefficients, length degree()+1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    std::uint32_t e = log_[a.v] + log_[b.v];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;
  /// a^(p^t); t may be any integer, negative values invert the automorphism.
  Elem frobenius(Elem a, std::int64_t t) const;

  /// Discrete log with respect to primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a.v]; }
  /// primitive()^e with e reduced mod order()-1.
  Elem exp(std::uint64_t e) const { return exp_[e % (order_ - 1)]; }
  Elem primitive() const { return exp_[1 % (order_ - 1)]; }
  /// Residue class of z, i.e. the root of the modulus.
  Elem generator_z() const;

  bool in_subfield(Elem a) const { return frobenius(a, s_) == a; }
  /// All elements of F_q, in increasing index order.
  const std::vector<Elem>& subfield_elements() const { return subfield_; }
  /// F_q-basis {w^0, ..., w^(m-1)} of F_{q^m}.
  const std::vector<Elem>& fq_basis() const { return fq_basis_; }
  /// Coordinates of a in fq_basis(); each entry lies in F_q.
  std::vector<Elem> fq_coords(Elem a) const;
  /// Inverse of fq_coords.
  Elem from_fq_coords(std::span<const Elem> coords) const;

  std::vector<unsigned> coeffs(Elem a) const;
  /// Accepts up to degree() coefficients, each in [0, p).
  Elem from_coeffs(std::span<const unsigned> coeffs) const;
  /// Throws MalformedInput when index >= order().
  Elem checked(std::uint64_t index) const;

  Elem random(Rng& rng) const { return Elem(static_cast<std::uint32_t>(uniform_below(rng, order_))); }
  Elem random_nonzero(Rng& rng) const {
    return Elem(static_cast<std::uint32_t>(1 + uniform_below(rng, order_ - 1)));
  }
  /// Uniform element of the subfield F_q.
  Elem random_subfield(Rng& rng) const { return subfield_[uniform_below(rng, subfield_.size())]; }

 private:
  Field() = default;
  std::vector<unsigned> digits(std::uint32_t index) const;
  std::uint32_t index_of(std::span<const unsigned> digits) const;
  std::vector<unsigned> poly_mulmod(std::span<const unsigned> a, std::span<const unsigned> b) const;

  unsigned p_ = 0, s_ = 0, m_ = 0;
  std::uint32_t order_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i < degree
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<Elem> add_table_;  // order^2 entries for small odd-characteristic fields
  std::vector<Elem> neg_;
  std::vector<Elem> subfield_;
  std::vector<Elem> fq_basis_;
  // Rows of the inverse of the F_p-matrix whose columns are u_j·w^i, with
  // u_j = ζ^j a power basis of F_q over F_p; maps F_p digits to F_p
  // coordinates in that tower basis.
  std::vector<std::vector<unsigned>> tower_inverse_;
  std::vector<Elem> subfield_power_basis_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Monic irreducibility over F_p by trial division with every monic
/// polynomial of degree at most deg/2. Coefficients ascending.
bool is_irreducible_mod_p(std::span<const unsigned> poly, unsigned p);

bool is_prime(std::uint64_t n);

}  // namespace sumrank
