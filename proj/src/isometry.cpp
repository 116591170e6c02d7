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

#include "sumrank/isometry.hpp"

#include <algorithm>
#include <numeric>

#include "sumrank/error.hpp"

namespace sumrank {

namespace {

std::vector<std::size_t> inverse_perm(std::span<const std::size_t> pi) {
  std::vector<std::size_t> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = i;
  return inv;
}

Matrix map_entries(const Field& f, const Matrix& m, std::int64_t t) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f.frobenius(m(r, c), t);
  }
  return out;
}

}  // namespace

LinearIsometry LinearIsometry::identity(const Composition& comp) {
  LinearIsometry iso;
  iso.c.assign(comp.ell(), kOne);
  iso.pi.resize(comp.ell());
  std::iota(iso.pi.begin(), iso.pi.end(), std::size_t{0});
  for (auto part : comp.parts()) iso.M.push_back(Matrix::identity(part));
  return iso;
}

void check_isometry(const Field& f, const LinearIsometry& iso, const Composition& comp) {
  const std::size_t ell = comp.ell();
  if (iso.c.size() != ell || iso.M.size() != ell || iso.pi.size() != ell) {
    throw Error(Errc::ShapeMismatch, "isometry does not match the number of blocks");
  }
  std::vector<bool> seen(ell, false);
  for (std::size_t i = 0; i < ell; ++i) {
    if (iso.pi[i] >= ell || seen[iso.pi[i]]) throw Error(Errc::ShapeMismatch, "pi is not a permutation");
    seen[iso.pi[i]] = true;
    if (comp.part(iso.pi[i]) != comp.part(i)) {
      throw Error(Errc::LengthClassViolation, "pi maps a block to one of different length");
    }
  }
  for (std::size_t i = 0; i < ell; ++i) {
    if (iso.c[i].is_zero()) throw Error(Errc::ZeroMultiplier, "isometry scalars must be nonzero");
    const Matrix& m = iso.M[i];
    if (m.rows() != comp.part(i) || m.cols() != comp.part(i)) {
      throw Error(Errc::ShapeMismatch, "block matrix has the wrong size");
    }
    for (auto e : m.data()) {
      if (!f.in_subfield(e)) throw Error(Errc::PreconditionViolated, "block matrix entry outside F_q");
    }
    if (rank(f, m) != m.rows()) throw Error(Errc::PreconditionViolated, "block matrix is singular");
  }
}

std::vector<Elem> apply_linear(const Field& f, const LinearIsometry& iso, std::span<const Elem> x,
                               const Composition& comp) {
  if (x.size() != comp.n()) throw Error(Errc::ShapeMismatch, "vector length differs from composition");
  check_isometry(f, iso, comp);
  const auto src = inverse_perm(iso.pi);
  std::vector<Elem> out(x.size(), kZero);
  for (std::size_t i = 0; i < comp.ell(); ++i) {
    const auto in = comp.block(x, src[i]);
    const Matrix& m = iso.M[i];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Elem acc = kZero;
      for (std::size_t r = 0; r < m.rows(); ++r) acc = f.add(acc, f.mul(in[r], m(r, c)));
      out[comp.offset(i) + c] = f.mul(iso.c[i], acc);
    }
  }
  return out;
}

std::vector<Elem> apply_semilinear(const Field& f, const SemilinearIsometry& iso, std::span<const Elem> x,
                                   const Composition& comp) {
  auto out = apply_linear(f, iso.lin, x, comp);
  for (auto& e : out) e = f.frobenius(e, iso.aut_t);
  return out;
}

Matrix apply_to_rows(const Field& f, const SemilinearIsometry& iso, const Matrix& g, const Composition& comp) {
  Matrix out(g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto row = apply_semilinear(f, iso, g.row(r), comp);
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  return out;
}

SemilinearIsometry compose(const Field& f, const SemilinearIsometry& outer, const SemilinearIsometry& inner) {
  // outer(inner(x))_i = σ_o σ_i( σ_i⁻¹(c^o_i) c^i_{j} x^(src) M^i_j σ_i⁻¹(M^o_i) ), j = π_o⁻¹(i).
  const std::size_t ell = outer.lin.pi.size();
  const auto outer_src = inverse_perm(outer.lin.pi);
  SemilinearIsometry out;
  out.aut_t = outer.aut_t + inner.aut_t;
  out.lin.c.resize(ell);
  out.lin.pi.resize(ell);
  out.lin.M.resize(ell);
  for (std::size_t i = 0; i < ell; ++i) out.lin.pi[i] = outer.lin.pi[inner.lin.pi[i]];
  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t j = outer_src[i];
    out.lin.c[i] = f.mul(f.frobenius(outer.lin.c[i], -inner.aut_t), inner.lin.c[j]);
    out.lin.M[i] = multiply(f, inner.lin.M[j], map_entries(f, outer.lin.M[i], -inner.aut_t));
  }
  return out;
}

GlrsParams transport_params(const SemilinearIsometry& iso, const GlrsParams& p) {
  const Field& f = p.ore.field();
  check_isometry(f, iso.lin, p.comp);
  const auto src = inverse_perm(iso.lin.pi);
  GlrsParams out{p.ore.with_gamma(f.frobenius(p.ore.gamma(), iso.aut_t)), p.comp, {}, {}, {}, p.k};
  out.beta.assign(p.comp.n(), kZero);
  out.a.resize(p.comp.ell());
  out.v.resize(p.comp.ell());
  for (std::size_t i = 0; i < p.comp.ell(); ++i) {
    const std::size_t j = src[i];
    const auto in = p.comp.block(std::span<const Elem>(p.beta), j);
    const Matrix& m = iso.lin.M[i];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Elem acc = kZero;
      for (std::size_t r = 0; r < m.rows(); ++r) acc = f.add(acc, f.mul(in[r], m(r, c)));
      out.beta[p.comp.offset(i) + c] = f.frobenius(acc, iso.aut_t);
    }
    out.a[i] = f.frobenius(p.a[j], iso.aut_t);
    out.v[i] = f.frobenius(f.mul(iso.lin.c[i], p.v[j]), iso.aut_t);
  }
  return out;
}

SemilinearIsometry random_isometry(const Field& f, const Composition& comp, Rng& rng, bool semilinear) {
  SemilinearIsometry iso;
  const std::size_t ell = comp.ell();
  iso.lin.c.resize(ell);
  for (auto& e : iso.lin.c) e = f.random_nonzero(rng);
  for (auto part : comp.parts()) iso.lin.M.push_back(random_invertible_fq(f, part, rng));
  // Fisher–Yates within each class of equal block lengths.
  iso.lin.pi.resize(ell);
  std::iota(iso.lin.pi.begin(), iso.lin.pi.end(), std::size_t{0});
  for (std::size_t i = ell; i-- > 1;) {
    std::vector<std::size_t> same;
    for (std::size_t j = 0; j <= i; ++j) {
      if (comp.part(j) == comp.part(i)) same.push_back(j);
    }
    std::swap(iso.lin.pi[i], iso.lin.pi[same[uniform_below(rng, same.size())]]);
  }
  iso.aut_t = semilinear ? static_cast<std::int64_t>(uniform_below(rng, f.degree())) : 0;
  return iso;
}

Disguise random_disguise(const GlrsParams& p, Rng& rng, bool semilinear) {
  const Field& f = p.ore.field();
  Disguise d;
  d.iso = random_isometry(f, p.comp, rng, semilinear);
  d.scramble = random_invertible(f, p.k, rng);
  d.public_g = multiply(f, d.scramble, apply_to_rows(f, d.iso, canonical_generator(p), p.comp));
  return d;
}

}  // namespace sumrank
