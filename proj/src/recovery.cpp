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

#include "sumrank/recovery.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "sumrank/distinguishers.hpp"
#include "sumrank/error.hpp"
#include "sumrank/skew_poly.hpp"

namespace sumrank {

namespace {

bool blocks_independent(const Field& f, std::span<const Elem> beta, const Composition& comp) {
  for (std::size_t i = 0; i < comp.ell(); ++i) {
    const auto block = comp.block(beta, i);
    if (rank_fq(f, block) != block.size()) return false;
  }
  return true;
}

bool pairwise_distinct(std::span<const Elem> xs) {
  std::set<Elem> seen(xs.begin(), xs.end());
  return seen.size() == xs.size();
}

// The first `count` nonzero elements in index order.
std::vector<Elem> first_nonzero(const Field& f, std::size_t count) {
  if (count >= f.order()) throw Error(Errc::StructureNotFound, "more points requested than nonzero elements");
  std::vector<Elem> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = Elem(static_cast<std::uint32_t>(i + 1));
  return out;
}

bool verifies(const Field& f, const GrsParams& grs, const Matrix& basis) {
  return row_space(f, grs_generator(f, grs, basis.rows())) == RowSpace{basis};
}

// Multipliers y with ⟨V_k(points)·diag(y)⟩ = ⟨basis⟩, from the condition that
// every weighted Vandermonde row is orthogonal to the dual code.
std::optional<std::vector<Elem>> solve_multipliers(const Field& f, std::span<const Elem> points,
                                                   const Matrix& basis) {
  const std::size_t k = basis.rows();
  const std::size_t ell = basis.cols();
  const Matrix dual = right_kernel(f, basis);
  Matrix system(k * dual.rows(), ell);
  for (std::size_t j = 0; j < ell; ++j) {
    Elem power = kOne;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t r = 0; r < dual.rows(); ++r) system(i * dual.rows() + r, j) = f.mul(power, dual(r, j));
      power = f.mul(power, points[j]);
    }
  }
  const Matrix ker = right_kernel(f, system);
  if (ker.rows() != 1) return std::nullopt;
  auto y = ker.row_copy(0);
  if (std::any_of(y.begin(), y.end(), [](Elem e) { return e.is_zero(); })) return std::nullopt;
  return y;
}

// Shifts every point by the first w (index order) keeping all points nonzero.
GrsParams shift_off_zero(const Field& f, GrsParams grs) {
  for (std::uint32_t w = 0; w < f.order(); ++w) {
    const Elem shift(w);
    const bool ok = std::none_of(grs.points.begin(), grs.points.end(),
                                 [&](Elem x) { return f.add(x, shift).is_zero(); });
    if (!ok) continue;
    for (auto& x : grs.points) x = f.add(x, shift);
    return grs;
  }
  throw Error(Errc::StructureNotFound, "points cover the whole field");
}

GrsParams ss_general(const Field& f, const Matrix& e) {
  const std::size_t k = e.rows();
  const std::size_t ell = e.cols();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      if (e(i, c) != (i == c ? kOne : kZero)) {
        throw Error(Errc::StructureNotFound, "leading columns are not an information set");
      }
    }
    for (std::size_t c = k; c < ell; ++c) {
      if (e(i, c).is_zero()) throw Error(Errc::StructureNotFound, "systematic part has a zero entry");
    }
  }
  // Row t of the systematic generator is y_j·c_t·Π_{s<k, s≠t}(x_j − x_s),
  // so E(0,j)/E(t,j) = κ_t (x_j − x_t)/(x_j − x_0). Normalizing x_0 = 0 and
  // x_1 = 1 leaves κ_1 free; any choice keeping every point finite works.
  std::vector<Elem> r(ell);
  for (std::size_t c = k; c < ell; ++c) r[c] = f.div(e(0, c), e(1, c));
  if (!pairwise_distinct(std::span<const Elem>(r).subspan(k))) {
    throw Error(Errc::StructureNotFound, "repeated cross-ratio");
  }

  std::vector<Elem> z(ell);
  std::vector<Elem> points(ell);
  for (std::uint32_t kv = 1; kv < f.order(); ++kv) {
    const Elem kappa(kv);
    bool finite = true;
    for (std::size_t c = k; c < ell && finite; ++c) {
      z[c] = f.sub(kOne, f.div(r[c], kappa));
      finite = !z[c].is_zero();
    }
    if (!finite) continue;
    points[0] = kZero;
    points[1] = kOne;
    for (std::size_t c = k; c < ell; ++c) points[c] = f.inv(z[c]);

    bool consistent = true;
    for (std::size_t t = 2; t < k && consistent; ++t) {
      // E(0,j)/E(t,j) = u − w·z_j with u = κ_t and w = κ_t·x_t.
      const Elem rho0 = f.div(e(0, k), e(t, k));
      const Elem rho1 = f.div(e(0, k + 1), e(t, k + 1));
      const Elem w = f.div(f.sub(rho0, rho1), f.sub(z[k + 1], z[k]));
      const Elem u = f.add(rho0, f.mul(w, z[k]));
      if (u.is_zero()) {
        consistent = false;
        break;
      }
      points[t] = f.div(w, u);
      for (std::size_t c = k + 2; c < ell && consistent; ++c) {
        consistent = f.div(e(0, c), e(t, c)) == f.sub(u, f.mul(w, z[c]));
      }
    }
    if (!consistent || !pairwise_distinct(points)) continue;
    auto mults = solve_multipliers(f, points, e);
    if (!mults) continue;
    GrsParams grs{points, std::move(*mults)};
    if (verifies(f, grs, e)) return grs;
  }
  throw Error(Errc::StructureNotFound, "no consistent point configuration");
}

Matrix full_row_basis(const Field& f, const Matrix& g) { return row_space(f, g).basis; }

}  // namespace

Matrix extract_grs_column_code(const Matrix& g, const Composition& comp) {
  if (g.cols() != comp.n()) throw Error(Errc::ShapeMismatch, "generator width differs from composition");
  Matrix out(g.rows(), comp.ell());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t i = 0; i < comp.ell(); ++i) out(r, i) = g(r, comp.offset(i));
  }
  return out;
}

Matrix grs_generator(const Field& f, const GrsParams& grs, std::size_t k) {
  Matrix out(k, grs.points.size());
  for (std::size_t j = 0; j < grs.points.size(); ++j) {
    Elem cur = grs.mults[j];
    for (std::size_t i = 0; i < k; ++i) {
      out(i, j) = cur;
      cur = f.mul(cur, grs.points[j]);
    }
  }
  return out;
}

GrsParams sidelnikov_shestakov(const Field& f, const Matrix& g) {
  const Matrix e = full_row_basis(f, g);
  const std::size_t k = e.rows();
  const std::size_t ell = e.cols();
  if (k == 0) throw Error(Errc::StructureNotFound, "zero code");

  GrsParams grs;
  if (k == ell) {
    grs = {first_nonzero(f, ell), std::vector<Elem>(ell, kOne)};
  } else if (k == 1) {
    grs = {first_nonzero(f, ell), e.row_copy(0)};
    if (std::any_of(grs.mults.begin(), grs.mults.end(), [](Elem x) { return x.is_zero(); })) {
      throw Error(Errc::StructureNotFound, "one-dimensional code with a zero coordinate");
    }
  } else if (k + 1 == ell) {
    // Dual is spanned by h; GRS_{ℓ−1}(x, y) has dual GRS_1(x, y') with
    // y'_j = 1/(y_j Π_{t≠j}(x_j − x_t)), so any distinct points work.
    const Matrix h = right_kernel(f, e);
    grs.points = first_nonzero(f, ell);
    grs.mults.resize(ell);
    for (std::size_t j = 0; j < ell; ++j) {
      if (h(0, j).is_zero()) throw Error(Errc::StructureNotFound, "dual has a zero coordinate");
      Elem prod = h(0, j);
      for (std::size_t t = 0; t < ell; ++t) {
        if (t != j) prod = f.mul(prod, f.sub(grs.points[j], grs.points[t]));
      }
      grs.mults[j] = f.inv(prod);
    }
  } else {
    grs = ss_general(f, e);
  }
  grs = shift_off_zero(f, std::move(grs));
  if (!verifies(f, grs, e)) throw Error(Errc::StructureNotFound, "recovered GRS parameters do not verify");
  return grs;
}

EvalParams recover_a_v(const OreCtx& ore, const Matrix& g, const Composition& comp) {
  if (!ore.is_identity() || !ore.zero_derivation()) {
    throw Error(Errc::UnsupportedRegime, "parameter recovery without side information needs the identity automorphism");
  }
  const Field& f = ore.field();
  const Matrix basis = full_row_basis(f, g);
  const std::size_t ell = comp.ell();
  if (ell <= basis.rows()) return {first_nonzero(f, ell), std::vector<Elem>(ell, kOne)};
  auto grs = sidelnikov_shestakov(f, extract_grs_column_code(basis, comp));
  return {std::move(grs.points), std::move(grs.mults)};
}

std::vector<Elem> recover_beta_dual(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                    const Composition& comp) {
  if (!ore.zero_derivation()) throw Error(Errc::NonzeroDerivation, "dual route needs a zero derivation");
  const Field& f = ore.field();
  const Matrix basis = full_row_basis(f, g);
  const std::size_t k = basis.rows();
  const std::size_t n = comp.n();
  if (k == 0 || k >= n) throw Error(Errc::PreconditionViolated, "dual route needs 0 < k < n");
  const Matrix ker = right_kernel(f, gamma_stack(ore, basis, a, comp, n - k - 1));
  if (ker.rows() != 1) throw Error(Errc::KernelNotOneDimensional, "Γ-stack kernel is not one-dimensional");

  // Σ α_c θ^(h−1)(β_c) N_{h−1}(a) = 0 becomes linear in β after applying θ^(1−h).
  Matrix system(n - 1, n);
  for (std::size_t h = 0; h + 1 < n; ++h) {
    for (std::size_t c = 0; c < n; ++c) {
      const Elem coeff = f.mul(ker(0, c), ore.gen_norm(a[comp.block_of(c)], h));
      system(h, c) = ore.theta_pow(coeff, -static_cast<std::int64_t>(h));
    }
  }
  const Matrix sol = right_kernel(f, system);
  if (sol.rows() != 1) throw Error(Errc::DegenerateSolution, "locator system does not have nullity one");
  auto beta = sol.row_copy(0);
  if (!blocks_independent(f, beta, comp)) throw Error(Errc::DegenerateSolution, "locator block is F_q-dependent");
  return beta;
}

std::vector<Elem> recover_beta_intersection(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                            const Composition& comp) {
  if (!ore.zero_derivation()) throw Error(Errc::NonzeroDerivation, "intersection route needs a zero derivation");
  if (std::any_of(a.begin(), a.end(), [](Elem e) { return e.is_zero(); })) {
    throw Error(Errc::ZeroEvaluationParameter, "intersection route needs nonzero evaluation parameters");
  }
  const Field& f = ore.field();
  const Matrix basis = full_row_basis(f, g);
  const std::size_t k = basis.rows();
  if (k == 0) throw Error(Errc::IntersectionNotOneDimensional, "zero code");
  const RowSpace space = intersection_space(ore, basis, a, comp, k - 1);
  if (space.dim() != 1) throw Error(Errc::IntersectionNotOneDimensional, "intersection chain does not end in a line");
  std::vector<Elem> beta(comp.n());
  for (std::size_t c = 0; c < beta.size(); ++c) {
    beta[c] = op_d_inv_pow(ore, a[comp.block_of(c)], space.basis(0, c), k - 1);
  }
  if (!blocks_independent(f, beta, comp)) throw Error(Errc::DegenerateSolution, "locator block is F_q-dependent");
  return beta;
}

std::vector<Elem> recover_beta_block_ratio(const OreCtx& ore, const Matrix& g, const Composition& comp) {
  if (!ore.is_identity()) throw Error(Errc::UnsupportedRegime, "block ratios need the identity automorphism");
  const Field& f = ore.field();
  const Matrix basis = full_row_basis(f, g);
  std::vector<Elem> beta(comp.n());
  for (std::size_t i = 0; i < comp.ell(); ++i) {
    const std::size_t c0 = comp.offset(i);
    std::size_t r = 0;
    while (r < basis.rows() && basis(r, c0).is_zero()) ++r;
    if (r == basis.rows()) throw Error(Errc::StructureNotFound, "zero column in the generator");
    for (std::size_t j = 0; j < comp.part(i); ++j) {
      const Elem ratio = f.div(basis(r, c0 + j), basis(r, c0));
      for (std::size_t s = 0; s < basis.rows(); ++s) {
        if (basis(s, c0 + j) != f.mul(ratio, basis(s, c0))) {
          throw Error(Errc::StructureNotFound, "columns of a block are not proportional");
        }
      }
      beta[c0 + j] = ratio;
    }
  }
  if (!blocks_independent(f, beta, comp)) throw Error(Errc::DegenerateSolution, "locator block is F_q-dependent");
  return beta;
}

std::string_view method_name(RecoveryMethod m) {
  switch (m) {
    case RecoveryMethod::SquareSs:
      return "square_ss";
    case RecoveryMethod::OverbeckDual:
      return "overbeck_dual";
    case RecoveryMethod::Intersection:
      return "intersection";
    case RecoveryMethod::Combined:
      return "combined";
  }
  return "unknown";
}

std::string_view route_name(BetaRoute r) {
  switch (r) {
    case BetaRoute::Dual:
      return "dual";
    case BetaRoute::Intersection:
      return "intersection";
    case BetaRoute::BlockRatio:
      return "block_ratio";
    case BetaRoute::FullSpace:
      return "full_space";
  }
  return "unknown";
}

RecoveryReport recover_full(const OreCtx& ore, const Matrix& g, const Composition& comp,
                            const RecoveryOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!ore.zero_derivation()) throw Error(Errc::UnsupportedRegime, "recovery with a nonzero derivation is not supported");
  const Field& f = ore.field();
  if (g.cols() != comp.n()) throw Error(Errc::ShapeMismatch, "generator width differs from composition");
  const Matrix basis = full_row_basis(f, g);
  const std::size_t k = basis.rows();
  if (k == 0) throw Error(Errc::StructureNotFound, "zero code");

  EvalParams ev;
  bool stage_one = false;
  if (options.a) {
    ev.a = *options.a;
    ev.v = options.v.value_or(std::vector<Elem>(comp.ell(), kOne));
  } else if (ore.is_identity()) {
    ev = recover_a_v(ore, basis, comp);
    stage_one = true;
  } else {
    throw Error(Errc::UnsupportedRegime, "evaluation parameters must be supplied when θ is not the identity");
  }
  if (ev.a.size() != comp.ell() || ev.v.size() != comp.ell()) {
    throw Error(Errc::ShapeMismatch, "evaluation parameters do not match the composition");
  }
  std::vector<Elem> v_inv(comp.ell());
  for (std::size_t i = 0; i < comp.ell(); ++i) {
    if (ev.v[i].is_zero()) throw Error(Errc::ZeroMultiplier, "block multipliers must be nonzero");
    v_inv[i] = f.inv(ev.v[i]);
  }
  const Matrix unscaled = scale_blocks(f, basis, v_inv, comp);

  std::vector<BetaRoute> routes{BetaRoute::Dual, BetaRoute::Intersection};
  if (ore.is_identity()) routes.push_back(BetaRoute::BlockRatio);
  if (k == comp.n()) routes = {BetaRoute::FullSpace};
  bool produced_candidate = false;
  for (auto route : routes) {
    std::vector<Elem> beta;
    try {
      switch (route) {
        case BetaRoute::Dual:
          beta = recover_beta_dual(ore, unscaled, ev.a, comp);
          break;
        case BetaRoute::Intersection:
          beta = recover_beta_intersection(ore, unscaled, ev.a, comp);
          break;
        case BetaRoute::BlockRatio:
          beta = recover_beta_block_ratio(ore, unscaled, comp);
          break;
        case BetaRoute::FullSpace:
          for (std::size_t i = 0; i < comp.ell(); ++i) {
            if (comp.part(i) > f.m()) throw Error(Errc::PartExceedsM, "block longer than m");
            beta.insert(beta.end(), f.fq_basis().begin(), f.fq_basis().begin() + static_cast<long>(comp.part(i)));
          }
          break;
      }
    } catch (const Error&) {
      continue;
    }
    produced_candidate = true;
    GlrsParams params{ore, comp, std::move(beta), ev.a, ev.v, k};
    bool ok = false;
    try {
      ok = same_row_space(f, canonical_generator(params), basis);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) continue;

    RecoveryReport report{std::move(params), RecoveryMethod::Combined, route, true, 0.0};
    if (!stage_one && route == BetaRoute::Dual) report.method = RecoveryMethod::OverbeckDual;
    if (!stage_one && route == BetaRoute::Intersection) report.method = RecoveryMethod::Intersection;
    if (stage_one && route == BetaRoute::BlockRatio) report.method = RecoveryMethod::SquareSs;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  if (produced_candidate) throw Error(Errc::VerificationFailed, "recovered locators do not reproduce the code");
  throw Error(Errc::StructureNotFound, "no locator route succeeded");
}

}  // namespace sumrank
