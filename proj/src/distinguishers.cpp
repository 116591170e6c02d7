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

#include "sumrank/distinguishers.hpp"

#include <algorithm>
#include <functional>

#include "sumrank/error.hpp"
#include "sumrank/skew_poly.hpp"

namespace sumrank {

namespace {

Certainty classify(std::size_t statistic, std::size_t threshold, std::size_t baseline) {
  if (statistic != threshold) return Certainty::Certain;
  if (threshold == baseline) return Certainty::Inconclusive;
  return Certainty::Probable;
}

Verdict make_verdict(std::size_t statistic, std::size_t threshold, std::size_t baseline, std::size_t j) {
  return Verdict{statistic == threshold, statistic, threshold, baseline, classify(statistic, threshold, baseline), j};
}

// Visits every vector of `len` entries in [0, max_entry] whose entries sum
// to `total`, in lexicographic order. Stops when visit returns false.
bool visit_fixed_sum(std::vector<std::uint32_t>& e, std::size_t pos, std::uint64_t total, std::uint32_t max_entry,
                     const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  if (pos + 1 == e.size()) {
    if (total > max_entry) return true;
    e[pos] = static_cast<std::uint32_t>(total);
    return visit(e);
  }
  const std::uint64_t remaining_cap = std::uint64_t{max_entry} * (e.size() - pos - 1);
  const std::uint64_t lo = total > remaining_cap ? total - remaining_cap : 0;
  const std::uint64_t hi = std::min<std::uint64_t>(total, max_entry);
  for (std::uint64_t x = lo; x <= hi; ++x) {
    e[pos] = static_cast<std::uint32_t>(x);
    if (!visit_fixed_sum(e, pos + 1, total - x, max_entry, visit)) return false;
  }
  return true;
}

}  // namespace

std::string_view certainty_name(Certainty c) {
  switch (c) {
    case Certainty::Certain:
      return "certain";
    case Certainty::Probable:
      return "probable";
    case Certainty::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::vector<Elem> star_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error(Errc::ShapeMismatch, "star product of vectors of different length");
  std::vector<Elem> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(x[i], y[i]);
  return out;
}

std::size_t square_code_dim(const Field& f, const Matrix& g) {
  Matrix products(0, g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) products.append_row(star_product(f, g.row(i), g.row(j)));
  }
  return rank(f, products);
}

Verdict square_distinguisher(const Field& f, const Matrix& g, const Composition& comp) {
  if (g.cols() != comp.n()) throw Error(Errc::ShapeMismatch, "generator width differs from composition");
  const Matrix basis = row_space(f, g).basis;
  const std::size_t k = basis.rows();
  const std::size_t n = comp.n();
  if (k <= 2 || 2 * k > n) throw Error(Errc::PreconditionViolated, "square-code test needs 2 < k <= n/2");
  const std::size_t threshold = std::min(comp.ell(), 2 * k - 1);
  const std::size_t baseline = std::min(n, k * (k + 1) / 2);
  return make_verdict(square_code_dim(f, basis), threshold, baseline, 0);
}

std::size_t default_overbeck_j(std::size_t k, std::size_t n) {
  for (std::size_t j = 1; j + k <= n; ++j) {
    if (k + j < std::min((j + 1) * k, n)) return j;
  }
  throw Error(Errc::NoValidJ, "no stack depth separates structured from random codes (needs 1 < k < n-1)");
}

Verdict overbeck_distinguisher(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                               const Composition& comp, std::optional<std::size_t> j) {
  const Field& f = ore.field();
  if (g.cols() != comp.n()) throw Error(Errc::ShapeMismatch, "generator width differs from composition");
  const Matrix basis = row_space(f, g).basis;
  const std::size_t k = basis.rows();
  const std::size_t n = comp.n();
  const std::size_t depth = j ? *j : default_overbeck_j(k, n);
  if (depth + k > n) throw Error(Errc::BadJ, "stack depth exceeds n-k");
  const std::size_t statistic = rank(f, gamma_stack(ore, basis, a, comp, depth));
  return make_verdict(statistic, k + depth, std::min((depth + 1) * k, n), depth);
}

RowSpace intersection_space(const OreCtx& ore, const Matrix& g, std::span<const Elem> a, const Composition& comp,
                            std::size_t j) {
  const Field& f = ore.field();
  if (g.cols() != comp.n()) throw Error(Errc::ShapeMismatch, "generator width differs from composition");
  RowSpace acc = row_space(f, g);
  if (j >= std::max<std::size_t>(acc.dim(), 1)) throw Error(Errc::BadJ, "intersection depth must be below k");
  Matrix block = acc.basis;
  for (std::size_t i = 1; i <= j && acc.dim() > 0; ++i) {
    block = op_apply_mat(ore, a, block, comp);
    acc = row_space_intersection(f, acc.basis, block);
  }
  return acc;
}

std::size_t intersection_chain(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                               const Composition& comp, std::size_t j) {
  return intersection_space(ore, g, a, comp, j).dim();
}

Verdict intersection_distinguisher(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                   const Composition& comp, std::optional<std::size_t> j) {
  const Field& f = ore.field();
  const std::size_t k = rank(f, g);
  const std::size_t n = comp.n();
  const std::size_t depth = j.value_or(1);
  const std::size_t statistic = intersection_chain(ore, g, a, comp, depth);
  const std::size_t shrink = depth * (n - k);
  const std::size_t baseline = k > shrink ? k - shrink : 0;
  return make_verdict(statistic, k - depth, baseline, depth);
}

Matrix scale_blocks(const Field& f, const Matrix& g, std::span<const Elem> scale, const Composition& comp) {
  if (scale.size() != comp.ell() || g.cols() != comp.n()) {
    throw Error(Errc::ShapeMismatch, "block scaling does not match the composition");
  }
  Matrix out(g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out(r, c) = f.mul(scale[comp.block_of(c)], g(r, c));
  }
  return out;
}

SweepResult glrs_multiplier_sweep(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                  const Composition& comp, std::optional<std::size_t> j, std::uint64_t budget) {
  const Field& f = ore.field();
  const std::size_t ell = comp.ell();
  const Matrix basis = row_space(f, g).basis;
  const std::size_t depth = j ? *j : default_overbeck_j(basis.rows(), comp.n());

  std::optional<SweepResult> found;
  std::uint64_t tried = 0;
  bool out_of_budget = false;
  std::vector<Elem> v(ell, kOne);
  std::vector<Elem> inv(ell, kOne);
  auto try_candidate = [&](const std::vector<std::uint32_t>& e) {
    if (tried == budget) {
      out_of_budget = true;
      return false;
    }
    ++tried;
    for (std::size_t i = 1; i < ell; ++i) {
      v[i] = Elem(e[i - 1] + 1);
      inv[i] = f.inv(v[i]);
    }
    const Verdict verdict = overbeck_distinguisher(ore, scale_blocks(f, basis, inv, comp), a, comp, depth);
    if (verdict.structured) {
      found = SweepResult{v, verdict, tried};
      return false;
    }
    return true;
  };

  if (ell == 1) {
    try_candidate({});
  } else {
    const std::uint32_t max_entry = f.order() - 2;
    std::vector<std::uint32_t> e(ell - 1, 0);
    const std::uint64_t max_total = std::uint64_t{max_entry} * (ell - 1);
    for (std::uint64_t total = 0; total <= max_total; ++total) {
      if (!visit_fixed_sum(e, 0, total, max_entry, try_candidate)) break;
    }
  }
  if (found) return *found;
  if (out_of_budget) throw Error(Errc::BudgetExhausted, "multiplier sweep budget exhausted");
  throw Error(Errc::StructureNotFound, "no block multipliers make the code structured");
}

}  // namespace sumrank
