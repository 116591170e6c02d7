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

#include <doctest.h>

#include "sumrank/distinguishers.hpp"
#include "sumrank/error.hpp"
#include "sumrank/isometry.hpp"
#include "sumrank/recovery.hpp"

using namespace sumrank;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::MalformedInput;
}

GrsParams random_grs(const Field& f, std::size_t len, Rng& rng) {
  GrsParams grs;
  while (grs.points.size() < len) {
    const Elem x = f.random(rng);
    if (std::find(grs.points.begin(), grs.points.end(), x) == grs.points.end()) grs.points.push_back(x);
  }
  for (std::size_t i = 0; i < len; ++i) grs.mults.push_back(f.random_nonzero(rng));
  return grs;
}

Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix g = random_matrix(f, k, n, rng);
    if (rank(f, g) == k) return g;
  }
}

}  // namespace

TEST_CASE("GRS column code of an identity-automorphism generator") {
  auto f = Field::build(2, 1, 3);
  const OreCtx id(f, 0);
  Rng rng(41);
  const auto p = random_glrs(id, Composition({2, 1, 3, 2}), 3, rng, Multipliers::Random);
  const Matrix g = canonical_generator(p);
  const Matrix cols = extract_grs_column_code(g, p.comp);
  CHECK(cols.cols() == 4);
  GrsParams expect{p.a, {}};
  for (std::size_t i = 0; i < 4; ++i) expect.mults.push_back(f->mul(p.v[i], p.beta[p.comp.offset(i)]));
  CHECK(cols == grs_generator(*f, expect, 3));
  CHECK(extract_grs_column_code(Matrix::row_vector(std::vector<Elem>{kOne, kZero}), Composition({2})).cols() == 1);
  const Matrix s = random_invertible(*f, 3, rng);
  CHECK(same_row_space(*f, extract_grs_column_code(multiply(*f, s, g), p.comp), cols));
}

TEST_CASE("Sidelnikov-Shestakov on scrambled GRS codes") {
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {2u, 5u}}) {
    auto f = Field::build(p, 1, m);
    Rng rng(42 + p + m);
    for (int t = 0; t < 40; ++t) {
      const std::size_t len = 2 + uniform_below(rng, std::min<std::uint64_t>(f->order() - 2, 9));
      const std::size_t k = 1 + uniform_below(rng, len);
      const GrsParams grs = random_grs(*f, len, rng);
      const Matrix pub = multiply(*f, random_invertible(*f, k, rng), grs_generator(*f, grs, k));
      const GrsParams found = sidelnikov_shestakov(*f, pub);
      CHECK(same_row_space(*f, grs_generator(*f, found, k), pub));
    }
  }
  auto f = Field::build(2, 1, 4);
  GrsParams plain{{}, std::vector<Elem>(8, kOne)};
  for (std::uint32_t i = 1; i <= 8; ++i) plain.points.push_back(Elem(i));
  const Matrix vdm = grs_generator(*f, plain, 3);
  CHECK(same_row_space(*f, grs_generator(*f, sidelnikov_shestakov(*f, vdm), 3), vdm));
}

TEST_CASE("Sidelnikov-Shestakov rejects random codes") {
  auto f = Field::build(2, 1, 4);
  Rng rng(43);
  std::size_t rejected = 0;
  for (int t = 0; t < 50; ++t) {
    try {
      sidelnikov_shestakov(*f, random_full_rank(*f, 3, 8, rng));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::StructureNotFound);
      ++rejected;
    }
  }
  CHECK(rejected == 50);
}

TEST_CASE("evaluation parameters under the identity automorphism") {
  auto f = Field::build(2, 1, 3);
  const OreCtx id(f, 0);
  Rng rng(44);
  const auto small = recover_a_v(id, random_full_rank(*f, 3, 5, rng), Composition({2, 2, 1}));
  CHECK(small.a == std::vector<Elem>{Elem(1), Elem(2), Elem(3)});
  CHECK(small.v == std::vector<Elem>(3, kOne));

  const Composition comp({2, 1, 2, 1, 2});
  for (int t = 0; t < 20; ++t) {
    const auto p = random_glrs(id, comp, 3, rng, Multipliers::Random);
    const Disguise d = random_disguise(p, rng, true);
    const EvalParams ev = recover_a_v(id, d.public_g, comp);
    const RecoveryReport rep = recover_full(id, d.public_g, comp);
    CHECK(rep.verified);
    CHECK(same_row_space(*f, canonical_generator(rep.params), d.public_g));
    CHECK(ev.a.size() == 5);
  }
  CHECK(code_of([&] { recover_a_v(OreCtx(f, 1), Matrix(1, 5), comp); }) == Errc::UnsupportedRegime);
}

TEST_CASE("locator routes on canonical and disguised codes") {
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  const Elem g = f->primitive();
  const GlrsParams p{ore, Composition({2, 2}), {kOne, g, kOne, g}, {kOne, g}, {kOne, kOne}, 2};
  const Matrix gen = canonical_generator(p);
  const auto dual = recover_beta_dual(ore, gen, p.a, p.comp);
  const auto inter = recover_beta_intersection(ore, gen, p.a, p.comp);
  auto with = [&](std::vector<Elem> beta) {
    GlrsParams q = p;
    q.beta = std::move(beta);
    return canonical_generator(q);
  };
  CHECK(same_row_space(*f, with(dual), gen));
  CHECK(same_row_space(*f, with(inter), gen));

  auto f64 = Field::build(2, 2, 3);
  const OreCtx ore64(f64, 1);
  const Composition comp({3, 2, 3});
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    const auto q = random_glrs(ore64, comp, 2 + uniform_below(rng, 5), rng);
    const Disguise d = random_disguise(q, rng, false);
    const GlrsParams image = transport_params(d.iso, q);
    std::vector<Elem> v_inv;
    for (Elem e : image.v) v_inv.push_back(f64->inv(e));
    const Matrix unscaled = scale_blocks(*f64, d.public_g, v_inv, comp);
    const auto b1 = recover_beta_dual(ore64, unscaled, image.a, comp);
    const auto b2 = recover_beta_intersection(ore64, unscaled, image.a, comp);
    // The two routes agree up to one global scalar.
    const Elem ratio = f64->div(b2[0], b1[0]);
    for (std::size_t i = 0; i < b1.size(); ++i) CHECK(f64->mul(ratio, b1[i]) == b2[i]);
    GlrsParams r = image;
    r.beta = b1;
    CHECK(same_row_space(*f64, canonical_generator(r), d.public_g));
  }

  const Matrix rnd = random_full_rank(*f64, 3, comp.n(), rng);
  const std::vector<Elem> a = ore64.sample_class_reps(3, rng);
  CHECK(code_of([&] { recover_beta_dual(ore64, rnd, a, comp); }) == Errc::KernelNotOneDimensional);
  CHECK(code_of([&] { recover_beta_intersection(ore64, rnd, a, comp); }) == Errc::IntersectionNotOneDimensional);
}

TEST_CASE("full recovery with known evaluation parameters") {
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  Rng rng(46);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_glrs(ore, Composition({2, 2}), 1 + uniform_below(rng, 3), rng, Multipliers::Random);
    const Disguise d = random_disguise(p, rng, false);
    const GlrsParams image = transport_params(d.iso, p);
    const RecoveryReport rep = recover_full(image.ore, d.public_g, p.comp, {image.a, image.v});
    CHECK(rep.verified);
    CHECK(same_row_space(*f, canonical_generator(rep.params), d.public_g));
  }
  CHECK(method_name(RecoveryMethod::OverbeckDual) == "overbeck_dual");
  CHECK(route_name(BetaRoute::BlockRatio) == "block_ratio");
}

TEST_CASE("recovery refuses unsupported regimes and random codes") {
  auto f = Field::build(3, 1, 2);
  const OreCtx twisted(f, 1, f->primitive());
  CHECK(code_of([&] { recover_full(twisted, Matrix(1, 4), Composition({2, 2})); }) == Errc::UnsupportedRegime);
  CHECK(code_of([&] { recover_full(OreCtx(f, 1), Matrix::identity(4), Composition({2, 2})); }) ==
        Errc::UnsupportedRegime);

  auto f16 = Field::build(2, 1, 4);
  const OreCtx id(f16, 0);
  const Composition comp({2, 2, 1, 2, 2, 1, 2});
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const Errc e = code_of([&] { recover_full(id, random_full_rank(*f16, 3, comp.n(), rng), comp); });
    CHECK((e == Errc::StructureNotFound || e == Errc::VerificationFailed));
  }
}
