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

#include "oracle.hpp"
#include "sumrank/codes.hpp"
#include "sumrank/error.hpp"

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

struct Gf9 {
  FieldPtr f = Field::build(3, 1, 2);
  OreCtx ore{f, 1};
  Elem g = f->primitive();
  GlrsParams params() const { return {ore, Composition({2, 2}), {kOne, g, kOne, g}, {kOne, g}, {kOne, kOne}, 2}; }
};

}  // namespace

TEST_CASE("parameter validation on the GF(9) instance") {
  const Gf9 s;
  CHECK_NOTHROW(validate_params(s.params()));

  auto p = s.params();
  p.a = {kOne, s.f->pow(s.g, 2)};
  CHECK(code_of([&] { validate_params(p); }) == Errc::ConjugacyViolation);

  p = s.params();
  p.beta = {kOne, kOne, kOne, s.g};
  CHECK(code_of([&] { validate_params(p); }) == Errc::DependentLocators);

  p = s.params();
  p.v = {kOne, kZero};
  CHECK(code_of([&] { validate_params(p); }) == Errc::ZeroMultiplier);

  p = s.params();
  p.k = 0;
  CHECK(code_of([&] { validate_params(p); }) == Errc::BadDimension);

  p = s.params();
  p.a = {kZero, s.g};
  CHECK(code_of([&] { validate_params(p); }) == Errc::ConjugacyViolation);

  p = s.params();
  p.beta.pop_back();
  CHECK(code_of([&] { validate_params(p); }) == Errc::ShapeMismatch);
}

TEST_CASE("identity automorphism over an extension caps k at the block count") {
  auto f = Field::build(2, 1, 3);
  const OreCtx id(f, 0);
  Rng rng(1);
  CHECK_NOTHROW(random_glrs(id, Composition({2, 2, 2}), 3, rng));
  CHECK(code_of([&] { random_glrs(id, Composition({2, 2, 2}), 4, rng); }) == Errc::BadDimension);
}

TEST_CASE("Moore matrix examples") {
  const Gf9 s;
  const std::vector<Elem> x{kOne, s.g, kOne, s.g};
  const std::vector<Elem> a{kOne, s.g};
  const Composition comp({2, 2});
  const Matrix m1 = moore_matrix(s.ore, x, a, comp, 1);
  CHECK(m1 == Matrix::row_vector(x));
  CHECK(rank(*s.f, moore_matrix(s.ore, x, a, comp, 2)) == 2);
  const Matrix m4 = moore_matrix(s.ore, x, a, comp, 4);
  CHECK(rank(*s.f, m4) == 4);
  CHECK(oracle::brute_rank(*s.f, m4) == 4);
}

TEST_CASE("Moore rank equals min(d, n) on valid inputs") {
  for (auto [p, sdeg, m, l] : {std::tuple{2u, 1u, 3u, 1u}, {3u, 1u, 2u, 1u}, {2u, 2u, 2u, 1u}, {2u, 1u, 4u, 3u}}) {
    auto f = Field::build(p, sdeg, m);
    const OreCtx ore(f, l);
    Rng rng(p * 100 + m);
    for (int t = 0; t < 40; ++t) {
      const std::size_t ell = 1 + uniform_below(rng, std::min<std::uint64_t>(ore.nontrivial_class_count(), 3));
      std::vector<std::size_t> parts(ell);
      for (auto& part : parts) part = 1 + uniform_below(rng, m);
      const Composition comp(parts);
      const auto x = random_full_weight_vector(*f, comp, rng);
      const auto a = ore.sample_class_reps(ell, rng);
      const std::size_t d = 1 + uniform_below(rng, comp.n() + 2);
      CHECK(rank(*f, moore_matrix(ore, x, a, comp, d)) == std::min(d, comp.n()));
    }
  }
}

TEST_CASE("generator and encoder") {
  const Gf9 s;
  auto p = s.params();
  p.v = {kOne, s.g};
  const Matrix g = canonical_generator(p);
  CHECK(rank(*s.f, g) == 2);
  CHECK(g.row_copy(0) == std::vector<Elem>{kOne, s.g, s.g, s.f->mul(s.g, s.g)});

  CHECK(encode(p, SkewPoly()) == std::vector<Elem>(4, kZero));
  CHECK(encode(p, SkewPoly({kOne})) == g.row_copy(0));
  CHECK(code_of([&] { encode(p, SkewPoly::x_power(2)); }) == Errc::DegreeTooLarge);

  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const SkewPoly poly = random_skew_poly(*s.f, 2, rng);
    std::vector<Elem> msg{poly.coeff(0), poly.coeff(1)};
    CHECK(encode(p, poly) == vec_mat(*s.f, msg, g));
  }

  auto lrs = s.params();
  CHECK(canonical_generator(lrs) == moore_matrix(s.ore, lrs.beta, lrs.a, lrs.comp, 2));
  lrs.k = 1;
  CHECK(canonical_generator(lrs) == Matrix::row_vector(lrs.beta));
}

TEST_CASE("dual of the GF(9) instance") {
  const Gf9 s;
  const auto p = s.params();
  const DualLrs dual = dual_lrs_zero_derivation(p);
  CHECK(dual.k == 2);
  CHECK(sum_rank_weight(*s.f, dual.alpha, p.comp) == 4);
  const Matrix h = dual.parity_check(p.comp);
  CHECK(rank(*s.f, h) == 2);
  CHECK(rank(*s.f, multiply(*s.f, canonical_generator(p), h.transposed())) == 0);
}

TEST_CASE("dual under identity automorphism keeps a") {
  auto f = Field::build(2, 1, 3);
  const OreCtx id(f, 0);
  Rng rng(5);
  const auto p = random_glrs(id, Composition({1, 1, 1, 1, 1}), 2, rng);
  const DualLrs dual = dual_lrs_zero_derivation(p);
  CHECK(dual.a == p.a);
  CHECK(rank(*f, multiply(*f, canonical_generator(p), dual.parity_check(p.comp).transposed())) == 0);
}

TEST_CASE("dual preconditions") {
  const Gf9 s;
  auto p = s.params();
  p.v = {kOne, s.g};
  CHECK(code_of([&] { dual_lrs_zero_derivation(p); }) == Errc::NontrivialMultipliers);
  p = s.params();
  p.ore = s.ore.with_gamma(s.g);
  p.a = {s.f->add(s.g, kOne), s.f->add(s.g, s.g)};
  CHECK(code_of([&] { dual_lrs_zero_derivation(p); }) == Errc::NonzeroDerivation);
}

TEST_CASE("random draws are valid") {
  auto f = Field::build(2, 2, 2);
  const OreCtx ore(f, 1);
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_glrs(ore, Composition({2, 1, 2}), 1 + uniform_below(rng, 5), rng, Multipliers::Random);
    CHECK_NOTHROW(validate_params(p));
  }
  const auto ones = random_glrs(ore, Composition({2, 2}), 2, rng);
  CHECK(ones.is_lrs());
  // q − 1 = 3 classes, each block as long as m.
  CHECK_NOTHROW(random_glrs(ore, Composition({2, 2, 2}), 3, rng));
  CHECK(code_of([&] { random_glrs(ore, Composition({2, 2, 2, 2}), 3, rng); }) == Errc::NotEnoughClasses);
}

TEST_CASE("GLRS codes are MSRD on small instances") {
  const Gf9 s;
  Rng rng(21);
  for (int t = 0; t < 8; ++t) {
    const auto p = random_glrs(s.ore, Composition({2, 2}), 1 + uniform_below(rng, 2), rng, Multipliers::Random);
    CHECK(min_distance_bruteforce(*s.f, canonical_generator(p), p.comp) == p.comp.n() - p.k + 1);
  }
}
