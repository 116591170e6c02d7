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

#include "sumrank/field.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sumrank/error.hpp"

namespace sumrank {

namespace {

constexpr std::uint32_t kAddTableMaxOrder = 1024;

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % n);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Remainder of a by monic b over F_p; both ascending, b.back() == 1.
std::vector<unsigned> poly_rem(std::vector<unsigned> a, std::span<const unsigned> b, unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        a[shift + i] = static_cast<unsigned>((a[shift + i] + std::uint64_t{p - lead} * b[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

// Inverse of a square matrix over F_p, or nullopt when singular.
std::optional<std::vector<std::vector<unsigned>>> invert_mod_p(std::vector<std::vector<unsigned>> a,
                                                               unsigned p) {
  const std::size_t n = a.size();
  std::vector<std::vector<unsigned>> inv(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  auto inverse_of = [p](unsigned x) {
    unsigned r = 1;
    for (unsigned e = p - 2, b = x; e; e >>= 1, b = static_cast<unsigned>((std::uint64_t{b} * b) % p)) {
      if (e & 1) r = static_cast<unsigned>((std::uint64_t{r} * b) % p);
    }
    return r;
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const unsigned s = inverse_of(a[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = static_cast<unsigned>((std::uint64_t{a[col][j]} * s) % p);
      inv[col][j] = static_cast<unsigned>((std::uint64_t{inv[col][j]} * s) % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const unsigned f = p - a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = static_cast<unsigned>((a[r][j] + std::uint64_t{f} * a[col][j]) % p);
        inv[r][j] = static_cast<unsigned>((inv[r][j] + std::uint64_t{f} * inv[col][j]) % p);
      }
    }
  }
  return inv;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const unsigned> poly, unsigned p) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree e is enumerated by the integer
  // value of its lower coefficients.
  for (std::size_t e = 1; e <= deg / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    std::vector<unsigned> divisor(e + 1, 0);
    divisor[e] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < e; ++i, t /= p) divisor[i] = static_cast<unsigned>(t % p);
      auto r = poly_rem(std::vector<unsigned>(poly.begin(), poly.end()), divisor, p);
      if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<unsigned> Field::digits(std::uint32_t index) const {
  std::vector<unsigned> d(degree());
  for (unsigned i = 0; i < degree(); ++i, index /= p_) d[i] = index % p_;
  return d;
}

std::uint32_t Field::index_of(std::span<const unsigned> d) const {
  std::uint32_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p_ + d[i];
  return idx;
}

std::vector<unsigned> Field::poly_mulmod(std::span<const unsigned> a, std::span<const unsigned> b) const {
  std::vector<unsigned> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    }
  }
  auto r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(degree(), 0);
  return r;
}

std::shared_ptr<const Field> Field::build(unsigned p, unsigned s, unsigned m) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0 || m == 0) throw Error(Errc::MalformedInput, "s and m must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < s * m; ++i) {
    order *= p;
    if (order > kMaxFieldOrder) {
      throw Error(Errc::SizeGuardExceeded, "field order exceeds 2^20");
    }
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->s_ = s;
  f->m_ = m;
  f->order_ = static_cast<std::uint32_t>(order);
  f->q_ = 1;
  for (unsigned i = 0; i < s; ++i) f->q_ *= p;
  const unsigned d = s * m;
  f->pow_p_.resize(d);
  for (unsigned i = 0; i < d; ++i) f->pow_p_[i] = i == 0 ? 1 : f->pow_p_[i - 1] * p;

  // Smallest monic irreducible by the integer value of the lower coefficients.
  for (std::uint32_t idx = 0; idx < f->order_; ++idx) {
    std::vector<unsigned> cand = f->digits(idx);
    cand.push_back(1);
    if (is_irreducible_mod_p(cand, p)) {
      f->modulus_ = std::move(cand);
      break;
    }
  }

  // First primitive element in index order.
  const std::uint64_t n1 = f->order_ - 1;
  const auto factors = prime_factors(n1);
  auto poly_pow = [&](std::vector<unsigned> base, std::uint64_t e) {
    std::vector<unsigned> r(d, 0);
    r[0] = 1;
    for (; e; e >>= 1) {
      if (e & 1) r = f->poly_mulmod(r, base);
      base = f->poly_mulmod(base, base);
    }
    return r;
  };
  std::vector<unsigned> one(d, 0);
  one[0] = 1;
  std::vector<unsigned> prim;
  if (n1 == 1) {
    prim = one;
  } else {
    for (std::uint32_t idx = 2; idx < f->order_; ++idx) {
      auto g = f->digits(idx);
      bool ok = true;
      for (auto r : factors) {
        if (poly_pow(g, n1 / r) == one) {
          ok = false;
          break;
        }
      }
      if (ok) {
        prim = g;
        break;
      }
    }
  }

  // Multiplication by the primitive element as an F_p-linear map on digits.
  std::vector<std::vector<unsigned>> mult_cols(d);
  for (unsigned i = 0; i < d; ++i) {
    std::vector<unsigned> zi(d, 0);
    zi[i] = 1;
    mult_cols[i] = f->poly_mulmod(zi, prim);
  }
  f->exp_.resize(n1);
  f->log_.assign(f->order_, 0);
  std::vector<unsigned> cur = one;
  std::vector<std::uint64_t> next(d);
  for (std::uint64_t e = 0; e < n1; ++e) {
    const std::uint32_t idx = f->index_of(cur);
    f->exp_[e] = Elem(idx);
    f->log_[idx] = static_cast<std::uint32_t>(e);
    std::fill(next.begin(), next.end(), 0);
    for (unsigned i = 0; i < d; ++i) {
      if (cur[i] == 0) continue;
      for (unsigned r = 0; r < d; ++r) next[r] += std::uint64_t{cur[i]} * mult_cols[i][r];
    }
    for (unsigned r = 0; r < d; ++r) cur[r] = static_cast<unsigned>(next[r] % p);
  }

  f->neg_.resize(f->order_);
  for (std::uint32_t a = 0; a < f->order_; ++a) {
    auto da = f->digits(a);
    for (auto& c : da) c = (p - c) % p;
    f->neg_[a] = Elem(f->index_of(da));
  }
  if (p != 2 && f->order_ <= kAddTableMaxOrder) {
    f->add_table_.resize(std::size_t{f->order_} * f->order_);
    for (std::uint32_t a = 0; a < f->order_; ++a) {
      auto da = f->digits(a);
      for (std::uint32_t b = 0; b < f->order_; ++b) {
        auto db = f->digits(b);
        for (unsigned i = 0; i < d; ++i) db[i] = (db[i] + da[i]) % p;
        f->add_table_[std::size_t{a} * f->order_ + b] = Elem(f->index_of(db));
      }
    }
  }

  // F_q = {0} ∪ <g^((q^m-1)/(q-1))>.
  const std::uint64_t step = n1 / (f->q_ - 1);
  f->subfield_.push_back(kZero);
  for (std::uint64_t i = 0; i < f->q_ - 1; ++i) f->subfield_.push_back(f->exp(i * step));
  std::sort(f->subfield_.begin(), f->subfield_.end());
  const Elem zeta = f->exp(step);
  for (unsigned j = 0; j < s; ++j) f->subfield_power_basis_.push_back(f->pow(zeta, j));

  // w: first element whose powers w^0..w^(m-1) are F_q-independent, i.e. the
  // products u_j w^i span F_{q^m} over F_p.
  for (std::uint32_t widx = 1; widx < f->order_; ++widx) {
    const Elem w(widx);
    std::vector<std::vector<unsigned>> mat(d, std::vector<unsigned>(d, 0));
    Elem wi = kOne;
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < s; ++j) {
        auto col = f->digits(f->mul(f->subfield_power_basis_[j], wi).v);
        for (unsigned r = 0; r < d; ++r) mat[r][i * s + j] = col[r];
      }
      wi = f->mul(wi, w);
    }
    if (auto inv = invert_mod_p(std::move(mat), p)) {
      f->tower_inverse_ = std::move(*inv);
      Elem b = kOne;
      for (unsigned i = 0; i < m; ++i) {
        f->fq_basis_.push_back(b);
        b = f->mul(b, w);
      }
      break;
    }
  }
  return f;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem(a.v ^ b.v);
  if (!add_table_.empty()) return add_table_[std::size_t{a.v} * order_ + b.v];
  std::uint32_t out = 0, x = a.v, y = b.v;
  for (unsigned i = 0; i < degree(); ++i, x /= p_, y /= p_) {
    out += ((x % p_ + y % p_) % p_) * pow_p_[i];
  }
  return Elem(out);
}

Elem Field::neg(Elem a) const { return neg_[a.v]; }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a.v];
  return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Elem Field::div(Elem a, Elem b) const {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return kOne;
    if (e < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return kZero;
  }
  const std::int64_t n1 = order_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a.v]) * (e % n1)) % n1;
  if (r < 0) r += n1;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::frobenius(Elem a, std::int64_t t) const {
  if (a.v <= 1) return a;
  const std::int64_t d = degree();
  t %= d;
  if (t < 0) t += d;
  const std::uint64_t n1 = order_ - 1;
  std::uint64_t pt = 1;
  for (std::int64_t i = 0; i < t; ++i) pt = (pt * p_) % n1;
  return exp_[mulmod64(log_[a.v], pt, n1)];
}

Elem Field::generator_z() const {
  std::vector<unsigned> z{0, 1};
  auto r = poly_rem(z, modulus_, p_);
  r.resize(degree(), 0);
  return Elem(index_of(r));
}

std::vector<Elem> Field::fq_coords(Elem a) const {
  const auto da = digits(a.v);
  const unsigned d = degree();
  std::vector<unsigned> y(d, 0);
  for (unsigned r = 0; r < d; ++r) {
    std::uint64_t acc = 0;
    for (unsigned c = 0; c < d; ++c) acc += std::uint64_t{tower_inverse_[r][c]} * da[c];
    y[r] = static_cast<unsigned>(acc % p_);
  }
  std::vector<Elem> out(m_, kZero);
  for (unsigned i = 0; i < m_; ++i) {
    Elem c = kZero;
    for (unsigned j = 0; j < s_; ++j) {
      // y is in F_p, whose element with value y has index y.
      c = add(c, mul(Elem(y[i * s_ + j]), subfield_power_basis_[j]));
    }
    out[i] = c;
  }
  return out;
}

Elem Field::from_fq_coords(std::span<const Elem> coords) const {
  Elem acc = kZero;
  for (std::size_t i = 0; i < coords.size() && i < fq_basis_.size(); ++i) {
    acc = add(acc, mul(coords[i], fq_basis_[i]));
  }
  return acc;
}

std::vector<unsigned> Field::coeffs(Elem a) const { return digits(a.v); }

Elem Field::from_coeffs(std::span<const unsigned> c) const {
  if (c.size() > degree()) throw Error(Errc::MalformedInput, "too many coefficients");
  for (auto x : c) {
    if (x >= p_) throw Error(Errc::MalformedInput, "coefficient out of range");
  }
  return Elem(index_of(c));
}

Elem Field::checked(std::uint64_t index) const {
  if (index >= order_) throw Error(Errc::MalformedInput, "element index out of range");
  return Elem(static_cast<std::uint32_t>(index));
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroConjugator: return "ZeroConjugator";
    case Errc::NotEnoughClasses: return "NotEnoughClasses";
    case Errc::InvalidAutomorphism: return "InvalidAutomorphism";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoSolution: return "NoSolution";
    case Errc::ZeroEvaluationParameter: return "ZeroEvaluationParameter";
    case Errc::NonzeroDerivation: return "NonzeroDerivation";
    case Errc::PartExceedsM: return "PartExceedsM";
    case Errc::ConjugacyViolation: return "ConjugacyViolation";
    case Errc::DependentLocators: return "DependentLocators";
    case Errc::ZeroMultiplier: return "ZeroMultiplier";
    case Errc::BadDimension: return "BadDimension";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NontrivialMultipliers: return "NontrivialMultipliers";
    case Errc::LengthClassViolation: return "LengthClassViolation";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NoValidJ: return "NoValidJ";
    case Errc::BadJ: return "BadJ";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::StructureNotFound: return "StructureNotFound";
    case Errc::KernelNotOneDimensional: return "KernelNotOneDimensional";
    case Errc::IntersectionNotOneDimensional: return "IntersectionNotOneDimensional";
    case Errc::DegenerateSolution: return "DegenerateSolution";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::UnsupportedRegime: return "UnsupportedRegime";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace sumrank
