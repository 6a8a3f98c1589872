// Copyright 2026 The sfcanon Authors
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

#pragma once

// Exact arithmetic in towers of quadratic extensions Q(sqrt s1)(sqrt s2)...
//
// An element of a tower of depth k is stored as 2^k rational coefficients in
// the basis of square-free products of the level generators: coefficient index
// `mask` multiplies prod_{i in mask} sqrt(s_{i+1}). Splitting the vector in
// halves gives the recursive pair view (a, b) meaning a + b*sqrt(s_k).
//
// Every level radicand is checked to be a non-square before the level is
// admitted, so the basis is linearly independent and zero tests are exact.
// Each level also records a numeric reference value for its generator; that
// value fixes which of the two complex square roots the generator denotes.

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfc/error.hpp"
#include "sfc/numeric.hpp"

namespace sfc {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxTowerDepth = 4;
inline constexpr mpfr_prec_t kReferencePrecision = 320;

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// One quadratic level over `parent` (nullptr parent means Q).
class Tower {
 public:
  Tower(TowerPtr parent, std::vector<Rational> radicand, numeric::BigComplex reference_root)
      : parent_(std::move(parent)),
        depth_(parent_ ? parent_->depth() + 1 : 1),
        radicand_(std::move(radicand)),
        reference_root_(std::move(reference_root)) {}

  const TowerPtr& parent() const { return parent_; }
  int depth() const { return depth_; }
  /// Coefficients of the radicand over `parent()`.
  const std::vector<Rational>& radicand() const { return radicand_; }
  const numeric::BigComplex& reference_root() const { return reference_root_; }

 private:
  TowerPtr parent_;
  int depth_;
  std::vector<Rational> radicand_;
  numeric::BigComplex reference_root_;
};

inline int depth_of(const Tower* t) { return t ? t->depth() : 0; }
inline int depth_of(const TowerPtr& t) { return depth_of(t.get()); }

namespace detail {

inline bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

inline bool same_tower(const Tower* a, const Tower* b) {
  while (true) {
    if (a == b) return true;
    if (!a || !b || a->depth() != b->depth()) return false;
    if (a->radicand() != b->radicand()) return false;
    a = a->parent().get();
    b = b->parent().get();
  }
}

/// True when `a` is (structurally) an initial segment of `b`.
inline bool is_prefix(const Tower* a, const Tower* b) {
  int da = depth_of(a);
  int db = depth_of(b);
  if (da > db) return false;
  while (db > da) {
    b = b->parent().get();
    --db;
  }
  return same_tower(a, b);
}

using Coeffs = std::vector<Rational>;

inline Coeffs add(std::span<const Rational> a, std::span<const Rational> b) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Coeffs sub(std::span<const Rational> a, std::span<const Rational> b) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Coeffs mul(const Tower* t, std::span<const Rational> a, std::span<const Rational> b) {
  if (!t) return Coeffs{a[0] * b[0]};
  const std::size_t h = a.size() / 2;
  auto alo = a.first(h), ahi = a.subspan(h), blo = b.first(h), bhi = b.subspan(h);
  const Tower* p = t->parent().get();
  Coeffs lo = add(mul(p, alo, blo), mul(p, mul(p, ahi, bhi), t->radicand()));
  Coeffs hi = add(mul(p, alo, bhi), mul(p, ahi, blo));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

inline Coeffs inv(const Tower* t, std::span<const Rational> a) {
  if (!t) {
    if (sgn(a[0]) == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return Coeffs{1 / a[0]};
  }
  const std::size_t h = a.size() / 2;
  auto lo = a.first(h), hi = a.subspan(h);
  const Tower* p = t->parent().get();
  // (lo + hi r)^-1 = (lo - hi r) / (lo^2 - hi^2 s)
  Coeffs norm = sub(mul(p, lo, lo), mul(p, mul(p, hi, hi), t->radicand()));
  Coeffs ninv = inv(p, norm);
  Coeffs rlo = mul(p, lo, ninv);
  Coeffs rhi = mul(p, hi, ninv);
  for (auto& q : rhi) q = -q;
  rlo.insert(rlo.end(), rhi.begin(), rhi.end());
  return rlo;
}

}  // namespace detail

class Scalar {
 public:
  Scalar() : coeffs_{Rational(0)} {}
  template <std::integral I>
  Scalar(I v) : coeffs_{Rational(static_cast<long>(v))} {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT
  Scalar(TowerPtr tower, std::vector<Rational> coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != (std::size_t{1} << depth_of(tower_)))
      fail(ErrorKind::Internal, "coefficient vector does not match tower depth");
    trim();
  }

  static Scalar fraction(long num, long den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  /// The generator sqrt(s_k) of the top level of `tower`.
  static Scalar generator(const TowerPtr& tower) {
    std::vector<Rational> c(std::size_t{1} << depth_of(tower));
    c[c.size() / 2] = 1;
    return Scalar(tower, std::move(c));
  }

  const TowerPtr& tower() const { return tower_; }
  int depth() const { return depth_of(tower_); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const { return detail::all_zero(coeffs_); }
  bool is_rational() const { return !tower_; }
  const Rational& rational_value() const {
    if (tower_) fail(ErrorKind::Internal, "scalar is not rational");
    return coeffs_[0];
  }

  /// Coefficients over `target`, which must have this scalar's tower as prefix.
  std::vector<Rational> padded(const TowerPtr& target) const {
    std::vector<Rational> c(coeffs_);
    c.resize(std::size_t{1} << depth_of(target));
    return c;
  }

  Scalar operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& q : c) q = -q;
    return Scalar(tower_, std::move(c));
  }

  Scalar inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    return Scalar(tower_, detail::inv(tower_.get(), coeffs_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

 private:
  void trim() {
    while (tower_) {
      const std::size_t h = coeffs_.size() / 2;
      if (!detail::all_zero(std::span<const Rational>(coeffs_).subspan(h))) break;
      coeffs_.resize(h);
      tower_ = tower_->parent();
    }
  }

  TowerPtr tower_;
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Numeric evaluation

namespace detail {

inline std::vector<const Tower*> chain(const Tower* t) {
  std::vector<const Tower*> out;
  for (; t; t = t->parent().get()) out.push_back(t);
  std::reverse(out.begin(), out.end());
  return out;
}

inline numeric::BigComplex combine(std::span<const Rational> c, const std::vector<numeric::BigComplex>& roots,
                                   mpfr_prec_t prec) {
  std::vector<numeric::BigComplex> prod;
  prod.reserve(c.size());
  prod.emplace_back(numeric::BigFloat(Rational(1), prec), numeric::BigFloat(prec));
  for (std::size_t mask = 1; mask < c.size(); ++mask) {
    std::size_t top = 0;
    while ((std::size_t{2} << top) <= mask) ++top;
    prod.push_back(prod[mask & ~(std::size_t{1} << top)] * roots[top]);
  }
  numeric::BigComplex sum(prec);
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    if (sgn(c[mask]) == 0) continue;
    numeric::BigFloat q(c[mask], prec);
    sum = sum + numeric::BigComplex(prod[mask].re * q, prod[mask].im * q);
  }
  return sum;
}

/// Picks the sign of `candidate` closest to `reference`.
inline numeric::BigComplex align(numeric::BigComplex candidate, const numeric::BigComplex& reference) {
  if ((candidate - reference).abs() > (candidate + reference).abs()) return -candidate;
  return candidate;
}

inline std::vector<numeric::BigComplex> level_roots(const Tower* t, mpfr_prec_t prec) {
  std::vector<numeric::BigComplex> roots;
  for (const Tower* level : chain(t)) {
    numeric::BigComplex rad = combine(level->radicand(), roots, prec);
    roots.push_back(align(rad.sqrt(), level->reference_root()));
  }
  return roots;
}

}  // namespace detail

inline numeric::BigComplex evaluate(const Scalar& x, mpfr_prec_t prec) {
  return detail::combine(x.coefficients(), detail::level_roots(x.tower().get(), prec), prec);
}

// ---------------------------------------------------------------------------
// Embedding between towers

namespace detail {

inline Scalar sub_scalar(const TowerPtr& t, std::span<const Rational> c) {
  return Scalar(t, std::vector<Rational>(c.begin(), c.end()));
}

}  // namespace detail

inline std::optional<Scalar> sqrt_in(const Scalar& x, const TowerPtr& target);
inline Scalar embed(const Scalar& x, const TowerPtr& target);
inline TowerPtr unify(const TowerPtr& a, const TowerPtr& b);

/// Chooses the principal branch: positive real part, ties broken by
/// positive imaginary part.
inline Scalar principal(const Scalar& r) {
  numeric::BigComplex v = evaluate(r, kReferencePrecision);
  numeric::BigFloat tol = numeric::BigFloat::hypot(v.re, v.im) * numeric::BigFloat::pow2(-(kReferencePrecision - 48), kReferencePrecision);
  if (v.re > tol) return r;
  if (v.re < -tol) return -r;
  return v.im.sign() >= 0 ? r : -r;
}

/// Embeds `x` into `target`. Every generator of x's tower must have a square
/// root of its radicand inside `target`; the root matching the generator's
/// reference value is used.
inline Scalar embed(const Scalar& x, const TowerPtr& target) {
  if (detail::is_prefix(x.tower().get(), target.get())) return Scalar(target, x.padded(target));
  std::vector<Scalar> images;
  std::vector<const Tower*> levels = detail::chain(x.tower().get());
  for (const Tower* level : levels) {
    Scalar rad = embed(detail::sub_scalar(level->parent(), level->radicand()), target);
    std::optional<Scalar> r = sqrt_in(rad, target);
    if (!r) fail(ErrorKind::NotEmbeddable, "generator has no image in target tower");
    numeric::BigComplex v = evaluate(*r, kReferencePrecision);
    if ((v - level->reference_root()).abs() > (v + level->reference_root()).abs()) *r = -*r;
    images.push_back(std::move(*r));
  }
  std::span<const Rational> c = x.coefficients();
  std::vector<Scalar> prod{Scalar(1)};
  for (std::size_t mask = 1; mask < c.size(); ++mask) {
    std::size_t top = 0;
    while ((std::size_t{2} << top) <= mask) ++top;
    prod.push_back(prod[mask & ~(std::size_t{1} << top)] * images[top]);
  }
  Scalar sum;
  for (std::size_t mask = 0; mask < c.size(); ++mask)
    if (sgn(c[mask]) != 0) sum = sum + prod[mask] * Scalar(c[mask]);
  return Scalar(target, sum.padded(target));
}

/// Smallest extension of `a` (as built here) containing every generator of `b`.
inline TowerPtr unify(const TowerPtr& a, const TowerPtr& b) {
  if (detail::is_prefix(b.get(), a.get())) return a;
  if (detail::is_prefix(a.get(), b.get())) return b;
  TowerPtr common = a;
  for (const Tower* level : detail::chain(b.get())) {
    Scalar rad = embed(detail::sub_scalar(level->parent(), level->radicand()), common);
    if (sqrt_in(rad, common)) continue;
    if (depth_of(common) >= kMaxTowerDepth)
      fail(ErrorKind::TowerDepthExceeded, "common tower needs more than " + std::to_string(kMaxTowerDepth) + " levels");
    common = std::make_shared<const Tower>(common, rad.padded(common), level->reference_root());
  }
  return common;
}

namespace detail {

enum class Op { Add, Sub, Mul };

inline Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  TowerPtr t;
  std::vector<Rational> ca, cb;
  if (same_tower(a.tower().get(), b.tower().get())) {
    t = a.tower();
    ca.assign(a.coefficients().begin(), a.coefficients().end());
    cb.assign(b.coefficients().begin(), b.coefficients().end());
  } else if (is_prefix(a.tower().get(), b.tower().get())) {
    t = b.tower();
    ca = a.padded(t);
    cb.assign(b.coefficients().begin(), b.coefficients().end());
  } else if (is_prefix(b.tower().get(), a.tower().get())) {
    t = a.tower();
    ca.assign(a.coefficients().begin(), a.coefficients().end());
    cb = b.padded(t);
  } else {
    t = unify(a.tower(), b.tower());
    ca = embed(a, t).padded(t);
    cb = embed(b, t).padded(t);
  }
  switch (op) {
    case Op::Add: return Scalar(t, add(ca, cb));
    case Op::Sub: return Scalar(t, sub(ca, cb));
    case Op::Mul: return Scalar(t, mul(t.get(), ca, cb));
  }
  return Scalar();
}

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace detail

inline Scalar operator+(const Scalar& a, const Scalar& b) { return detail::binary(a, b, detail::Op::Add); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return detail::binary(a, b, detail::Op::Sub); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return detail::binary(a, b, detail::Op::Mul); }

/// Square test: some root of `x` inside `target` (x's tower must be a prefix
/// of target), or nothing when x is not a square there. The branch returned is
/// unspecified; callers pick it.
inline std::optional<Scalar> sqrt_in(const Scalar& x, const TowerPtr& target) {
  if (x.is_zero()) return Scalar();
  if (!target) {
    if (!x.is_rational()) fail(ErrorKind::Internal, "sqrt_in target too small");
    if (auto r = detail::rational_sqrt(x.rational_value())) return Scalar(*r);
    return std::nullopt;
  }
  const TowerPtr& parent = target->parent();
  std::vector<Rational> c = x.padded(target);
  const std::size_t h = c.size() / 2;
  Scalar lo = detail::sub_scalar(parent, std::span<const Rational>(c).first(h));
  Scalar hi = detail::sub_scalar(parent, std::span<const Rational>(c).subspan(h));
  Scalar s = detail::sub_scalar(parent, target->radicand());
  Scalar gen = Scalar::generator(target);
  if (hi.is_zero()) {
    if (auto r = sqrt_in(lo, parent)) return r;
    if (auto r = sqrt_in(lo / s, parent)) return *r * gen;
    return std::nullopt;
  }
  // (u + w r)^2 = lo + hi r  with  u^2 = (lo +- sqrt(lo^2 - hi^2 s)) / 2,  w = hi / (2u)
  auto n = sqrt_in(lo * lo - hi * hi * s, parent);
  if (!n) return std::nullopt;
  for (const Scalar& cand : {(lo + *n) / Scalar(2), (lo - *n) / Scalar(2)}) {
    if (cand.is_zero()) continue;
    if (auto u = sqrt_in(cand, parent)) return *u + hi / (Scalar(2) * *u) * gen;
  }
  return std::nullopt;
}

namespace detail {

/// n = f^2 * m with m free of small square factors; exact when |n| < 10^8.
inline std::pair<Integer, Integer> split_square(Integer n) {
  Integer f = 1;
  for (unsigned long d = 2; d < 10000; ++d) {
    const unsigned long d2 = d * d;
    if (Integer(abs(n)) < d2) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d2)) {
      n /= d2;
      f *= d;
    }
  }
  Integer a = abs(n);
  if (a > 1 && mpz_perfect_square_p(a.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    f *= r;
    n /= a;
  }
  return {f, n};
}

inline numeric::BigComplex principal_root_value(const Scalar& s) {
  return evaluate(s, kReferencePrecision).sqrt();
}

}  // namespace detail

/// A square root of `s`, always the principal branch. Stays in s's tower when
/// s is a square there; otherwise adjoins one level with radicand s. Rational
/// radicands are reduced to their square-free part first.
inline Scalar sqrt_extend(const Scalar& s) {
  if (s.is_zero()) return Scalar();
  if (s.is_rational()) {
    const Rational& q = s.rational_value();
    Integer n = q.get_num() * q.get_den();
    auto [f, m] = detail::split_square(n);
    Rational mult(f, q.get_den());
    mult.canonicalize();
    if (m == 1) return Scalar(mult);
    Scalar radicand{Rational(m)};
    auto tower = std::make_shared<const Tower>(nullptr, std::vector<Rational>{Rational(m)},
                                               detail::principal_root_value(radicand));
    return Scalar(mult) * Scalar::generator(tower);
  }
  if (auto r = sqrt_in(s, s.tower())) return principal(*r);
  if (s.depth() >= kMaxTowerDepth)
    fail(ErrorKind::TowerDepthExceeded, "square root would need a tower deeper than " + std::to_string(kMaxTowerDepth));
  auto tower = std::make_shared<const Tower>(s.tower(), s.padded(s.tower()), detail::principal_root_value(s));
  return Scalar::generator(tower);
}

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// ---------------------------------------------------------------------------
// Decimal approximation

/// [lo, hi] * 10^-digits.
struct DecimalInterval {
  Integer lo;
  Integer hi;
  unsigned digits = 0;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational lower() const { return scaled(lo); }
  Rational upper() const { return scaled(hi); }

  static std::string decimal(const Integer& v, unsigned digits) {
    std::string s = Integer(abs(v)).get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (sgn(v) < 0 ? "-" : "") + s;
  }
  std::string str() const { return "[" + decimal(lo, digits) + ", " + decimal(hi, digits) + "]"; }

 private:
  Rational scaled(const Integer& v) const {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    Rational r(v, p);
    r.canonicalize();
    return r;
  }
};

struct ComplexApprox {
  DecimalInterval re;
  DecimalInterval im;

  bool excludes_zero() const { return !re.contains_zero() || !im.contains_zero(); }
  std::string str() const {
    if (sgn(im.lo) == 0 && sgn(im.hi) == 0) return re.str();
    return re.str() + " + " + im.str() + "*i";
  }
};

namespace detail {

inline DecimalInterval exact_interval(const Rational& q, unsigned digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  Rational s = q * p;
  Integer lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return {lo, hi, digits};
}

inline DecimalInterval float_interval(const numeric::BigFloat& v, const numeric::BigFloat& radius, unsigned digits) {
  return {(v - radius).scaled_integer(digits, false), (v + radius).scaled_integer(digits, true), digits};
}

/// Interval for one component, or nothing when more precision is needed. A
/// value sitting on a decimal grid point (e.g. exactly 1) is reported on the
/// next finer grid so the width stays below 10^-digits.
inline std::optional<DecimalInterval> component_interval(const numeric::BigFloat& lo_prec,
                                                         const numeric::BigFloat& hi_prec,
                                                         const numeric::BigFloat& radius, unsigned digits) {
  // Parts that vanish exactly evaluate to +-0 at every precision.
  if (lo_prec.is_zero() && hi_prec.is_zero()) return DecimalInterval{0, 0, digits};
  DecimalInterval iv = float_interval(hi_prec, radius, digits);
  if (Integer(iv.hi - iv.lo) <= 1) return iv;
  DecimalInterval fine = float_interval(hi_prec, radius, digits + 1);
  if (Integer(fine.hi - fine.lo) <= 2) return fine;
  return std::nullopt;
}

}  // namespace detail

/// Display-only enclosure of `s` to `digits` decimals (digits <= 200). The
/// working precision is doubled until two evaluations agree far below the
/// requested resolution.
inline ComplexApprox approx(const Scalar& s, unsigned digits) {
  if (digits > 200) fail(ErrorKind::InvalidParameter, "approx supports at most 200 digits");
  if (s.is_rational()) return {detail::exact_interval(s.rational_value(), digits), DecimalInterval{0, 0, digits}};
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 96;
  for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
    numeric::BigComplex a = evaluate(s, prec);
    numeric::BigComplex b = evaluate(s, 2 * prec);
    numeric::BigFloat rad_re = (a.re - b.re).abs() + (a.re - b.re).abs() + numeric::BigFloat::pow2(-prec, 2 * prec);
    numeric::BigFloat rad_im = (a.im - b.im).abs() + (a.im - b.im).abs() + numeric::BigFloat::pow2(-prec, 2 * prec);
    auto re = detail::component_interval(a.re, b.re, rad_re, digits);
    auto im = detail::component_interval(a.im, b.im, rad_im, digits);
    if (re && im) return {*re, *im};
  }
  fail(ErrorKind::Internal, "approximation did not converge");
}

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace detail

inline std::string to_string(const Scalar& s);

namespace detail {

/// Text of prod_{i in mask} sqrt(s_i) for the tower chain.
inline std::string radical_text(std::size_t mask, const std::vector<const Tower*>& levels) {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(mask & (std::size_t{1} << i))) continue;
    if (!out.empty()) out += "*";
    out += "sqrt(" + to_string(sub_scalar(levels[i]->parent(), levels[i]->radicand())) + ")";
  }
  return out;
}

}  // namespace detail

/// Exact text: sum of rational multiples of radical products, e.g.
/// "5/7 + 4/7*sqrt(2)". Parsing it back yields an equal scalar.
inline std::string to_string(const Scalar& s) {
  std::span<const Rational> c = s.coefficients();
  std::vector<const Tower*> levels = detail::chain(s.tower().get());
  std::string out;
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    const Rational& q = c[mask];
    if (sgn(q) == 0) continue;
    const bool neg = sgn(q) < 0;
    std::string body;
    if (mask == 0) {
      body = detail::rational_text(Rational(abs(q)));
    } else {
      std::string rad = detail::radical_text(mask, levels);
      body = abs(q) == 1 ? rad : detail::rational_text(Rational(abs(q))) + "*" + rad;
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

/// Whether the text form is a single signed product (no top-level + or -).
inline bool is_monomial(const Scalar& s) {
  auto c = s.coefficients();
  return std::count_if(c.begin(), c.end(), [](const Rational& q) { return sgn(q) != 0; }) <= 1;
}

}  // namespace sfc
