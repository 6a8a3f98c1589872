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

#include <optional>
#include <string>

#include "sfc/error.hpp"
#include "sfc/matrix.hpp"
#include "sfc/numeric.hpp"
#include "sfc/scalar.hpp"

namespace sfc {

enum class Canon2Tag { X2, YX, JORDAN, Q };

inline std::string to_string(Canon2Tag t) {
  switch (t) {
    case Canon2Tag::X2: return "X2";
    case Canon2Tag::YX: return "YX";
    case Canon2Tag::JORDAN: return "JORDAN";
    case Canon2Tag::Q: return "Q";
  }
  return "?";
}

/// Congruence-with-scale class of a nonzero 2x2 matrix. `q` is set iff tag is Q.
struct Canon2Label {
  Canon2Tag tag = Canon2Tag::X2;
  std::optional<Scalar> q;

  static Canon2Label x2() { return {Canon2Tag::X2, std::nullopt}; }
  static Canon2Label yx() { return {Canon2Tag::YX, std::nullopt}; }
  static Canon2Label jordan() { return {Canon2Tag::JORDAN, std::nullopt}; }
  static Canon2Label m_q(Scalar q) {
    if (q.is_zero()) fail(ErrorKind::InvalidParameter, "q must be nonzero");
    return {Canon2Tag::Q, std::move(q)};
  }
};

/// Exact equality of q as an unordered pair {q, 1/q}.
inline bool same_q_pair(const Scalar& p, const Scalar& q) { return p == q || p * q == Scalar(1); }

inline bool same_class(const Canon2Label& a, const Canon2Label& b) {
  if (a.tag != b.tag) return false;
  return a.tag != Canon2Tag::Q || same_q_pair(*a.q, *b.q);
}

/// M_{x^2}, M_{yx}, M_J, M_q.
inline Mat2 literal(const Canon2Label& l) {
  switch (l.tag) {
    case Canon2Tag::X2: return Mat2{{1, 0}, {0, 0}};
    case Canon2Tag::YX: return Mat2{{0, 0}, {1, 0}};
    case Canon2Tag::JORDAN: return Mat2{{0, -1}, {1, 1}};
    case Canon2Tag::Q: return Mat2{{0, -1}, {*l.q, 0}};
  }
  fail(ErrorKind::Internal, "unknown label");
}

// ---------------------------------------------------------------------------
// HS-blocks

enum class HSKind { J, Gamma, H };

struct HSBlock {
  HSKind kind;
  std::size_t size;
  Scalar parameter;
  DynMatrix matrix;
};

namespace detail {

inline DynMatrix jordan_block(std::size_t n, const Scalar& lambda) {
  DynMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = lambda;
    if (i + 1 < n) m(i, i + 1) = Scalar(1);
  }
  return m;
}

}  // namespace detail

/// J_n(lambda), Gamma_n or H_{2n}(mu). For H, `size` is the full size 2n.
inline HSBlock hs_block(HSKind kind, std::size_t size, const Scalar& parameter = Scalar()) {
  if (size == 0) fail(ErrorKind::InvalidParameter, "block size must be positive");
  switch (kind) {
    case HSKind::J: return {kind, size, parameter, detail::jordan_block(size, parameter)};
    case HSKind::Gamma: {
      const std::size_t n = size;
      DynMatrix m(n);
      for (std::size_t i = 1; i <= n; ++i) {
        const Scalar v((n - i) % 2 == 0 ? 1 : -1);
        m(i - 1, n - i) = v;
        if (i >= 2) m(i - 1, n + 1 - i) = v;
      }
      return {kind, size, Scalar(), std::move(m)};
    }
    case HSKind::H: {
      if (size % 2 != 0) fail(ErrorKind::InvalidParameter, "H block size must be even");
      const std::size_t n = size / 2;
      const Scalar forbidden(n % 2 == 1 ? 1 : -1);
      if (parameter.is_zero() || parameter == forbidden)
        fail(ErrorKind::InvalidParameter, "mu must differ from 0 and (-1)^(n+1)");
      DynMatrix m(size);
      DynMatrix j = detail::jordan_block(n, parameter);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, n + i) = Scalar(1);
        for (std::size_t k = 0; k < n; ++k) m(n + i, k) = j(i, k);
      }
      return {kind, size, parameter, std::move(m)};
    }
  }
  fail(ErrorKind::Internal, "unknown block kind");
}

// ---------------------------------------------------------------------------
// Invariants and canonicalization

/// det(S) / a^2 for M = S + a*[[0,-1],[1,0]], S symmetric.
inline Scalar kappa(const Mat2& m) {
  const Scalar a = (m(1, 0) - m(0, 1)) / Scalar(2);
  if (a.is_zero()) fail(ErrorKind::AntisymmetricPartZero, "kappa needs a nonzero antisymmetric part");
  const Scalar r = (m(0, 1) + m(1, 0)) / Scalar(2);
  return (m(0, 0) * m(1, 1) - r * r) / (a * a);
}

/// Deterministic member of {q, 1/q}: |q| > 1, or on the unit circle Im q >= 0.
inline bool is_q_representative(const Scalar& q) {
  constexpr mpfr_prec_t kPrec = 256;
  const numeric::BigComplex v = evaluate(q, kPrec);
  const numeric::BigFloat m2 = v.re * v.re + v.im * v.im;
  const numeric::BigFloat one(mpq_class(1), kPrec);
  const numeric::BigFloat tol = numeric::BigFloat::pow2(-170, kPrec);
  const numeric::BigFloat diff = m2 - one;
  if (diff > tol) return true;
  if (diff < -tol) return false;
  return !(v.im < -tol);
}

inline Scalar q_representative(const Scalar& q) { return is_q_representative(q) ? q : q.inverse(); }

struct Canon2Result {
  Canon2Label label;
  Mat2 P;
  Scalar alpha;
};

namespace detail {

inline const Mat2& swap2() {
  static const Mat2 s{{0, 1}, {1, 0}};
  return s;
}

inline Canon2Result finish_canon2(Canon2Label label, Mat2 p, Scalar alpha, const Mat2& m) {
  if (!(alpha * (p.transpose() * m * p) == literal(label)))
    fail(ErrorKind::Internal, "2x2 congruence witness failed verification");
  return {std::move(label), std::move(p), std::move(alpha)};
}

}  // namespace detail

/// Label, P and alpha with alpha * P^T M P equal to the label's literal matrix.
inline Canon2Result canon2(const Mat2& m) {
  if (m.is_zero()) fail(ErrorKind::ZeroMatrix, "matrix is zero");
  const Scalar a = (m(1, 0) - m(0, 1)) / Scalar(2);
  const Scalar p = m(0, 0), t = m(1, 1);
  const Scalar r = (m(0, 1) + m(1, 0)) / Scalar(2);
  const bool s_zero = p.is_zero() && t.is_zero() && r.is_zero();
  const Scalar det_s = p * t - r * r;

  if (s_zero) return detail::finish_canon2(Canon2Label::m_q(Scalar(1)), Mat2::identity(), a.inverse(), m);

  if (det_s.is_zero()) {
    if (a.is_zero()) {
      if (!p.is_zero()) return detail::finish_canon2(Canon2Label::x2(), Mat2{{1, -r / p}, {0, 1}}, p.inverse(), m);
      return detail::finish_canon2(Canon2Label::x2(), detail::swap2(), t.inverse(), m);
    }
    // Kernel vector of S first, then scale it against the antisymmetric part.
    Mat2 p0 = Mat2::identity();
    Scalar t1 = t;
    if (!p.is_zero()) {
      p0 = Mat2{{-r / p, 1}, {1, 0}};
      t1 = p;
    }
    const Scalar s1 = t1 / (a * det(p0));
    return detail::finish_canon2(Canon2Label::jordan(), p0 * Mat2{{s1, 0}, {0, 1}}, t1.inverse(), m);
  }

  // Nondegenerate S: a basis of S-isotropic vectors.
  const Mat2 s{{p, r}, {r, t}};
  Vec2 v, w;
  bool normalize = true;
  if (p.is_zero() && t.is_zero()) {
    v = {1, 0};
    w = {0, 1};
    normalize = false;
  } else if (!t.is_zero()) {
    const Scalar d = sqrt_extend(r * r - p * t);
    v = {1, (-r + d) / t};
    w = {1, (-r - d) / t};
  } else {
    v = {1, -p / (Scalar(2) * r)};
    w = {0, 1};
  }
  const auto bilinear = [&](const Vec2& x, const Vec2& y) {
    const Vec2 sy = s * y;
    return x[0] * sy[0] + x[1] * sy[1];
  };
  if (normalize) w = (-bilinear(v, w).inverse()) * w;
  Mat2 pm{{v[0], w[0]}, {v[1], w[1]}};
  const Scalar c = bilinear(v, w);
  const Scalar ad = a * det(pm);
  Scalar m12 = c - ad, m21 = c + ad;
  if (m12.is_zero()) return detail::finish_canon2(Canon2Label::yx(), pm, m21.inverse(), m);
  if (m21.is_zero()) return detail::finish_canon2(Canon2Label::yx(), pm * detail::swap2(), m12.inverse(), m);
  Scalar q = -m21 / m12;
  if (!is_q_representative(q)) {
    pm = pm * detail::swap2();
    std::swap(m12, m21);
    q = -m21 / m12;
  }
  return detail::finish_canon2(Canon2Label::m_q(q), pm, -m12.inverse(), m);
}

/// P^T L P == L for the label's literal matrix L.
inline bool stab_membership(const Canon2Label& label, const Mat2& p) {
  if (det(p).is_zero()) fail(ErrorKind::SingularMatrix, "P is singular");
  const Mat2 l = literal(label);
  return p.transpose() * l * p == l;
}

}  // namespace sfc
