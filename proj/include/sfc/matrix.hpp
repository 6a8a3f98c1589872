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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "sfc/error.hpp"
#include "sfc/scalar.hpp"

namespace sfc {

template <std::size_t N>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    if (rows.size() != N) fail(ErrorKind::InvalidParameter, "wrong number of rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) fail(ErrorKind::InvalidParameter, "wrong number of columns");
      std::size_t j = 0;
      for (const auto& v : row) a_[i * N + j++] = v;
      ++i;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Scalar(1);
    return m;
  }

  static constexpr std::size_t size() { return N; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

  SquareMatrix transpose() const {
    SquareMatrix t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Scalar s;
        for (std::size_t k = 0; k < N; ++k)
          if (!x(i, k).is_zero() && !y(k, j).is_zero()) s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend SquareMatrix operator*(const Scalar& c, const SquareMatrix& x) {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = c * x.a_[k];
    return r;
  }

  /// Entrywise exact equality.
  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
    for (std::size_t k = 0; k < N * N; ++k)
      if (!(x.a_[k] == y.a_[k])) return false;
    return true;
  }

 private:
  std::array<Scalar, N * N> a_{};
};

using Mat2 = SquareMatrix<2>;
using Mat3 = SquareMatrix<3>;
using Vec2 = std::array<Scalar, 2>;

inline Scalar det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Scalar det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline Mat2 inverse(const Mat2& m) {
  Scalar d = det(m);
  if (d.is_zero()) fail(ErrorKind::SingularMatrix, "matrix is not invertible");
  Scalar inv = d.inverse();
  return Mat2{{m(1, 1) * inv, -m(0, 1) * inv}, {-m(1, 0) * inv, m(0, 0) * inv}};
}

inline Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a) { return {-a[0], -a[1]}; }
inline Vec2 operator*(const Scalar& c, const Vec2& v) { return {c * v[0], c * v[1]}; }
inline bool equal(const Vec2& a, const Vec2& b) { return a[0] == b[0] && a[1] == b[1]; }

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<N>& m) {
  os << "[";
  for (std::size_t i = 0; i < N; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

/// Square matrix of runtime size, for HS-blocks and parameter matrices.
class DynMatrix {
 public:
  DynMatrix() = default;
  explicit DynMatrix(std::size_t n) : n_(n), a_(n * n) {}
  DynMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()), a_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) fail(ErrorKind::InvalidParameter, "matrix is not square");
      std::size_t j = 0;
      for (const auto& v : row) a_[i * n_ + j++] = v;
      ++i;
    }
  }

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend bool operator==(const DynMatrix& x, const DynMatrix& y) {
    if (x.n_ != y.n_) return false;
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      if (!(x.a_[k] == y.a_[k])) return false;
    return true;
  }

  template <std::size_t N>
  SquareMatrix<N> fixed() const {
    if (n_ != N) fail(ErrorKind::InvalidParameter, "size mismatch");
    SquareMatrix<N> m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

// ---------------------------------------------------------------------------
// Standard-form matrices and the affine group

/// A matrix of the G3 shape: [[M1, M2], [0, m]] with M1 != 0. This is the
/// unique defining matrix of a quadratic polynomial in x, y.
class StdFormMatrix {
 public:
  StdFormMatrix(Mat2 homogeneous, Vec2 linear, Scalar constant)
      : homogeneous_(std::move(homogeneous)), linear_(std::move(linear)), constant_(std::move(constant)) {
    if (homogeneous_.is_zero()) fail(ErrorKind::ZeroHomogeneousBlock, "polynomial has no degree-two part");
  }
  explicit StdFormMatrix(Mat2 homogeneous) : StdFormMatrix(std::move(homogeneous), Vec2{}, Scalar()) {}

  const Mat2& homogeneous() const { return homogeneous_; }
  const Vec2& linear() const { return linear_; }
  const Scalar& constant() const { return constant_; }

  Mat3 to_mat3() const {
    Mat3 m;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = homogeneous_(i, j);
      m(i, 2) = linear_[i];
    }
    m(2, 2) = constant_;
    return m;
  }

  friend bool operator==(const StdFormMatrix& a, const StdFormMatrix& b) {
    return a.homogeneous_ == b.homogeneous_ && equal(a.linear_, b.linear_) && a.constant_ == b.constant_;
  }

 private:
  Mat2 homogeneous_;
  Vec2 linear_;
  Scalar constant_;
};

inline std::ostream& operator<<(std::ostream& os, const StdFormMatrix& m) { return os << m.to_mat3(); }

/// sf: fold the lower-left block into the last column.
inline StdFormMatrix sf_map(const Mat3& m) {
  Mat2 h{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
  return StdFormMatrix(std::move(h), Vec2{m(0, 2) + m(2, 0), m(1, 2) + m(2, 1)}, m(2, 2));
}

/// Element of P3: [[P1, P2], [0, 1]] with P1 invertible.
class PAffine {
 public:
  explicit PAffine(Mat2 linear_part, Vec2 translation = {})
      : linear_(std::move(linear_part)), translation_(std::move(translation)) {
    if (det(linear_).is_zero()) fail(ErrorKind::SingularMatrix, "linear part of affine map is singular");
  }

  static PAffine identity() { return PAffine(Mat2::identity()); }
  static PAffine translation(Vec2 t) { return PAffine(Mat2::identity(), std::move(t)); }

  const Mat2& linear_part() const { return linear_; }
  const Vec2& translation() const { return translation_; }

  Mat3 to_mat3() const {
    Mat3 m;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = linear_(i, j);
      m(i, 2) = translation_[i];
    }
    m(2, 2) = Scalar(1);
    return m;
  }

  bool is_identity() const {
    return linear_ == Mat2::identity() && translation_[0].is_zero() && translation_[1].is_zero();
  }

  friend bool operator==(const PAffine& a, const PAffine& b) {
    return a.linear_ == b.linear_ && equal(a.translation_, b.translation_);
  }

 private:
  Mat2 linear_;
  Vec2 translation_;
};

/// (P1, P2)(P1', P2') = (P1 P1', P1 P2' + P2)
inline PAffine p_compose(const PAffine& p, const PAffine& q) {
  return PAffine(p.linear_part() * q.linear_part(), p.linear_part() * q.translation() + p.translation());
}

inline PAffine p_invert(const PAffine& p) {
  Mat2 inv = inverse(p.linear_part());
  return PAffine(inv, -(inv * p.translation()));
}

/// alpha * P^T M P with P embedded as a 3x3 matrix.
inline Mat3 congruence_apply(const PAffine& p, const Mat3& m, const Scalar& alpha) {
  if (alpha.is_zero()) fail(ErrorKind::ZeroScale, "congruence scale must be nonzero");
  Mat3 pm = p.to_mat3();
  return alpha * (pm.transpose() * m * pm);
}

// ---------------------------------------------------------------------------
// Polynomial coefficients

/// f = xx*x^2 + xy*xy + yx*yx + yy*y^2 + x*x + y*y + one.
struct QuadraticCoeffs {
  Scalar xx, xy, yx, yy, x, y, one;
};

inline StdFormMatrix to_std_form(const QuadraticCoeffs& c) {
  if (c.xx.is_zero() && c.xy.is_zero() && c.yx.is_zero() && c.yy.is_zero())
    fail(ErrorKind::DegreeTooLow, "polynomial has no degree-two part");
  return StdFormMatrix(Mat2{{c.xx, c.xy}, {c.yx, c.yy}}, Vec2{c.x, c.y}, c.one);
}

inline QuadraticCoeffs to_coeffs(const StdFormMatrix& m) {
  const Mat2& h = m.homogeneous();
  return {h(0, 0), h(0, 1), h(1, 0), h(1, 1), m.linear()[0], m.linear()[1], m.constant()};
}

}  // namespace sfc
