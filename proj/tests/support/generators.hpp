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

// Random inputs for the property suites. Every generator takes the engine
// explicitly so runs are reproducible from a seed.

#include <random>
#include <vector>

#include "sfc/matrix.hpp"
#include "sfc/ncpoly.hpp"
#include "sfc/scalar.hpp"
#include "sfc/sfcanon.hpp"

namespace sfc::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Scalar small_rational(Rng& rng, int num = 5, int den = 4) {
  return Scalar::fraction(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline Scalar nonzero_rational(Rng& rng, int num = 5, int den = 4) {
  Scalar s;
  do s = small_rational(rng, num, den);
  while (s.is_zero());
  return s;
}

/// Radicals used to build tower elements: sqrt(2), sqrt(-1), sqrt(3), sqrt(1 + sqrt(2)).
inline const std::vector<Scalar>& radical_pool() {
  static const std::vector<Scalar> pool = [] {
    const Scalar r2 = sqrt_extend(2);
    return std::vector<Scalar>{r2, sqrt_extend(-1), sqrt_extend(3), sqrt_extend(Scalar(1) + r2)};
  }();
  return pool;
}

/// A rational, or a combination over one or two pool radicals.
inline Scalar tower_scalar(Rng& rng) {
  const auto& pool = radical_pool();
  Scalar s = small_rational(rng);
  const int kind = uniform(rng, 0, 3);
  if (kind >= 1) s += small_rational(rng) * pool[uniform(rng, 0, 3)];
  if (kind >= 2) s += small_rational(rng) * pool[uniform(rng, 0, 3)] * pool[uniform(rng, 0, 2)];
  return s;
}

inline Scalar nonzero_tower_scalar(Rng& rng) {
  Scalar s;
  do s = tower_scalar(rng);
  while (s.is_zero());
  return s;
}

inline Mat2 small_mat2(Rng& rng, int bound = 3) {
  return Mat2{{uniform(rng, -bound, bound), uniform(rng, -bound, bound)},
              {uniform(rng, -bound, bound), uniform(rng, -bound, bound)}};
}

inline Mat2 invertible_mat2(Rng& rng, int bound = 3) {
  Mat2 m;
  do m = small_mat2(rng, bound);
  while (det(m).is_zero());
  return m;
}

inline Mat3 small_mat3(Rng& rng, int bound = 3) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = small_rational(rng, bound, 2);
  return m;
}

inline PAffine small_paffine(Rng& rng, int bound = 3) {
  return PAffine(invertible_mat2(rng, bound), Vec2{uniform(rng, -bound, bound), uniform(rng, -bound, bound)});
}

/// Standard-form matrix over small rationals. Sparse entries are favoured so
/// that every canonical class occurs.
inline StdFormMatrix small_std_form(Rng& rng) {
  const auto entry = [&] { return uniform(rng, 0, 2) == 0 ? Scalar() : small_rational(rng, 3, 2); };
  Mat2 h;
  do h = Mat2{{entry(), entry()}, {entry(), entry()}};
  while (h.is_zero());
  return StdFormMatrix(h, Vec2{entry(), entry()}, entry());
}

inline Scalar small_nonzero_scale(Rng& rng) { return nonzero_rational(rng, 5, 5); }

inline NCPoly random_ncpoly(Rng& rng, int max_degree = 3, int max_terms = 5, bool radicals = true) {
  NCPoly p;
  const int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int d = uniform(rng, 0, max_degree);
    for (int k = 0; k < d; ++k) w += "xyz"[uniform(rng, 0, 2)];
    p.add_term(w, radicals ? tower_scalar(rng) : small_rational(rng));
  }
  return p;
}

}  // namespace sfc::testing
