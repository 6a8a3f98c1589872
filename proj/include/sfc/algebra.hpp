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

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sfc/error.hpp"
#include "sfc/matrix.hpp"
#include "sfc/ncpoly.hpp"
#include "sfc/ncrewrite.hpp"
#include "sfc/polyio.hpp"
#include "sfc/sfcanon.hpp"

namespace sfc {

// ---------------------------------------------------------------------------
// Two-generator algebras k<x, y | f>

enum class AlgebraName { OQ, WEYL_Q, JORDAN, JORDAN1, U, KX, RX2, RX2M1, RYX, S };

inline std::string to_string(AlgebraName n) {
  switch (n) {
    case AlgebraName::OQ: return "OQ";
    case AlgebraName::WEYL_Q: return "WEYL_Q";
    case AlgebraName::JORDAN: return "JORDAN";
    case AlgebraName::JORDAN1: return "JORDAN1";
    case AlgebraName::U: return "U";
    case AlgebraName::KX: return "KX";
    case AlgebraName::RX2: return "RX2";
    case AlgebraName::RX2M1: return "RX2M1";
    case AlgebraName::RYX: return "RYX";
    case AlgebraName::S: return "S";
  }
  return "?";
}

struct AlgebraClass {
  AlgebraName name = AlgebraName::RX2;
  std::optional<Scalar> q;  ///< set for OQ and WEYL_Q
  bool via_v = false;       ///< reached through the VFORM canonical matrix
};

/// Same name and the same unordered pair {q, 1/q}; via_v is ignored.
inline bool same_algebra(const AlgebraClass& a, const AlgebraClass& b) {
  if (a.name != b.name) return false;
  return !a.q || same_q_pair(*a.q, *b.q);
}

inline AlgebraClass algebra_of(const CanonicalClass& c) {
  switch (c.tag) {
    case FormTag::X2: return {AlgebraName::RX2, std::nullopt};
    case FormTag::X2_MINUS1: return {AlgebraName::RX2M1, std::nullopt};
    case FormTag::KX: return {AlgebraName::KX, std::nullopt};
    case FormTag::JORDAN: return {AlgebraName::JORDAN, std::nullopt};
    case FormTag::JORDAN1: return {AlgebraName::JORDAN1, std::nullopt};
    case FormTag::VFORM: return {AlgebraName::U, std::nullopt, true};
    case FormTag::YX: return {AlgebraName::RYX, std::nullopt};
    case FormTag::S: return {AlgebraName::S, std::nullopt};
    case FormTag::QPLANE: return {AlgebraName::OQ, c.q};
    case FormTag::QWEYL: return {AlgebraName::WEYL_Q, c.q};
    case FormTag::UFORM: return {AlgebraName::U, std::nullopt};
  }
  fail(ErrorKind::Internal, "unknown form tag");
}

struct Classification {
  AlgebraClass algebra;
  Canonicalization canon;
};

inline Classification classify_detailed(const StdFormMatrix& m) {
  Canonicalization c = sf_canonicalize(m);
  AlgebraClass a = algebra_of(c.cls);
  return {std::move(a), std::move(c)};
}

inline Classification classify_detailed(const NCPoly& f) { return classify_detailed(poly_to_matrix(f)); }

inline AlgebraClass classify(const NCPoly& f) { return classify_detailed(f).algebra; }

// ---------------------------------------------------------------------------
// The non-affine isomorphism between U and V

/// Phi: U -> V on generators, X -> -y, Y -> x + y^2 (U's generators written x, y).
inline LetterMap phi_u_to_v() { return {{'x', parse_poly("-y")}, {'y', parse_poly("x + y^2")}}; }
/// Psi: V -> U on generators, x -> Y - X^2, y -> -X.
inline LetterMap psi_v_to_u() { return {{'x', parse_poly("y - x^2")}, {'y', parse_poly("-x")}}; }

inline NCPoly u_relation() { return parse_poly("yx - xy + y"); }
inline NCPoly v_relation() { return parse_poly("yx - xy + y^2 + x"); }

struct BridgeCheck {
  bool u_system_confluent = false;
  bool v_system_confluent = false;
  bool phi_maps_relation = false;  ///< Phi(U relation) reduces to 0 modulo V
  bool psi_maps_relation = false;  ///< Psi(V relation) reduces to 0 modulo U
  bool psi_phi_identity = false;   ///< Psi(Phi(g)) reduces to g for both generators
  bool phi_psi_identity = false;

  bool ok() const {
    return u_system_confluent && v_system_confluent && phi_maps_relation && psi_maps_relation && psi_phi_identity &&
           phi_psi_identity;
  }
};

/// Machine check that Phi and Psi are mutually inverse algebra maps.
inline BridgeCheck verify_uv_bridge(int degree_bound = 6) {
  const RewriteSystem u = builtin_fixture("u"), v = builtin_fixture("v");
  const LetterMap phi = phi_u_to_v(), psi = psi_v_to_u();
  BridgeCheck b;
  b.u_system_confluent = confluence_smoke(u, degree_bound);
  b.v_system_confluent = confluence_smoke(v, degree_bound);
  b.phi_maps_relation = reduce(substitute(phi, u_relation()), v, degree_bound).is_zero();
  b.psi_maps_relation = reduce(substitute(psi, v_relation()), u, degree_bound).is_zero();
  b.psi_phi_identity = true;
  b.phi_psi_identity = true;
  for (char g : {'x', 'y'}) {
    const NCPoly gen = NCPoly::letter(g);
    b.psi_phi_identity &= reduce(substitute(psi, substitute(phi, gen)) - gen, u, degree_bound).is_zero();
    b.phi_psi_identity &= reduce(substitute(phi, substitute(psi, gen)) - gen, v, degree_bound).is_zero();
  }
  return b;
}

enum class IsoEvidence { None, Affine, Bridge };

struct IsoResult {
  bool isomorphic = false;
  IsoEvidence evidence = IsoEvidence::None;
  std::optional<SfWitness> witness;  ///< affine: verify_witness(M_f, M_g, *witness)
};

/// Isomorphism of k<x,y|f> and k<x,y|g>: an sf-congruence witness, or the
/// verified Phi/Psi bridge when exactly one side canonicalizes to VFORM.
inline IsoResult iso_check(const NCPoly& f, const NCPoly& g) {
  const StdFormMatrix mf = poly_to_matrix(f), mg = poly_to_matrix(g);
  if (auto r = sf_congruent(mf, mg); r.congruent) return {true, IsoEvidence::Affine, r.witness};
  const AlgebraClass a = algebra_of(sf_canonicalize(mf).cls);
  const AlgebraClass b = algebra_of(sf_canonicalize(mg).cls);
  if (a.name == AlgebraName::U && b.name == AlgebraName::U && a.via_v != b.via_v) {
    if (!verify_uv_bridge().ok()) fail(ErrorKind::Internal, "U/V bridge failed verification");
    return {true, IsoEvidence::Bridge, std::nullopt};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Homogenizations k<x, y, z | xz - zx, yz - zy, f_h>

/// X and Y encode xz - zx and yz - zy; M is the defining matrix of f_h.
struct HTriple {
  Mat3 X;
  Mat3 Y;
  StdFormMatrix M;
};

inline Mat3 commutator_matrix_x() { return Mat3{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}; }
inline Mat3 commutator_matrix_y() { return Mat3{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}; }

inline HTriple homogenize(const StdFormMatrix& m) { return {commutator_matrix_x(), commutator_matrix_y(), m}; }
inline HTriple homogenize(const NCPoly& f) { return homogenize(poly_to_matrix(f)); }

inline NCPoly homogenized_relation(const HTriple& t) { return homogenized_poly(t.M); }

enum class HName { H_OQ, H_WEYL, H_JORDAN, H_SJORDAN, H_ENV, H_ENVV, H_X2, H_SX2, H_YX, H_OS, H_KX };

inline std::string to_string(HName n) {
  switch (n) {
    case HName::H_OQ: return "H_OQ";
    case HName::H_WEYL: return "H_WEYL";
    case HName::H_JORDAN: return "H_JORDAN";
    case HName::H_SJORDAN: return "H_SJORDAN";
    case HName::H_ENV: return "H_ENV";
    case HName::H_ENVV: return "H_ENVV";
    case HName::H_X2: return "H_X2";
    case HName::H_SX2: return "H_SX2";
    case HName::H_YX: return "H_YX";
    case HName::H_OS: return "H_OS";
    case HName::H_KX: return "H_KX";
  }
  return "?";
}

struct HClass {
  HName name = HName::H_X2;
  std::optional<Scalar> q;  ///< set for H_OQ and H_WEYL
};

inline bool same_h_class(const HClass& a, const HClass& b) {
  if (a.name != b.name) return false;
  return !a.q || same_q_pair(*a.q, *b.q);
}

inline HClass h_class_of(const CanonicalClass& c) {
  switch (c.tag) {
    case FormTag::X2: return {HName::H_X2, std::nullopt};
    case FormTag::X2_MINUS1: return {HName::H_SX2, std::nullopt};
    case FormTag::KX: return {HName::H_KX, std::nullopt};
    case FormTag::JORDAN: return {HName::H_JORDAN, std::nullopt};
    case FormTag::JORDAN1: return {HName::H_SJORDAN, std::nullopt};
    case FormTag::VFORM: return {HName::H_ENVV, std::nullopt};
    case FormTag::YX: return {HName::H_YX, std::nullopt};
    case FormTag::S: return {HName::H_OS, std::nullopt};
    case FormTag::QPLANE: return {HName::H_OQ, c.q};
    case FormTag::QWEYL: return {HName::H_WEYL, c.q};
    case FormTag::UFORM: return {HName::H_ENV, std::nullopt};
  }
  fail(ErrorKind::Internal, "unknown form tag");
}

inline HClass classify_h(const HTriple& t) {
  if (!(t.X == commutator_matrix_x()) || !(t.Y == commutator_matrix_y()))
    fail(ErrorKind::InvalidParameter, "triple does not carry the central-z commutation matrices");
  return h_class_of(sf_canonicalize(t.M).cls);
}

struct LinearCombination {
  bool ok = false;
  Scalar r, s;    ///< r U + s V = X
  Scalar r2, s2;  ///< r2 U + s2 V = Y
};

/// Writes X and Y as combinations of U = P^T X P and V = P^T Y P.
inline LinearCombination xy_linear_combination_check(const PAffine& p) {
  const Mat3 pm = p.to_mat3();
  const Mat3 x = commutator_matrix_x(), y = commutator_matrix_y();
  const Mat3 u = pm.transpose() * x * pm, v = pm.transpose() * y * pm;
  // Unknowns (r, s) with r*u(i,2) + s*v(i,2) = target(i,2), i = 0, 1.
  const Scalar d = u(0, 2) * v(1, 2) - u(1, 2) * v(0, 2);
  if (d.is_zero()) fail(ErrorKind::SingularMatrix, "P is singular");
  const auto solve = [&](const Mat3& target, Scalar& r, Scalar& s) {
    r = (target(0, 2) * v(1, 2) - target(1, 2) * v(0, 2)) / d;
    s = (u(0, 2) * target(1, 2) - u(1, 2) * target(0, 2)) / d;
    return r * u + s * v == target;
  };
  LinearCombination out;
  const bool ok_x = solve(x, out.r, out.s);
  const bool ok_y = solve(y, out.r2, out.s2);
  out.ok = ok_x && ok_y;
  return out;
}

// ---------------------------------------------------------------------------
// Quantum affine spaces

inline constexpr std::size_t kMaxQasDimension = 8;

/// q_ii = 1 and q_ij q_ji = 1.
inline bool is_multiplicatively_antisymmetric(const DynMatrix& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!(q(i, i) == Scalar(1))) return false;
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (!(q(i, j) * q(j, i) == Scalar(1))) return false;
  }
  return true;
}

/// Some sigma in S_n with p_ij = q_{sigma(i) sigma(j)}, found by exhaustion.
inline std::optional<std::vector<std::size_t>> qas_iso(const DynMatrix& p, const DynMatrix& q) {
  for (const DynMatrix* m : {&p, &q}) {
    if (m->size() > kMaxQasDimension) fail(ErrorKind::DimensionTooLarge, "n must be at most 8");
    if (!is_multiplicatively_antisymmetric(*m))
      fail(ErrorKind::NotMultiplicativelyAntisymmetric, "parameter matrix is not multiplicatively antisymmetric");
  }
  if (p.size() != q.size()) return std::nullopt;
  const std::size_t n = p.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      for (std::size_t j = 0; j < n && match; ++j) match = p(i, j) == q(sigma[i], sigma[j]);
    if (match) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

}  // namespace sfc
