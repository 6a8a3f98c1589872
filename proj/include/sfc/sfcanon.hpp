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
#include <random>
#include <string>
#include <utility>

#include "sfc/congruence2.hpp"
#include "sfc/error.hpp"
#include "sfc/matrix.hpp"
#include "sfc/scalar.hpp"

namespace sfc {

enum class FormTag { X2, X2_MINUS1, KX, JORDAN, JORDAN1, VFORM, YX, S, QPLANE, QWEYL, UFORM };

inline constexpr FormTag kAllFormTags[] = {FormTag::X2,     FormTag::X2_MINUS1, FormTag::KX,     FormTag::JORDAN,
                                           FormTag::JORDAN1, FormTag::VFORM,    FormTag::YX,     FormTag::S,
                                           FormTag::QPLANE, FormTag::QWEYL,     FormTag::UFORM};

inline std::string to_string(FormTag t) {
  switch (t) {
    case FormTag::X2: return "X2";
    case FormTag::X2_MINUS1: return "X2_MINUS1";
    case FormTag::KX: return "KX";
    case FormTag::JORDAN: return "JORDAN";
    case FormTag::JORDAN1: return "JORDAN1";
    case FormTag::VFORM: return "VFORM";
    case FormTag::YX: return "YX";
    case FormTag::S: return "S";
    case FormTag::QPLANE: return "QPLANE";
    case FormTag::QWEYL: return "QWEYL";
    case FormTag::UFORM: return "UFORM";
  }
  return "?";
}

inline std::optional<FormTag> form_tag_from_string(const std::string& s) {
  for (FormTag t : kAllFormTags)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

inline bool has_parameter(FormTag t) { return t == FormTag::QPLANE || t == FormTag::QWEYL; }

/// sf-congruence class. `q` is set iff the tag is QPLANE or QWEYL.
struct CanonicalClass {
  FormTag tag = FormTag::X2;
  std::optional<Scalar> q;

  CanonicalClass() = default;
  explicit CanonicalClass(FormTag t, std::optional<Scalar> param = std::nullopt) : tag(t), q(std::move(param)) {
    if (has_parameter(tag) != q.has_value()) fail(ErrorKind::InvalidParameter, "parameter does not match form tag");
    if (q && q->is_zero()) fail(ErrorKind::InvalidParameter, "q must be nonzero");
  }
};

/// Same tag, and q equal as an unordered pair {q, 1/q}.
inline bool same_class(const CanonicalClass& a, const CanonicalClass& b) {
  if (a.tag != b.tag) return false;
  return !a.q || same_q_pair(*a.q, *b.q);
}

/// The literal canonical matrix of a class.
inline StdFormMatrix canonical_matrix(const CanonicalClass& c) {
  const Mat2 x2{{1, 0}, {0, 0}};
  const Mat2 jordan{{0, -1}, {1, 1}};
  const Mat2 yx{{0, 0}, {1, 0}};
  switch (c.tag) {
    case FormTag::X2: return StdFormMatrix(x2);
    case FormTag::X2_MINUS1: return StdFormMatrix(x2, {}, -1);
    case FormTag::KX: return StdFormMatrix(x2, {0, 1}, 0);
    case FormTag::JORDAN: return StdFormMatrix(jordan);
    case FormTag::JORDAN1: return StdFormMatrix(jordan, {}, 1);
    case FormTag::VFORM: return StdFormMatrix(jordan, {1, 0}, 0);
    case FormTag::YX: return StdFormMatrix(yx);
    case FormTag::S: return StdFormMatrix(yx, {}, -1);
    case FormTag::QPLANE: return StdFormMatrix(Mat2{{0, -1}, {*c.q, 0}});
    case FormTag::QWEYL: return StdFormMatrix(Mat2{{0, -1}, {*c.q, 0}}, {}, 1);
    case FormTag::UFORM: return StdFormMatrix(Mat2{{0, -1}, {1, 0}}, {0, 1}, 0);
  }
  fail(ErrorKind::Internal, "unknown form tag");
}

// ---------------------------------------------------------------------------
// Witnesses

/// An affine map and a nonzero scale. Verification is against a specific
/// pair of matrices; see verify_witness.
struct SfWitness {
  PAffine map = PAffine::identity();
  Scalar alpha = Scalar(1);

  SfWitness() = default;
  SfWitness(PAffine p, Scalar a) : map(std::move(p)), alpha(std::move(a)) {
    if (alpha.is_zero()) fail(ErrorKind::ZeroScale, "witness scale must be nonzero");
  }

  static SfWitness identity() { return {}; }

  bool is_identity() const { return map.is_identity() && alpha == Scalar(1); }
};

/// sf(alpha * P^T N P).
inline StdFormMatrix sf_image(const StdFormMatrix& n, const SfWitness& w) {
  return sf_map(congruence_apply(w.map, n.to_mat3(), w.alpha));
}

/// sf(M) == alpha * sf(P^T N P), entrywise exact.
inline bool verify_witness(const StdFormMatrix& m, const StdFormMatrix& n, const SfWitness& w) {
  return sf_image(n, w) == m;
}

/// Throws unless `w` carries N to M.
inline SfWitness certify(const StdFormMatrix& m, const StdFormMatrix& n, SfWitness w) {
  if (!verify_witness(m, n, w)) fail(ErrorKind::Internal, "witness failed verification");
  return w;
}

/// Witness for N ~ M from one for M ~ N: (P^-1, 1/alpha).
inline SfWitness witness_inverse(const SfWitness& w) { return {p_invert(w.map), w.alpha.inverse()}; }

/// If `first` carries A to B and `second` carries B to C, the result carries A to C.
inline SfWitness witness_then(const SfWitness& first, const SfWitness& second) {
  return {p_compose(first.map, second.map), first.alpha * second.alpha};
}

/// Descent to homogeneous blocks: M1 == alpha * P1^T N1 P1.
inline bool descent_holds(const StdFormMatrix& m, const StdFormMatrix& n, const SfWitness& w) {
  const Mat2& p1 = w.map.linear_part();
  return m.homogeneous() == w.alpha * (p1.transpose() * n.homogeneous() * p1);
}

/// (M1, M2/gamma; m/gamma^2), the image under (gamma*I, 0) with scale gamma^-2.
inline StdFormMatrix scale_normalize(const StdFormMatrix& m, const Scalar& gamma) {
  if (gamma.is_zero()) fail(ErrorKind::ZeroScale, "gamma must be nonzero");
  const Scalar g = gamma.inverse();
  return StdFormMatrix(m.homogeneous(), g * m.linear(), g * g * m.constant());
}

inline SfWitness scale_witness(const Scalar& gamma) {
  if (gamma.is_zero()) fail(ErrorKind::ZeroScale, "gamma must be nonzero");
  return {PAffine(gamma * Mat2::identity()), (gamma * gamma).inverse()};
}

// ---------------------------------------------------------------------------
// Canonicalization

struct Canonicalization {
  CanonicalClass cls;
  StdFormMatrix canonical;
  SfWitness witness;  ///< verify_witness(canonical, input, witness)
};

namespace detail {

/// Accumulates stages; every stage is applied by multiplication and checked.
class StagedReduction {
 public:
  explicit StagedReduction(StdFormMatrix start) : source_(start), current_(std::move(start)) {}

  const StdFormMatrix& current() const { return current_; }
  const Scalar& u() const { return current_.linear()[0]; }
  const Scalar& v() const { return current_.linear()[1]; }
  const Scalar& n() const { return current_.constant(); }

  void apply(const SfWitness& stage) {
    if (stage.is_identity()) return;
    StdFormMatrix next = sf_image(current_, stage);
    total_ = witness_then(total_, stage);
    current_ = std::move(next);
  }
  void translate(Scalar e, Scalar f) { apply({PAffine::translation({std::move(e), std::move(f)}), 1}); }
  void scale(const Scalar& gamma) {
    if (!(gamma == Scalar(1))) apply(scale_witness(gamma));
  }

  Canonicalization finish(CanonicalClass cls) const {
    StdFormMatrix target = canonical_matrix(cls);
    if (!(current_ == target)) fail(ErrorKind::Internal, "reduction did not reach the canonical matrix");
    SfWitness w = certify(target, source_, total_);
    return {std::move(cls), std::move(target), std::move(w)};
  }

 private:
  StdFormMatrix source_;
  StdFormMatrix current_;
  SfWitness total_;
};

}  // namespace detail

/// Canonical class, literal canonical matrix and a verified witness carrying
/// `m` to it.
inline Canonicalization sf_canonicalize(const StdFormMatrix& m) {
  detail::StagedReduction red(m);
  const Canon2Result c2 = canon2(m.homogeneous());
  red.apply({PAffine(c2.P), c2.alpha});
  const Scalar one(1);

  switch (c2.label.tag) {
    case Canon2Tag::X2: {
      if (!red.v().is_zero()) {
        const Scalar vi = red.v().inverse();
        const Scalar u = red.u();
        red.apply({PAffine(Mat2{{1, 0}, {-u * vi, vi}}, {0, -red.n() * vi}), one});
        return red.finish(CanonicalClass(FormTag::KX));
      }
      red.translate(-red.u() / Scalar(2), 0);
      if (red.n().is_zero()) return red.finish(CanonicalClass(FormTag::X2));
      red.scale(sqrt_extend(-red.n()));
      return red.finish(CanonicalClass(FormTag::X2_MINUS1));
    }
    case Canon2Tag::YX: {
      red.translate(-red.v(), -red.u());
      if (red.n().is_zero()) return red.finish(CanonicalClass(FormTag::YX));
      red.scale(sqrt_extend(-red.n()));
      return red.finish(CanonicalClass(FormTag::S));
    }
    case Canon2Tag::JORDAN: {
      if (red.u().is_zero()) {
        red.translate(0, -red.v() / Scalar(2));
        if (red.n().is_zero()) return red.finish(CanonicalClass(FormTag::JORDAN));
        red.scale(sqrt_extend(red.n()));
        return red.finish(CanonicalClass(FormTag::JORDAN1));
      }
      red.scale(red.u());
      const Scalar f = -red.v() / Scalar(2);
      red.translate(f * f - red.n(), f);
      return red.finish(CanonicalClass(FormTag::VFORM));
    }
    case Canon2Tag::Q: {
      const Scalar& q = *c2.label.q;
      if (q == one) {
        if (!red.v().is_zero()) {
          const Scalar v = red.v();
          red.apply({PAffine(Mat2{{v, 0}, {-red.u(), v.inverse()}}, {0, -red.n() / v}), one});
          return red.finish(CanonicalClass(FormTag::UFORM));
        }
        if (!red.u().is_zero()) {
          const Scalar u = red.u();
          red.apply({PAffine(Mat2{{0, u.inverse()}, {-u, 0}}, {-red.n() / u, 0}), one});
          return red.finish(CanonicalClass(FormTag::UFORM));
        }
      } else {
        const Scalar k = (one - q).inverse();
        red.translate(red.v() * k, red.u() * k);
      }
      if (red.n().is_zero()) return red.finish(CanonicalClass(FormTag::QPLANE, q));
      red.scale(sqrt_extend(red.n()));
      return red.finish(CanonicalClass(FormTag::QWEYL, q));
    }
  }
  fail(ErrorKind::Internal, "unknown 2x2 label");
}

struct CongruenceResult {
  bool congruent = false;
  std::optional<SfWitness> witness;  ///< verify_witness(m, n, *witness) when congruent
};

/// Decide M ~sf N; on success the witness carries N to M.
inline CongruenceResult sf_congruent(const StdFormMatrix& m, const StdFormMatrix& n) {
  if (m == n) return {true, SfWitness::identity()};
  const Canonicalization cm = sf_canonicalize(m);
  const Canonicalization cn = sf_canonicalize(n);
  if (!same_class(cm.cls, cn.cls)) return {false, std::nullopt};
  SfWitness bridge;
  if (!(cm.canonical == cn.canonical)) {
    // q and 1/q: swap the variables and rescale.
    const Scalar& q = *cn.cls.q;
    bridge = certify(cm.canonical, cn.canonical, SfWitness(PAffine(Mat2{{0, 1}, {-q.inverse(), 0}}), 1));
  }
  // N -> C_N -> C_M -> M
  SfWitness w = witness_then(witness_then(cn.witness, bridge), witness_inverse(cm.witness));
  return {true, certify(m, n, std::move(w))};
}

// ---------------------------------------------------------------------------
// Orbit sampling

struct OrbitSample {
  StdFormMatrix mate;
  SfWitness witness;  ///< verify_witness(mate, source, witness)
};

/// sf(alpha * P^T M P) with its generating witness.
inline OrbitSample orbit_mate(const StdFormMatrix& m, const SfWitness& w) { return {sf_image(m, w), w}; }

/// Random P in P3 with entries in [-bound, bound] and alpha = a/b with small
/// nonzero a, b. The generator is caller-owned.
template <class Rng>
SfWitness random_witness(Rng& rng, int bound = 3) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  Mat2 p1;
  do {
    p1 = Mat2{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
  } while (det(p1).is_zero());
  Vec2 p2{entry(rng), entry(rng)};
  const long a = num(rng) * (sign(rng) ? 1 : -1);
  const long b = num(rng);
  return {PAffine(std::move(p1), std::move(p2)), Scalar::fraction(a, b)};
}

template <class Rng>
OrbitSample orbit_sample(const StdFormMatrix& m, Rng& rng) {
  return orbit_mate(m, random_witness(rng));
}

}  // namespace sfc
