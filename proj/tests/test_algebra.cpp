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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "sfc/algebra.hpp"
#include "support/generators.hpp"

using namespace sfc;
using sfc::testing::Rng;

namespace {

NCPoly P(std::string_view s) { return parse_poly(s); }

AlgebraClass A(AlgebraName n, std::optional<Scalar> q = std::nullopt) { return {n, std::move(q)}; }

auto kind_is(ErrorKind k) {
  return Catch::Matchers::Predicate<Error>([k](const Error& e) { return e.kind() == k; }, "error kind");
}

CanonicalClass random_class(Rng& rng) {
  const FormTag t = kAllFormTags[sfc::testing::uniform(rng, 0, 10)];
  if (!has_parameter(t)) return CanonicalClass(t);
  return CanonicalClass(t, sfc::testing::nonzero_rational(rng));
}

StdFormMatrix random_input(Rng& rng) {
  if (sfc::testing::uniform(rng, 0, 1) == 0) return sfc::testing::small_std_form(rng);
  return orbit_sample(canonical_matrix(random_class(rng)), rng).mate;
}

DynMatrix random_qas(Rng& rng, std::size_t n) {
  DynMatrix q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      q(i, j) = Scalar(sfc::testing::uniform(rng, 1, 3)) * Scalar(sfc::testing::uniform(rng, 0, 1) ? 1 : -1);
      q(j, i) = q(i, j).inverse();
    }
  }
  return q;
}

/// p_ij = q_{sigma(i) sigma(j)}.
DynMatrix permuted(const DynMatrix& q, const std::vector<std::size_t>& sigma) {
  DynMatrix p(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) p(i, j) = q(sigma[i], sigma[j]);
  return p;
}

}  // namespace

TEST_CASE("two-generator table", "[algebra]") {
  const std::pair<const char*, AlgebraClass> table[] = {
      {"xy - 3yx", A(AlgebraName::OQ, 3)},
      {"xy - 3yx - 1", A(AlgebraName::WEYL_Q, 3)},
      {"yx - xy + y^2", A(AlgebraName::JORDAN)},
      {"yx - xy + y^2 + 1", A(AlgebraName::JORDAN1)},
      {"yx - xy + y", A(AlgebraName::U)},
      {"x^2 + y", A(AlgebraName::KX)},
      {"x^2", A(AlgebraName::RX2)},
      {"x^2 - 1", A(AlgebraName::RX2M1)},
      {"yx", A(AlgebraName::RYX)},
      {"yx - 1", A(AlgebraName::S)},
  };
  for (const auto& [text, expected] : table) {
    CAPTURE(text);
    const AlgebraClass got = classify(P(text));
    CHECK(same_algebra(got, expected));
    CHECK_FALSE(got.via_v);
  }
  for (const Scalar& q : {Scalar(2), Scalar(-1), Scalar(1), Scalar::fraction(1, 2)}) {
    CHECK(same_algebra(classify(P("xy") - q * P("yx")), A(AlgebraName::OQ, q)));
    CHECK(same_algebra(classify(P("xy - 1") - q * P("yx")), A(AlgebraName::WEYL_Q, q)));
  }
  // The commutative plane and the Weyl algebra at q = 1.
  CHECK(same_algebra(classify(P("xy - yx")), A(AlgebraName::OQ, 1)));
  CHECK(same_algebra(classify(P("xy - yx - 1")), A(AlgebraName::WEYL_Q, 1)));
  CHECK(same_algebra(classify(P("xy - 3yx")), A(AlgebraName::OQ, Scalar::fraction(1, 3))));
  CHECK_FALSE(same_algebra(classify(P("xy - 3yx")), A(AlgebraName::OQ, 2)));

  const AlgebraClass v = classify(P("yx - xy + y^2 + x"));
  CHECK(v.name == AlgebraName::U);
  CHECK(v.via_v);

  CHECK_THROWS_MATCHES(classify(P("x + y")), Error, kind_is(ErrorKind::DegreeTooLow));
}

TEST_CASE("all eleven canonical forms name an algebra", "[algebra]") {
  std::set<AlgebraName> names;
  for (FormTag t : kAllFormTags) {
    const CanonicalClass c = has_parameter(t) ? CanonicalClass(t, Scalar(2)) : CanonicalClass(t);
    names.insert(classify(matrix_to_poly(canonical_matrix(c))).name);
  }
  CHECK(names.size() == 10);
}

TEST_CASE("iso_check examples", "[algebra]") {
  const IsoResult oq = iso_check(P("xy - 2yx"), P("xy - 1/2yx"));
  CHECK(oq.isomorphic);
  CHECK(oq.evidence == IsoEvidence::Affine);
  REQUIRE(oq.witness);
  CHECK(verify_witness(poly_to_matrix(P("xy - 2yx")), poly_to_matrix(P("xy - 1/2yx")), *oq.witness));

  const IsoResult uv = iso_check(P("yx - xy + y"), P("yx - xy + y^2 + x"));
  CHECK(uv.isomorphic);
  CHECK(uv.evidence == IsoEvidence::Bridge);
  CHECK_FALSE(uv.witness);
  CHECK_FALSE(sf_congruent(poly_to_matrix(P("yx - xy + y")), poly_to_matrix(P("yx - xy + y^2 + x"))).congruent);
  CHECK(iso_check(P("yx - xy + y^2 + x"), P("yx - xy + y")).evidence == IsoEvidence::Bridge);

  const IsoResult no = iso_check(P("yx"), P("x^2"));
  CHECK_FALSE(no.isomorphic);
  CHECK(no.evidence == IsoEvidence::None);
  CHECK_FALSE(iso_check(P("xy - 2yx"), P("xy - 2yx - 1")).isomorphic);
  CHECK_THROWS_AS(iso_check(P("x"), P("x^2")), Error);
}

TEST_CASE("isomorphism evidence follows sf-congruence", "[algebra][property]") {
  Rng rng(40);
  int bridges = 0;
  for (int k = 0; k < 300; ++k) {
    StdFormMatrix m = random_input(rng);
    StdFormMatrix n = sfc::testing::uniform(rng, 0, 1) ? orbit_sample(m, rng).mate : random_input(rng);
    if (k % 10 == 0) {
      m = orbit_sample(canonical_matrix(CanonicalClass(FormTag::UFORM)), rng).mate;
      n = orbit_sample(canonical_matrix(CanonicalClass(FormTag::VFORM)), rng).mate;
    }
    const IsoResult r = iso_check(matrix_to_poly(m), matrix_to_poly(n));
    const bool congruent = sf_congruent(m, n).congruent;
    CHECK((r.evidence == IsoEvidence::Affine) == congruent);
    if (r.evidence == IsoEvidence::Affine) CHECK(verify_witness(m, n, *r.witness));
    if (r.evidence == IsoEvidence::Bridge) {
      ++bridges;
      const FormTag a = sf_canonicalize(m).cls.tag, b = sf_canonicalize(n).cls.tag;
      CHECK(((a == FormTag::UFORM && b == FormTag::VFORM) || (a == FormTag::VFORM && b == FormTag::UFORM)));
    }
    CHECK(r.isomorphic == same_algebra(classify_detailed(m).algebra, classify_detailed(n).algebra));
  }
  CHECK(bridges > 0);
}

TEST_CASE("classify is constant on sf-orbits", "[algebra][property]") {
  Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    const StdFormMatrix m = random_input(rng);
    const OrbitSample o = orbit_sample(m, rng);
    const AlgebraClass a = classify(matrix_to_poly(m)), b = classify(matrix_to_poly(o.mate));
    CHECK(same_algebra(a, b));
    CHECK(a.via_v == b.via_v);
  }
}

TEST_CASE("homogenize examples", "[algebra]") {
  CHECK(homogenized_relation(homogenize(P("yx - xy + y"))) == P("yx - xy + yz"));
  CHECK(homogenized_relation(homogenize(P("x^2 - 1"))) == P("x^2 - z^2"));
  CHECK(homogenized_relation(homogenize(P("yx - 1"))) == P("yx - z^2"));
  const HTriple t = homogenize(P("x^2"));
  // Oracle: (x y z) X (x y z)^T = xz - zx.
  CHECK(t.X == Mat3{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
  CHECK(t.Y == Mat3{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  CHECK_THROWS_MATCHES(homogenize(P("x - 1")), Error, kind_is(ErrorKind::DegreeTooLow));
}

TEST_CASE("homogenization table", "[algebra]") {
  const std::pair<const char*, HName> table[] = {
      {"xy - 2yx", HName::H_OQ},          {"xy - 2yx - 5", HName::H_WEYL},
      {"yx - xy + y^2", HName::H_JORDAN}, {"yx - xy + y^2 + 1", HName::H_SJORDAN},
      {"yx - xy + y", HName::H_ENV},      {"yx - xy + y^2 + x", HName::H_ENVV},
      {"x^2", HName::H_X2},               {"x^2 - 1", HName::H_SX2},
      {"yx", HName::H_YX},                {"yx - 1", HName::H_OS},
      {"x^2 + y", HName::H_KX},
  };
  std::set<HName> names;
  for (const auto& [text, expected] : table) {
    CAPTURE(text);
    const HClass h = classify_h(homogenize(P(text)));
    CHECK(h.name == expected);
    names.insert(h.name);
  }
  CHECK(names.size() == 11);
  const HClass weyl = classify_h(homogenize(P("xy - 2yx - 5")));
  CHECK(*weyl.q == Scalar(2));
  CHECK_FALSE(same_h_class(classify_h(homogenize(P("yx - xy + y"))), classify_h(homogenize(P("yx - xy + y^2 + x")))));
  CHECK(same_h_class(classify_h(homogenize(P("xy - 3yx"))), classify_h(homogenize(P("xy - 1/3yx")))));
  CHECK_FALSE(same_h_class(classify_h(homogenize(P("xy - 3yx"))), classify_h(homogenize(P("xy - 2yx")))));

  HTriple bad = homogenize(P("x^2"));
  bad.X = Mat3::identity();
  CHECK_THROWS_AS(classify_h(bad), Error);
}

TEST_CASE("classify_h separates the canonical classes", "[algebra]") {
  std::vector<CanonicalClass> classes;
  for (FormTag t : kAllFormTags)
    if (!has_parameter(t)) classes.emplace_back(t);
  for (int q : {2, 3, -1}) {
    classes.emplace_back(FormTag::QPLANE, Scalar(q));
    classes.emplace_back(FormTag::QWEYL, Scalar(q));
  }
  for (const CanonicalClass& a : classes)
    for (const CanonicalClass& b : classes) {
      const HClass ha = classify_h(homogenize(canonical_matrix(a)));
      const HClass hb = classify_h(homogenize(canonical_matrix(b)));
      CHECK(same_h_class(ha, hb) == same_class(a, b));
    }
}

TEST_CASE("setting z recovers f and its homogeneous part", "[algebra][property]") {
  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    const StdFormMatrix m = random_input(rng);
    const NCPoly fh = homogenized_relation(homogenize(m));
    CHECK(substitute({{'z', NCPoly(1)}}, fh) == matrix_to_poly(m));
    CHECK(substitute({{'z', NCPoly()}}, fh) == matrix_to_poly(StdFormMatrix(m.homogeneous())));
    // The canonical H matrix at z = 0 is the padded 2x2 canonical form.
    const StdFormMatrix c = sf_canonicalize(m).canonical;
    CHECK(c.homogeneous() == literal(canon2(m.homogeneous()).label));
    CHECK(sf_map(StdFormMatrix(c.homogeneous()).to_mat3()) == StdFormMatrix(literal(canon2(m.homogeneous()).label)));
  }
}

TEST_CASE("X and Y are combinations of their congruents", "[algebra]") {
  const LinearCombination id = xy_linear_combination_check(PAffine::identity());
  CHECK(id.ok);
  CHECK(id.r == Scalar(1));
  CHECK(id.s == Scalar(0));
  CHECK(id.r2 == Scalar(0));
  CHECK(id.s2 == Scalar(1));

  const PAffine p(Mat2{{2, 0}, {0, 3}}, Vec2{1, 1});
  const LinearCombination lc = xy_linear_combination_check(p);
  CHECK(lc.ok);
  CHECK(lc.r == Scalar::fraction(1, 2));
  CHECK(lc.s == Scalar(0));
  CHECK(lc.r2 == Scalar(0));
  CHECK(lc.s2 == Scalar::fraction(1, 3));

  Rng rng(43);
  for (int k = 0; k < 200; ++k) {
    const PAffine q = sfc::testing::small_paffine(rng);
    const LinearCombination c = xy_linear_combination_check(q);
    REQUIRE(c.ok);
    const Mat3 m = q.to_mat3();
    const Mat3 u = m.transpose() * commutator_matrix_x() * m, v = m.transpose() * commutator_matrix_y() * m;
    CHECK(c.r * u + c.s * v == commutator_matrix_x());
    CHECK(c.r2 * u + c.s2 * v == commutator_matrix_y());
  }
}

TEST_CASE("qas_iso examples", "[algebra]") {
  const DynMatrix three{{1, 3}, {Scalar::fraction(1, 3), 1}};
  const DynMatrix third{{1, Scalar::fraction(1, 3)}, {3, 1}};
  const auto swap = qas_iso(three, third);
  REQUIRE(swap);
  CHECK(*swap == std::vector<std::size_t>{1, 0});
  CHECK(*qas_iso(three, three) == std::vector<std::size_t>{0, 1});

  const auto qas3 = [](Scalar a, Scalar b, Scalar c) {
    return DynMatrix{{1, a, b}, {a.inverse(), 1, c}, {b.inverse(), c.inverse(), 1}};
  };
  CHECK_FALSE(qas_iso(qas3(2, 3, 5), qas3(2, 3, 7)));
  CHECK(qas_iso(qas3(2, 3, 5), qas3(2, 3, 5)));

  CHECK_THROWS_MATCHES(qas_iso(DynMatrix{{1, 2}, {2, 1}}, three), Error,
                       kind_is(ErrorKind::NotMultiplicativelyAntisymmetric));
  DynMatrix big(9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) big(i, j) = 1;
  CHECK_THROWS_MATCHES(qas_iso(big, big), Error, kind_is(ErrorKind::DimensionTooLarge));
  CHECK_FALSE(qas_iso(three, DynMatrix{{1}}));
}

TEST_CASE("qas_iso is an equivalence relation", "[algebra][property]") {
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = sfc::testing::uniform(rng, 1, 5);
    const DynMatrix q = random_qas(rng, n);
    std::vector<std::size_t> s1(n), s2(n);
    std::iota(s1.begin(), s1.end(), 0);
    std::iota(s2.begin(), s2.end(), 0);
    std::shuffle(s1.begin(), s1.end(), rng);
    std::shuffle(s2.begin(), s2.end(), rng);
    const DynMatrix p = permuted(q, s1), r = permuted(p, s2);

    const auto id = qas_iso(q, q);
    REQUIRE(id);
    CHECK(permuted(q, *id) == q);
    const auto pq = qas_iso(p, q), qp = qas_iso(q, p), pr = qas_iso(r, q);
    REQUIRE(pq);
    REQUIRE(qp);
    REQUIRE(pr);
    CHECK(permuted(q, *pq) == p);
    CHECK(permuted(p, *qp) == q);
    CHECK(permuted(q, *pr) == r);
    // A different matrix with the same size is only related if it is a permutation.
    const DynMatrix other = random_qas(rng, n);
    const auto o = qas_iso(other, q);
    if (o) CHECK(permuted(q, *o) == other);
  }
}
