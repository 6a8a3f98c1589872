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

#include <cmath>

#include "sfc/polyio.hpp"
#include "sfc/scalar.hpp"
#include "support/generators.hpp"

using namespace sfc;
using sfc::testing::Rng;

namespace {

double approx_re(const Scalar& s) { return evaluate(s, 128).re.to_double(); }
double approx_im(const Scalar& s) { return evaluate(s, 128).im.to_double(); }

}  // namespace

TEST_CASE("rational arithmetic", "[scalar]") {
  CHECK(Scalar::fraction(1, 2) + Scalar::fraction(1, 3) == Scalar::fraction(5, 6));
  CHECK(to_string(Scalar::fraction(1, 2) + Scalar::fraction(1, 3)) == "5/6");
  CHECK(Scalar::fraction(-4, 6) == Scalar::fraction(2, -3));
  CHECK_THROWS_AS(Scalar::fraction(1, 0), Error);
}

TEST_CASE("difference of squares cancels", "[scalar]") {
  const Scalar r2 = sqrt_extend(2);
  const Scalar p = (Scalar(1) + r2) * (Scalar(1) - r2);
  CHECK(p == Scalar(-1));
  CHECK(p.is_rational());
}

TEST_CASE("division by a conjugate", "[scalar]") {
  const Scalar r2 = sqrt_extend(2);
  const Scalar q = (Scalar(1) + r2) / (Scalar(3) - r2);
  const Scalar expected = (Scalar(5) + Scalar(4) * r2) / Scalar(7);
  CHECK(q == expected);
  // Oracle: multiply back, and compare in floating point.
  CHECK(expected * (Scalar(3) - r2) == Scalar(1) + r2);
  CHECK(approx_re(q) == Catch::Approx((1 + std::sqrt(2.0)) / (3 - std::sqrt(2.0))).epsilon(1e-14));
  CHECK(to_string(q) == "5/7 + 4/7*sqrt(2)");
}

TEST_CASE("division by zero", "[scalar]") {
  const Scalar r2 = sqrt_extend(2);
  CHECK_THROWS_MATCHES(Scalar(1) / (r2 * r2 - Scalar(2)), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::DivisionByZero;
                       }));
}

TEST_CASE("sqrt_extend of a perfect square stays rational", "[scalar]") {
  const Scalar s = sqrt_extend(Scalar::fraction(9, 4));
  CHECK(s.is_rational());
  CHECK(s == Scalar::fraction(3, 2));
}

TEST_CASE("sqrt_extend of 5 adjoins sqrt(5)", "[scalar]") {
  const Scalar s = sqrt_extend(5);
  CHECK(s.depth() == 1);
  CHECK(s.tower()->radicand() == std::vector<Rational>{Rational(5)});
  CHECK(s * s == Scalar(5));
  CHECK(approx_re(s) == Catch::Approx(std::sqrt(5.0)));
}

TEST_CASE("sqrt_extend finds squares inside the tower", "[scalar]") {
  const Scalar r2 = sqrt_extend(2);
  const Scalar target = Scalar(3) + Scalar(2) * r2;
  const Scalar s = sqrt_extend(target);
  CHECK(s == Scalar(1) + r2);
  CHECK(s.depth() == target.depth());
  // Oracle: (1 + sqrt 2)^2 = 3 + 2 sqrt 2 by expansion.
  CHECK(s * s == target);
}

TEST_CASE("square-free normalization and negative radicands", "[scalar]") {
  const Scalar s = sqrt_extend(12);
  CHECK(to_string(s) == "2*sqrt(3)");
  const Scalar i2 = sqrt_extend(-4);
  CHECK(to_string(i2) == "2*sqrt(-1)");
  CHECK(i2 * i2 == Scalar(-4));
  CHECK(approx_im(i2) == Catch::Approx(2.0));
}

TEST_CASE("principal branch has positive real part", "[scalar]") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Scalar s = sfc::testing::nonzero_tower_scalar(rng);
    if (s.depth() > 2) continue;
    const Scalar r = sqrt_extend(s);
    const double re = approx_re(r), im = approx_im(r);
    CHECK((re > 1e-12 || (std::abs(re) <= 1e-12 && im >= 0)));
  }
}

TEST_CASE("is_zero", "[scalar]") {
  const Scalar r2 = sqrt_extend(2);
  CHECK(is_zero(Scalar(0)));
  CHECK(is_zero((Scalar(1) + r2) * (Scalar(1) - r2) + Scalar(1)));
  CHECK_FALSE(is_zero(r2 - Scalar(1)));
}

TEST_CASE("approx intervals", "[scalar]") {
  CHECK(approx(Scalar::fraction(1, 3), 5).str() == "[0.33333, 0.33334]");
  const auto a = approx(sqrt_extend(2), 5);
  CHECK(a.re.lower() <= Rational(141421, 100000));
  CHECK(a.re.upper() >= Rational(141421, 100000));
  CHECK(a.re.upper() - a.re.lower() <= Rational(1, 100000));
  // Oracle: sqrt(5)/5 = 0.44721...
  const auto b = approx(sqrt_extend(5) / Scalar(5), 3);
  CHECK(b.re.lower() <= Rational(447, 1000));
  CHECK(b.re.upper() >= Rational(447, 1000));
  CHECK(b.re.str() == "[0.447, 0.448]");
  CHECK_THROWS_AS(approx(Scalar(1), 201), Error);
}

TEST_CASE("approx matches floating point on random tower elements", "[scalar]") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Scalar s = sfc::testing::tower_scalar(rng);
    const auto a = approx(s, 10);
    const double re = approx_re(s);
    CHECK(a.re.lower().get_d() <= re + 1e-9);
    CHECK(a.re.upper().get_d() >= re - 1e-9);
    CHECK(a.re.upper() - a.re.lower() <= Rational(Integer(1), Integer("10000000000")));
  }
}

TEST_CASE("field axioms on sampled triples", "[scalar][property]") {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = sfc::testing::tower_scalar(rng);
    const Scalar b = sfc::testing::tower_scalar(rng);
    const Scalar c = sfc::testing::tower_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("sqrt_extend squares back", "[scalar][property]") {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const Scalar s = sfc::testing::nonzero_tower_scalar(rng);
    if (s.depth() > 2) continue;
    const Scalar r = sqrt_extend(s);
    CHECK(is_zero(r * r - s));
  }
}

TEST_CASE("tower depth budget is enforced", "[scalar]") {
  Scalar s = sqrt_extend(2);
  for (int k = 0; k < 3; ++k) s = sqrt_extend(s + Scalar(1));
  CHECK(s.depth() == 4);
  CHECK_THROWS_MATCHES(sqrt_extend(s + Scalar(1)), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::TowerDepthExceeded;
                       }));
}

TEST_CASE("no false zeros and no missed zeros", "[scalar][property]") {
  Rng rng(3);
  int nonzero_ok = 0, zero_ok = 0;
  for (int k = 0; k < 1000; ++k) {
    const Scalar s = sfc::testing::nonzero_tower_scalar(rng);
    if (approx(s, 100).excludes_zero()) ++nonzero_ok;
  }
  for (int k = 0; k < 1000; ++k) {
    const Scalar a = sfc::testing::tower_scalar(rng);
    const Scalar b = sfc::testing::tower_scalar(rng);
    Scalar z;
    switch (k % 4) {
      case 0: z = (a + b) * (a - b) - (a * a - b * b); break;
      case 1: z = a.is_zero() ? Scalar() : a * a.inverse() - Scalar(1); break;
      case 2: z = (a * b + a) - a * (b + Scalar(1)); break;
      default: z = a.depth() > 2 ? Scalar() : sqrt_extend(a) * sqrt_extend(a) - a; break;
    }
    if (is_zero(z)) ++zero_ok;
  }
  CHECK(nonzero_ok == 1000);
  CHECK(zero_ok == 1000);
}

TEST_CASE("embedding into a refined tower and back preserves equality", "[scalar][property]") {
  Rng rng(4);
  const auto& pool = sfc::testing::radical_pool();
  for (int k = 0; k < 100; ++k) {
    const Scalar s = sfc::testing::tower_scalar(rng);
    const Scalar other = pool[k % pool.size()];
    const TowerPtr big = unify(s.tower(), other.tower());
    const Scalar up = embed(s, big);
    CHECK(up == s);
    CHECK(up.depth() == s.depth());  // trimming restores the minimal form
    CHECK(to_string(up) == to_string(s));
  }
}

TEST_CASE("text round trip", "[scalar][property]") {
  Rng rng(6);
  for (int k = 0; k < 300; ++k) {
    const Scalar s = sfc::testing::tower_scalar(rng);
    CHECK(parse_scalar(to_string(s)) == s);
  }
  CHECK(parse_scalar("2*sqrt(2)*sqrt(3 + sqrt(2))") * parse_scalar("sqrt(3 + sqrt(2))") ==
        parse_scalar("6*sqrt(2) + 4"));
}
