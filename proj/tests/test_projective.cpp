#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "fqt/parse.hpp"
#include "fqt/projective.hpp"
#include "helpers.hpp"

using namespace fqt;
using fqt::testing::Rng;

TEST_CASE("points canonicalize on construction") {
  FieldSpec F3(3);
  // common factor and non-monic denominator are normalized away
  ProjPoint a(Poly(F3, {0, 2, 2}), Poly::constant(F3, 2));  // (2t^2+2t)/2
  CHECK(a.to_string() == "t^2+t");
  ProjPoint b(Poly(F3, {2, 0, 1}), Poly(F3, {2, 1}));  // (t^2+2)/(t+2) = t+1
  CHECK(b.to_string() == "t+1");
  CHECK(b == ProjPoint::from_poly(Poly(F3, {1, 1})));

  CHECK(ProjPoint(Poly::constant(F3, 2), Poly::zero(F3)) == ProjPoint::infinity(F3));
  CHECK(ProjPoint(Poly::zero(F3), Poly(F3, {1, 2})) == ProjPoint::zero(F3));
  CHECK_THROWS_AS(ProjPoint(Poly::zero(F3), Poly::zero(F3)), InvalidPoint);
}

TEST_CASE("point printing parenthesizes compound fraction parts") {
  FieldSpec F3(3);
  CHECK(parse_point(F3, "t^2/(t^2+1)").to_string() == "t^2/(t^2+1)");
  CHECK(parse_point(F3, "(t^2+2)/t").to_string() == "(t^2+2)/t");
  CHECK(parse_point(F3, "t^-1").to_string() == "1/t");
  CHECK(parse_point(F3, "inf").to_string() == "inf");
  CHECK(parse_point(F3, "0").to_string() == "0");
  CHECK(parse_point(F3, "1/0").to_string() == "inf");
  CHECK(parse_point(F3, "t/(t+1)").to_string() == "t/(t+1)");
}

TEST_CASE("degree, leading coefficient and separation degree") {
  FieldSpec F3(3);
  CHECK(point_degree(ProjPoint::zero(F3)).is_neg_inf());
  CHECK(point_degree(ProjPoint::infinity(F3)).is_pos_inf());
  CHECK(point_degree(parse_point(F3, "(t^2+1)/t")) == Degree::finite(1));
  CHECK(point_degree(parse_point(F3, "t/(t^2+1)")) == Degree::finite(-1));

  CHECK(point_leading(parse_point(F3, "2t^2/(t^2+1)")) == 2);
  CHECK(point_leading(parse_point(F3, "t/(2t+1)")) == 2);  // 1/2 = 2 in F_3
  CHECK(point_leading(ProjPoint::zero(F3)) == 0);
  CHECK_THROWS_AS(point_leading(ProjPoint::infinity(F3)), InfinityNotDecomposable);

  CHECK(diff_degree(parse_point(F3, "t^-1"), parse_point(F3, "2t^-1")) == Degree::finite(-1));
  CHECK(diff_degree(parse_point(F3, "t+1"), parse_point(F3, "t+2")) == Degree::finite(0));
  CHECK(diff_degree(parse_point(F3, "t"), parse_point(F3, "t")).is_neg_inf());
}

TEST_CASE("rational arithmetic on points") {
  FieldSpec F3(3);
  ProjPoint x = parse_point(F3, "t/(t+1)"), y = parse_point(F3, "1/t");
  CHECK(rat_add(x, y).to_string() == "(t^2+t+1)/(t^2+t)");
  CHECK(rat_sub(rat_add(x, y), y) == x);
  CHECK(rat_mul(x, y).to_string() == "1/(t+1)");
  CHECK(rat_div(rat_mul(x, y), y) == x);
  CHECK(rat_neg(x).to_string() == "2t/(t+1)");
  CHECK(rat_inv(ProjPoint::zero(F3)) == ProjPoint::infinity(F3));
  CHECK(rat_inv(ProjPoint::infinity(F3)) == ProjPoint::zero(F3));
  CHECK(rat_div(x, ProjPoint::zero(F3)) == ProjPoint::infinity(F3));
  CHECK_THROWS_AS(rat_div(ProjPoint::zero(F3), ProjPoint::zero(F3)), DivisionByZero);

  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    ProjPoint a = testing::rand_point(F3, rng, 3, /*finite_only=*/true);
    ProjPoint b = testing::rand_point(F3, rng, 3, /*finite_only=*/true);
    CHECK(rat_sub(rat_add(a, b), b) == a);
    if (!b.is_zero()) CHECK(rat_mul(rat_div(a, b), b) == a);
  }
}

TEST_CASE("poly_part extracts the euclidean quotient") {
  FieldSpec F2(2);
  CHECK(poly_part(parse_point(F2, "(t^3+1)/(t+1)")).to_string() == "t^2+t+1");
  CHECK(poly_part(parse_point(F2, "1/t")).is_zero());
  CHECK(poly_part(parse_point(F2, "(t^2+t+1)/t")).to_string() == "t+1");
  CHECK(poly_part(ProjPoint::zero(F2)).is_zero());
}

TEST_CASE("triples enforce distinctness") {
  FieldSpec F3(3);
  Triple T = parse_triple(F3, "(0, 1, inf)");
  CHECK(T.to_string() == "(0, 1, inf)");
  CHECK_THROWS_WITH_AS(make_triple(T[0], T[0], T[2]),
                       "triple components 1 and 2 coincide", DistinctnessViolated);
  CHECK_THROWS_WITH_AS(make_triple(T[0], T[1], T[0]),
                       "triple components 1 and 3 coincide", DistinctnessViolated);
  CHECK_THROWS_WITH_AS(make_triple(T[0], T[1], T[1]),
                       "triple components 2 and 3 coincide", DistinctnessViolated);
}

TEST_CASE("continued fractions of the worked examples") {
  FieldSpec F3(3);
  CHECK(cf_expand(parse_point(F3, "t^2/(t^2+1)")).to_string() == "[1; 2t^2+2]");
  CHECK(cf_expand(parse_point(F3, "t")).to_string() == "[t]");
  CHECK(cf_expand(parse_point(F3, "0")).to_string() == "[0]");
  CHECK(cf_expand(parse_point(F3, "1/t")).to_string() == "[0; t]");
  CHECK(cf_expand(parse_point(F3, "(t^2+1)/t")).to_string() == "[t; t]");
  CHECK_THROWS_AS(cf_expand(ProjPoint::infinity(F3)), InfinityNotExpandable);

  // verify the assembled value by direct arithmetic: 1 + 1/(2t^2+2)
  ContinuedFraction cf = cf_expand(parse_point(F3, "t^2/(t^2+1)"));
  REQUIRE(cf.a.size() == 2);
  ProjPoint v = rat_add(ProjPoint::from_poly(cf.a[0]),
                        rat_inv(ProjPoint::from_poly(cf.a[1])));
  CHECK(v == parse_point(F3, "t^2/(t^2+1)"));
}

TEST_CASE("cf_assemble rejects malformed quotient lists") {
  FieldSpec F3(3);
  CHECK_THROWS_AS(cf_assemble(ContinuedFraction{{}}), MalformedCF);
  ContinuedFraction constant_tail{{Poly::t(F3), Poly::constant(F3, 2)}};
  CHECK_THROWS_AS(cf_assemble(constant_tail), MalformedCF);
  ContinuedFraction zero_tail{{Poly::t(F3), Poly::zero(F3)}};
  CHECK_THROWS_AS(cf_assemble(zero_tail), MalformedCF);
}

TEST_CASE("cf round-trips and quotient shape on random rationals") {
  for (uint32_t q : {2u, 3u, 5u}) {
    FieldSpec F(q);
    Rng rng(q * 1000 + 17);
    for (int i = 0; i < 300; ++i) {
      ProjPoint w = testing::rand_point(F, rng, 4, /*finite_only=*/true);
      ContinuedFraction cf = cf_expand(w);
      for (size_t j = 1; j < cf.a.size(); ++j) CHECK(deg(cf.a[j]) >= Degree::finite(1));
      CHECK(cf_assemble(cf) == w);
    }
  }
}

TEST_CASE("parse/print round trip for points and triples") {
  for (uint32_t q : {2u, 3u}) {
    FieldSpec F(q);
    Rng rng(q + 5);
    for (int i = 0; i < 250; ++i) {
      ProjPoint w = testing::rand_point(F, rng, 4);
      CHECK(parse_point(F, w.to_string()) == w);
      Triple T = testing::rand_triple(F, rng, 3);
      CHECK(parse_triple(F, T.to_string()) == T);
    }
  }
  // extension coefficients survive the trip as well
  FieldSpec F4(2, 2, {1, 1, 1});
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    ProjPoint w = testing::rand_point(F4, rng, 3);
    CHECK(parse_point(F4, w.to_string()) == w);
  }
}
