#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqt/group.hpp"
#include "fqt/parse.hpp"
#include "helpers.hpp"

using namespace fqt;
using fqt::testing::Rng;

TEST_CASE("matrices canonicalize to a monic-content normal form") {
  FieldSpec F3(3);
  // scalar multiples collapse to the same representative
  GammaElem g = parse_matrix(F3, "[[2,t],[1,2t+1]]");
  CHECK(g.to_string() == "[[1,2t],[2,t+2]]");
  CHECK(g == parse_matrix(F3, "[[1,2t],[2,t+2]]"));
  CHECK(g.in_gamma);
  CHECK(g.det().to_string() == "2");

  // polynomial content is divided out, which can change the determinant class
  GammaElem h = make_matrix(Poly(F3, {0, 1, 1}), Poly::t(F3), Poly::t(F3), Poly::t(F3));
  CHECK(h.to_string() == "[[t+1,1],[1,1]]");
  CHECK(!h.in_gamma);  // det = t is not a unit

  CHECK_THROWS_AS(make_matrix(Poly::t(F3), Poly::t(F3), Poly::t(F3), Poly::t(F3)),
                  SingularMatrix);
}

TEST_CASE("generator matrices") {
  FieldSpec F3(3);
  CHECK(identity_matrix(F3).to_string() == "[[1,0],[0,1]]");
  CHECK(gen_iota(F3).to_string() == "[[0,1],[1,0]]");
  CHECK(gen_sigma(F3, 2).to_string() == "[[1,0],[0,2]]");  // [[2,0],[0,1]] scaled monic
  CHECK(gen_u(Poly::t(F3)).to_string() == "[[1,t],[0,1]]");
  CHECK_THROWS_AS(gen_sigma(F3, 0), InvalidGenerator);
  CHECK(gen_iota(F3).in_gamma);
  CHECK(gen_sigma(F3, 2).in_gamma);
  CHECK(gen_u(Poly(F3, {1, 2})).in_gamma);
}

TEST_CASE("composition and inverse") {
  FieldSpec F3(3);
  Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    GammaElem g = testing::rand_gamma(F3, rng, 4, 2);
    CHECK(compose(g, inverse(g)) == identity_matrix(F3));
    CHECK(compose(inverse(g), g) == identity_matrix(F3));
    GammaElem h = testing::rand_gamma(F3, rng, 3, 2);
    GammaElem k = testing::rand_gamma(F3, rng, 3, 2);
    CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
  }
}

TEST_CASE("mobius action on points") {
  FieldSpec F3(3);
  GammaElem iota = gen_iota(F3);
  CHECK(act_point(iota, ProjPoint::zero(F3)) == ProjPoint::infinity(F3));
  CHECK(act_point(iota, ProjPoint::infinity(F3)) == ProjPoint::zero(F3));
  CHECK(act_point(iota, parse_point(F3, "t")) == parse_point(F3, "1/t"));

  GammaElem ut = gen_u(Poly::t(F3));
  CHECK(act_point(ut, parse_point(F3, "1/t")) == parse_point(F3, "(t^2+1)/t"));
  CHECK(act_point(ut, ProjPoint::infinity(F3)) == ProjPoint::infinity(F3));

  CHECK(act_point(gen_sigma(F3, 2), parse_point(F3, "t+1")) == parse_point(F3, "2t+2"));

  // pole of the transformation goes to inf
  GammaElem m = parse_matrix(F3, "[[1,1],[1,2]]");
  CHECK(act_point(m, parse_point(F3, "1")) == ProjPoint::infinity(F3));

  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    GammaElem g = testing::rand_gamma(F3, rng, 3, 2);
    GammaElem h = testing::rand_gamma(F3, rng, 3, 2);
    ProjPoint w = testing::rand_point(F3, rng, 3);
    CHECK(act_point(g, act_point(h, w)) == act_point(compose(g, h), w));
    CHECK(act_point(inverse(g), act_point(g, w)) == w);
  }
}

TEST_CASE("phi_inverse sends the standard triple onto the input") {
  FieldSpec F3(3);
  Triple std3 = parse_triple(F3, "(0, 1, inf)");
  CHECK(phi_inverse(std3) == identity_matrix(F3));

  GammaElem d = phi_inverse(parse_triple(F3, "(0, t, inf)"));
  CHECK(d.to_string() == "[[t,0],[0,1]]");
  CHECK(!d.in_gamma);  // det t: phi_inverse lands in PGL_2(K), not Gamma

  for (uint32_t q : {2u, 3u, 5u}) {
    FieldSpec F(q);
    Rng rng(q * 7 + 1);
    Triple stdq = parse_triple(F, "(0, 1, inf)");
    for (int i = 0; i < 200; ++i) {
      Triple T = testing::rand_triple(F, rng, 3);
      CHECK(act_triple(phi_inverse(T), stdq) == T);
    }
  }
}

TEST_CASE("words remember generator tokens in application order") {
  FieldSpec F3(3);
  Word w(F3);
  CHECK(w.to_string() == "identity");
  CHECK(w.product() == identity_matrix(F3));

  // the reduction of (t, t+1, t+2): u_{-t}, then u_{-2}, then iota, then u_{-1}
  w.push_u(-Poly::t(F3), /*minus_form=*/true);
  w.push_u(-Poly::constant(F3, 2), /*minus_form=*/true);
  w.push_iota();
  w.push_u(-Poly::constant(F3, 1), /*minus_form=*/true);
  CHECK(w.to_string() == "u:-1.iota.u:-2.u:-t");
  CHECK(w.product().to_string() == "[[1,2t],[2,t+2]]");
  CHECK(w.size() == 4);

  // product equals the right-to-left composition of the token matrices
  GammaElem acc = identity_matrix(F3);
  for (const Token& tok : w.tokens()) acc = compose(token_matrix(F3, tok), acc);
  CHECK(acc == w.product());

  // minus form only changes the display, not the matrix
  Word plain(F3);
  plain.push_u(Poly(F3, {0, 2}));  // 2t = -t
  CHECK(plain.to_string() == "u:2t");
  Word minus(F3);
  minus.push_u(Poly(F3, {0, 2}), /*minus_form=*/true);
  CHECK(minus.to_string() == "u:-t");
  CHECK(plain.product() == minus.product());

  Word sig(F3);
  sig.push_sigma(2);
  CHECK(sig.to_string() == "sigma:2");
  CHECK(sig.product() == gen_sigma(F3, 2));
}

TEST_CASE("parse_word reverses the displayed order back to application order") {
  FieldSpec F3(3);
  Word w = parse_word(F3, "u:-1.iota.u:-2.u:-t");
  REQUIRE(w.size() == 4);
  CHECK(w.tokens()[0].kind == Token::Kind::U);
  CHECK(w.tokens()[2].kind == Token::Kind::Iota);
  CHECK(w.product().to_string() == "[[1,2t],[2,t+2]]");
  CHECK(parse_word(F3, "sigma:2.iota").product() ==
        compose(gen_sigma(F3, 2), gen_iota(F3)));
  CHECK_THROWS_AS(parse_word(F3, "rho:1"), ParseError);
}

TEST_CASE("parse/print round trip for matrices") {
  for (uint32_t q : {2u, 3u}) {
    FieldSpec F(q);
    Rng rng(q * 13);
    for (int i = 0; i < 200; ++i) {
      GammaElem g = testing::rand_gamma(F, rng, 4, 2);
      CHECK(parse_matrix(F, g.to_string()) == g);
    }
  }
  FieldSpec F4(2, 2, {1, 1, 1});
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    GammaElem g = testing::rand_gamma(F4, rng, 3, 2);
    CHECK(parse_matrix(F4, g.to_string()) == g);
  }
}
