#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "fqt/field.hpp"
#include "fqt/laurent.hpp"
#include "fqt/parse.hpp"
#include "fqt/poly.hpp"

using namespace fqt;

namespace {

// Every polynomial of degree <= max_deg (including 0), for exhaustive loops.
std::vector<Poly> all_polys(const FieldSpec& F, int max_deg) {
  std::vector<Poly> out;
  uint64_t total = 1;
  for (int i = 0; i <= max_deg; ++i) total *= F.q();
  for (uint64_t code = 0; code < total; ++code) {
    std::vector<uint32_t> c(size_t(max_deg) + 1);
    uint64_t rest = code;
    for (int i = 0; i <= max_deg; ++i) {
      c[size_t(i)] = uint32_t(rest % F.q());
      rest /= F.q();
    }
    out.push_back(Poly(F, std::move(c)));
  }
  return out;
}

void check_field_axioms(const FieldSpec& F) {
  const uint32_t q = F.q();
  for (uint32_t x = 0; x < q; ++x) {
    CHECK(F.add(x, 0) == x);
    CHECK(F.mul(x, 1) == x);
    CHECK(F.add(x, F.neg(x)) == 0);
    if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
    for (uint32_t y = 0; y < q; ++y) {
      CHECK(F.add(x, y) == F.add(y, x));
      CHECK(F.mul(x, y) == F.mul(y, x));
      CHECK(F.sub(x, y) == F.add(x, F.neg(y)));
      for (uint32_t z = 0; z < q; ++z) {
        CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
        CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      }
    }
  }
  // the multiplicative group has order q - 1
  for (uint32_t x = 1; x < q; ++x) CHECK(F.pow(x, q - 1) == 1);
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
  check_field_axioms(FieldSpec(2));
  check_field_axioms(FieldSpec(3));
  check_field_axioms(FieldSpec(5));
  check_field_axioms(FieldSpec(2, 2, {1, 1, 1}));     // F_4 = F_2[a]/(a^2+a+1)
  check_field_axioms(FieldSpec(3, 2, {1, 0, 1}));     // F_9 = F_3[a]/(a^2+1)
}

TEST_CASE("field construction rejects bad specs") {
  CHECK_THROWS_AS(FieldSpec(1), InvalidFieldSpec);
  CHECK_THROWS_AS(FieldSpec(4), InvalidFieldSpec);   // composite as a prime
  CHECK_THROWS_AS(FieldSpec(6), InvalidFieldSpec);
  // a^2+1 = (a+1)^2 over F_2 is reducible
  CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), InvalidFieldSpec);
  // modulus must be monic of degree k
  CHECK_THROWS_AS(FieldSpec(2, 2, {1, 1}), InvalidFieldSpec);
  CHECK_THROWS_AS(FieldSpec(2, 2, {1, 1, 2}), InvalidFieldSpec);
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK(!is_prime(1));
  CHECK(!is_prime(49));
}

TEST_CASE("field_arith dispatches and checks field identity") {
  FieldSpec F3(3), F3b(3), F5(5);
  FieldElem two(F3, 2), twob(F3b, 2);
  CHECK(field_arith(two, twob, FieldOp::add).v == 1);  // structurally equal specs mix
  CHECK(field_arith(two, two, FieldOp::mul).v == 1);
  CHECK(field_arith(two, two, FieldOp::neg).v == 1);
  CHECK(field_arith(two, two, FieldOp::inv).v == 2);
  CHECK_THROWS_AS(field_arith(two, FieldElem(F5, 2), FieldOp::add), FieldMismatch);
  CHECK_THROWS_AS(field_arith(FieldElem(F3, 0), two, FieldOp::inv), DivisionByZero);
}

TEST_CASE("extension element strings round-trip") {
  FieldSpec F4(2, 2, {1, 1, 1});
  CHECK(F4.elem_to_string(0) == "0");
  CHECK(F4.elem_to_string(1) == "1");
  CHECK(F4.elem_to_string(2) == "a");
  CHECK(F4.elem_to_string(3) == "a+1");
  // a * (a+1) = a^2 + a = 1 in F_4
  CHECK(F4.mul(2, 3) == 1);
  CHECK(F4.elem_from_apoly({0, 0, 1}) == 3);  // a^2 reduces to a+1
  FieldSpec F9(3, 2, {1, 0, 1});
  for (uint32_t x = 0; x < 9; ++x)
    CHECK(F9.elem_from_apoly({x % 3, x / 3}) == x);
}

TEST_CASE("polynomial ring arithmetic") {
  FieldSpec F2(2), F3(3);
  Poly t2 = Poly::t(F2), t3 = Poly::t(F3);
  Poly one3 = Poly::constant(F3, 1);

  CHECK(((t2 + Poly::constant(F2, 1)) * (t2 + Poly::constant(F2, 1))).to_string() == "t^2+1");
  CHECK(((t3 + one3) * (t3 + one3)).to_string() == "t^2+2t+1");
  CHECK((t3 - t3).is_zero());
  CHECK(scale(t3 + one3, 2).to_string() == "2t+2");
  CHECK((-(t3 + one3)).to_string() == "2t+2");
  CHECK(deg(Poly::zero(F2)).is_neg_inf());
  CHECK(deg(Poly::monomial(F3, 2, 5)) == Degree::finite(5));
  CHECK(Degree::finite(2) + Degree::finite(3) == Degree::finite(5));
  CHECK((Degree::neg_inf() + Degree::finite(7)).is_neg_inf());
  CHECK(Degree::neg_inf() < Degree::finite(-100));
  CHECK(Degree::finite(100) < Degree::pos_inf());
  CHECK(-Degree::pos_inf() == Degree::neg_inf());
  CHECK(monic(Poly(F3, {1, 2})).to_string() == "t+2");
  CHECK_THROWS_AS(monic(Poly::zero(F3)), DivisionByZero);
}

TEST_CASE("euclidean division is exhaustive-correct at small degree") {
  for (uint32_t q : {2u, 3u}) {
    FieldSpec F(q);
    std::vector<Poly> fs = all_polys(F, 4), gs = all_polys(F, 2);
    for (const Poly& f : fs)
      for (const Poly& g : gs) {
        if (g.is_zero()) {
          CHECK_THROWS_AS(poly_divmod(f, g), DivisionByZero);
          continue;
        }
        DivModResult d = poly_divmod(f, g);
        CHECK(d.quot * g + d.rem == f);
        CHECK(deg(d.rem) < deg(g));
      }
  }
}

TEST_CASE("gcd is a monic common divisor") {
  FieldSpec F3(3);
  Poly t = Poly::t(F3), one = Poly::constant(F3, 1);
  Poly a = (t + one) * (t + one) * t;            // t(t+1)^2
  Poly b = (t + one) * (t + Poly::constant(F3, 2));  // (t+1)(t+2)
  Poly g = poly_gcd(a, b);
  CHECK(g == t + one);
  CHECK(poly_divmod(a, g).rem.is_zero());
  CHECK(poly_divmod(b, g).rem.is_zero());
  CHECK(poly_gcd(Poly::zero(F3), Poly::zero(F3)).is_zero());
  CHECK(poly_gcd(Poly::zero(F3), scale(t, 2)) == t);  // monic normalization
}

TEST_CASE("laurent expansion matches frozen examples") {
  FieldSpec F3(3);
  LaurentExpansion e = laurent_expand(parse_point(F3, "t^2/(t^2+1)"), 5);
  CHECK(e.top == 0);
  CHECK(e.to_string() == "1+2t^-2+t^-4");
  CHECK(!e.exact);

  // terminating expansion
  LaurentExpansion f = laurent_expand(parse_point(F3, "1/t"), 4);
  CHECK(f.to_string() == "t^-1");
  CHECK(f.exact);

  // remainder hits zero inside the window, but the quotient continues below
  // the requested depth: t^5+1 to depth 3 covers exponents 5,4,3 only
  FieldSpec F2(2);
  LaurentExpansion g = laurent_expand(parse_point(F2, "t^5+1"), 3);
  CHECK(g.top == 5);
  CHECK(g.coeffs == std::vector<uint32_t>{1, 0, 0});
  CHECK(!g.exact);
  CHECK(laurent_expand(parse_point(F2, "t^5+1"), 6).exact);

  LaurentExpansion z = laurent_expand(ProjPoint::zero(F2), 3);
  CHECK(z.coeffs.empty());
  CHECK(z.exact);
  CHECK(z.to_string() == "0");

  CHECK_THROWS_AS(laurent_expand(ProjPoint::infinity(F2), 1), InfinityNotExpandable);
}

TEST_CASE("laurent_coeff agrees with the expansion window") {
  FieldSpec F3(3);
  ProjPoint x = parse_point(F3, "(t^3+2t+1)/(t^2+t+2)");
  LaurentExpansion e = laurent_expand(x, 12);
  for (int i = 0; i < 12; ++i)
    CHECK(laurent_coeff(x, e.top - i) == e.coeffs[size_t(i)]);
  CHECK(laurent_coeff(x, e.top + 1) == 0);
  CHECK(laurent_coeff(ProjPoint::zero(F3), -3) == 0);
}

TEST_CASE("decompose splits a rational exactly") {
  FieldSpec F3(3);
  Decomposition d = decompose(parse_point(F3, "(t^3+2t+1)/(t+1)"));
  // t^3+2t+1 = (t+1)(t^2+2t) + 1, so [x] = t^2+2t and {x} = 1/(t+1)
  CHECK(d.poly_part.to_string() == "t^2+2t");
  CHECK(d.frac_degree == Degree::finite(-1));
  CHECK(d.leading == 1);
  CHECK(d.degree == Degree::finite(2));

  Decomposition z = decompose(ProjPoint::zero(F3));
  CHECK(z.poly_part.is_zero());
  CHECK(z.frac_degree.is_neg_inf());
  CHECK(z.leading == 0);
  CHECK(z.degree.is_neg_inf());

  CHECK_THROWS_AS(decompose(ProjPoint::infinity(F3)), InfinityNotDecomposable);
}

TEST_CASE("decompose agrees with laurent_expand on every small rational") {
  for (uint32_t q : {2u, 3u}) {
    FieldSpec F(q);
    std::vector<Poly> nums = all_polys(F, 3), dens = all_polys(F, 3);
    for (const Poly& n : nums)
      for (const Poly& d : dens) {
        if (d.is_zero()) continue;
        ProjPoint x(n, d);
        Decomposition dec = decompose(x);
        if (x.is_zero()) continue;
        // polynomial part = nonnegative-exponent window of the expansion
        LaurentExpansion e = laurent_expand(x, dec.degree.value() + 8);
        Poly from_series = Poly::zero(F);
        for (size_t i = 0; i < e.coeffs.size(); ++i) {
          int exp = e.top - int(i);
          if (exp >= 0 && e.coeffs[i] != 0)
            from_series = from_series + Poly::monomial(F, e.coeffs[i], uint32_t(exp));
        }
        CHECK(dec.poly_part == from_series);
        CHECK(dec.leading == e.coeffs.front());
        CHECK(dec.degree == Degree::finite(e.top));
      }
  }
}
