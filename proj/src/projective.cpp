#include "fqt/projective.hpp"

namespace fqt {

ProjPoint::ProjPoint(Poly numerator, Poly denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (!num.F->same(*den.F)) throw FieldMismatch("fraction parts over different fields");
  if (num.is_zero() && den.is_zero()) throw InvalidPoint("0/0 is not a projective point");
  if (den.is_zero()) {
    num = Poly::constant(*num.F, 1);
    return;
  }
  if (num.is_zero()) {
    den = Poly::constant(*den.F, 1);
    return;
  }
  Poly g = poly_gcd(num, den);
  if (!g.is_constant()) {
    num = poly_divmod(num, g).quot;
    den = poly_divmod(den, g).quot;
  }
  uint32_t s = num.F->inv(den.lead());
  num = scale(num, s);
  den = scale(den, s);
}

std::string ProjPoint::to_string() const {
  if (is_inf()) return "inf";
  if (is_poly()) return num.to_string();
  auto wrap = [](const Poly& f) {
    std::string s = f.to_string();
    // Parenthesize multi-term polynomials inside a fraction.
    return s.find('+') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num) + "/" + wrap(den);
}

Degree point_degree(const ProjPoint& w) {
  if (w.is_inf()) return Degree::pos_inf();
  if (w.is_zero()) return Degree::neg_inf();
  return Degree::finite(int(w.num.c.size()) - int(w.den.c.size()));
}

uint32_t point_leading(const ProjPoint& w) {
  if (w.is_inf()) throw InfinityNotDecomposable("leading coefficient of inf");
  if (w.is_zero()) return 0;  // convention
  return w.num.F->mul(w.num.lead(), w.num.F->inv(w.den.lead()));
}

Degree diff_degree(const ProjPoint& w, const ProjPoint& w2) {
  if (w.is_inf() || w2.is_inf())
    throw InfinityNotDecomposable("diff_degree requires finite points");
  return point_degree(rat_sub(w, w2));
}

ProjPoint rat_add(const ProjPoint& a, const ProjPoint& b) {
  return ProjPoint(a.num * b.den + b.num * a.den, a.den * b.den);
}

ProjPoint rat_sub(const ProjPoint& a, const ProjPoint& b) {
  return ProjPoint(a.num * b.den - b.num * a.den, a.den * b.den);
}

ProjPoint rat_mul(const ProjPoint& a, const ProjPoint& b) {
  return ProjPoint(a.num * b.num, a.den * b.den);
}

ProjPoint rat_div(const ProjPoint& a, const ProjPoint& b) {
  if (b.is_zero() && a.is_zero()) throw DivisionByZero("0/0 in rational arithmetic");
  return ProjPoint(a.num * b.den, a.den * b.num);
}

ProjPoint rat_neg(const ProjPoint& a) { return ProjPoint(-a.num, a.den); }

ProjPoint rat_inv(const ProjPoint& a) { return ProjPoint(a.den, a.num); }

Poly poly_part(const ProjPoint& w) {
  if (w.is_inf()) throw InfinityNotDecomposable("polynomial part of inf");
  return poly_divmod(w.num, w.den).quot;
}

std::string Triple::to_string() const {
  return "(" + w[0].to_string() + ", " + w[1].to_string() + ", " + w[2].to_string() + ")";
}

Triple make_triple(ProjPoint w1, ProjPoint w2, ProjPoint w3) {
  if (w1 == w2) throw DistinctnessViolated("triple components 1 and 2 coincide");
  if (w1 == w3) throw DistinctnessViolated("triple components 1 and 3 coincide");
  if (w2 == w3) throw DistinctnessViolated("triple components 2 and 3 coincide");
  return Triple{{std::move(w1), std::move(w2), std::move(w3)}};
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    out += a[i].to_string();
    if (i == 0 && a.size() > 1)
      out += "; ";
    else if (i + 1 < a.size())
      out += ", ";
  }
  return out + "]";
}

ContinuedFraction cf_expand(const ProjPoint& w) {
  if (w.is_inf()) throw InfinityNotExpandable("continued fraction of inf");
  ContinuedFraction cf;
  Poly num = w.num, den = w.den;
  while (true) {
    auto [q, r] = poly_divmod(num, den);
    cf.a.push_back(q);
    if (r.is_zero()) return cf;
    num = den;
    den = r;
  }
}

ProjPoint cf_assemble(const ContinuedFraction& cf) {
  if (cf.a.empty()) throw MalformedCF("empty continued fraction");
  for (size_t i = 1; i < cf.a.size(); ++i)
    if (cf.a[i].is_constant())
      throw MalformedCF("partial quotient " + std::to_string(i) + " is constant");
  ProjPoint acc = ProjPoint::from_poly(cf.a.back());
  for (size_t i = cf.a.size() - 1; i-- > 0;)
    acc = rat_add(ProjPoint::from_poly(cf.a[i]), rat_inv(acc));
  return acc;
}

}  // namespace fqt
