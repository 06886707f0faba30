#include "fqt/group.hpp"

namespace fqt {

namespace {

Poly entries_content(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  Poly g = poly_gcd(poly_gcd(a, b), poly_gcd(c, d));
  return g;
}

}  // namespace

bool GammaElem::operator<(const GammaElem& o) const {
  if (!(a == o.a)) return a < o.a;
  if (!(b == o.b)) return b < o.b;
  if (!(c == o.c)) return c < o.c;
  return d < o.d;
}

std::string GammaElem::to_string() const {
  return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," +
         d.to_string() + "]]";
}

GammaElem make_matrix(Poly a, Poly b, Poly c, Poly d) {
  Poly det = a * d - b * c;
  if (det.is_zero()) throw SingularMatrix("matrix has zero determinant");
  Poly content = entries_content(a, b, c, d);
  if (!content.is_constant()) {
    a = poly_divmod(a, content).quot;
    b = poly_divmod(b, content).quot;
    c = poly_divmod(c, content).quot;
    d = poly_divmod(d, content).quot;
  }
  const Poly* first = nullptr;
  for (const Poly* e : {&a, &b, &c, &d})
    if (!e->is_zero()) {
      first = e;
      break;
    }
  uint32_t s = a.F->inv(first->lead());
  if (s != 1) {
    a = scale(a, s);
    b = scale(b, s);
    c = scale(c, s);
    d = scale(d, s);
  }
  Poly det2 = a * d - b * c;
  bool unit = det2.is_constant() && !det2.is_zero();
  return GammaElem{std::move(a), std::move(b), std::move(c), std::move(d), unit};
}

GammaElem identity_matrix(const FieldSpec& F) {
  return make_matrix(Poly::constant(F, 1), Poly::zero(F), Poly::zero(F), Poly::constant(F, 1));
}

GammaElem gen_iota(const FieldSpec& F) {
  return make_matrix(Poly::zero(F), Poly::constant(F, 1), Poly::constant(F, 1), Poly::zero(F));
}

GammaElem gen_sigma(const FieldSpec& F, uint32_t c) {
  if (c % F.q() == 0) throw InvalidGenerator("sigma requires a nonzero scalar");
  return make_matrix(Poly::constant(F, c), Poly::zero(F), Poly::zero(F), Poly::constant(F, 1));
}

GammaElem gen_u(Poly f) {
  const FieldSpec& F = *f.F;
  return make_matrix(Poly::constant(F, 1), std::move(f), Poly::zero(F), Poly::constant(F, 1));
}

GammaElem compose(const GammaElem& g, const GammaElem& h) {
  return make_matrix(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                     g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

GammaElem inverse(const GammaElem& g) {
  // Adjugate; the determinant scalar is absorbed by canonicalization.
  return make_matrix(g.d, -g.b, -g.c, g.a);
}

ProjPoint act_point(const GammaElem& g, const ProjPoint& w) {
  // Homogeneous evaluation on (num : den); total since det != 0.
  return ProjPoint(g.a * w.num + g.b * w.den, g.c * w.num + g.d * w.den);
}

Triple act_triple(const GammaElem& g, const Triple& T) {
  return Triple{{act_point(g, T[0]), act_point(g, T[1]), act_point(g, T[2])}};
}

GammaElem phi_inverse(const Triple& T) {
  // Solve M.(0,1,inf) = T homogeneously: with w_i = (x_i : y_i) and the
  // pairwise crosses d_ij = x_i y_j - x_j y_i (nonzero by distinctness),
  //   M = [[d21*x3, d32*x1], [d21*y3, d32*y1]].
  // For finite components this is the cleared-denominator form of
  // [[w3(w2-w1), w1(w3-w2)], [w2-w1, w3-w2]].
  const Poly& x1 = T[0].num;
  const Poly& y1 = T[0].den;
  const Poly& x2 = T[1].num;
  const Poly& y2 = T[1].den;
  const Poly& x3 = T[2].num;
  const Poly& y3 = T[2].den;
  Poly d21 = x2 * y1 - x1 * y2;
  Poly d32 = x3 * y2 - x2 * y3;
  return make_matrix(d21 * x3, d32 * x1, d21 * y3, d32 * y1);
}

std::string Token::to_string(const FieldSpec& F) const {
  switch (kind) {
    case Kind::Iota:
      return "iota";
    case Kind::Sigma:
      return "sigma:" + F.elem_to_string(c);
    case Kind::U: {
      Poly poly_f(F, f);
      if (minus_form) return "u:-" + (-poly_f).to_string();
      return "u:" + poly_f.to_string();
    }
  }
  throw Error("Internal", "unreachable token kind");
}

void Word::push_iota() {
  toks_.push_back(Token{Token::Kind::Iota, 0, {}, false});
  product_ = compose(gen_iota(*F_), product_);
}

void Word::push_sigma(uint32_t c) {
  c %= F_->q();
  toks_.push_back(Token{Token::Kind::Sigma, c, {}, false});
  product_ = compose(gen_sigma(*F_, c), product_);
}

void Word::push_u(const Poly& f, bool minus_form) {
  toks_.push_back(Token{Token::Kind::U, 0, f.c, minus_form});
  product_ = compose(gen_u(f), product_);
}

std::string Word::to_string() const {
  if (toks_.empty()) return "identity";
  std::string out;
  for (size_t i = toks_.size(); i-- > 0;) {
    out += toks_[i].to_string(*F_);
    if (i > 0) out += ".";
  }
  return out;
}

GammaElem token_matrix(const FieldSpec& F, const Token& t) {
  switch (t.kind) {
    case Token::Kind::Iota:
      return gen_iota(F);
    case Token::Kind::Sigma:
      return gen_sigma(F, t.c);
    case Token::Kind::U:
      return gen_u(Poly(F, t.f));
  }
  throw Error("Internal", "unreachable token kind");
}

}  // namespace fqt
