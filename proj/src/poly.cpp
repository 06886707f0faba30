#include "fqt/poly.hpp"

#include <cassert>

namespace fqt {

int Degree::value() const {
  if (kind_ != 0) throw Error("Internal", "value() on non-finite degree");
  return v_;
}

Degree Degree::operator+(const Degree& o) const {
  if (kind_ == 0 && o.kind_ == 0) return finite(v_ + o.v_);
  assert(kind_ + o.kind_ != 0 || kind_ == 0);  // never -inf + +inf
  return (kind_ != 0) ? *this : o;
}

Degree Degree::operator-() const {
  if (kind_ == 0) return finite(-v_);
  return kind_ < 0 ? pos_inf() : neg_inf();
}

std::string Degree::to_string() const {
  if (kind_ < 0) return "-inf";
  if (kind_ > 0) return "inf";
  return std::to_string(v_);
}

namespace {
void trim(std::vector<uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
void check_field(const Poly& a, const Poly& b) {
  if (!a.F->same(*b.F)) throw FieldMismatch("polynomials over different fields");
}
}  // namespace

Poly::Poly(const FieldSpec& spec, std::vector<uint32_t> coeffs) : F(&spec), c(std::move(coeffs)) {
  for (auto& x : c) x %= spec.q();
  trim(c);
}

Poly Poly::constant(const FieldSpec& spec, uint32_t v) {
  Poly f(spec);
  if (v % spec.q() != 0) f.c = {v % spec.q()};
  return f;
}

Poly Poly::monomial(const FieldSpec& spec, uint32_t coeff, uint32_t e) {
  Poly f(spec);
  if (coeff % spec.q() != 0) {
    f.c.assign(e + 1, 0);
    f.c[e] = coeff % spec.q();
  }
  return f;
}

bool Poly::operator<(const Poly& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  for (size_t i = c.size(); i-- > 0;)
    if (c[i] != o.c[i]) return c[i] < o.c[i];
  return false;
}

Degree deg(const Poly& f) {
  if (f.c.empty()) return Degree::neg_inf();
  return Degree::finite(int(f.c.size()) - 1);
}

Poly operator+(const Poly& a, const Poly& b) {
  check_field(a, b);
  Poly out(*a.F);
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.F->add(a.coeff(i), b.coeff(i));
  trim(out.c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(*a.F);
  out.c = a.c;
  for (auto& x : out.c) x = a.F->neg(x);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_field(a, b);
  Poly out(*a.F);
  if (a.is_zero() || b.is_zero()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = a.F->add(out.c[i + j], a.F->mul(a.c[i], b.c[j]));
  trim(out.c);
  return out;
}

Poly scale(const Poly& a, uint32_t s) {
  Poly out(*a.F);
  if (s % a.F->q() == 0) return out;
  out.c = a.c;
  for (auto& x : out.c) x = a.F->mul(x, s);
  return out;
}

DivModResult poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldSpec& F = *f.F;
  check_field(f, g);
  Poly q(F), r = f;
  if (f.c.size() < g.c.size()) return {q, r};
  q.c.assign(f.c.size() - g.c.size() + 1, 0);
  uint32_t glead_inv = F.inv(g.lead());
  for (size_t i = f.c.size(); i-- > 0;) {
    if (i + 1 < g.c.size()) break;
    uint32_t coef = F.mul(r.c[i], glead_inv);
    if (coef == 0) continue;
    size_t shift = i - (g.c.size() - 1);
    q.c[shift] = coef;
    for (size_t j = 0; j < g.c.size(); ++j)
      r.c[shift + j] = F.sub(r.c[shift + j], F.mul(coef, g.c[j]));
  }
  trim(q.c);
  trim(r.c);
  return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).rem;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return monic(a);
}

Poly monic(const Poly& f) {
  if (f.is_zero()) throw DivisionByZero("cannot normalize the zero polynomial");
  return scale(f, f.F->inv(f.lead()));
}

std::string Poly::to_string() const {
  if (c.empty()) return "0";
  std::string out;
  const bool ext = F->k() > 1;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string cs = F->elem_to_string(c[i]);
    bool needs_paren = ext && cs.find('+') != std::string::npos;
    if (i == 0) {
      out += needs_paren ? ("(" + cs + ")") : cs;
      continue;
    }
    if (c[i] != 1) out += needs_paren ? ("(" + cs + ")") : cs;
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace fqt
