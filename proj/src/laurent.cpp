#include "fqt/laurent.hpp"

namespace fqt {

namespace {

// Shifted Euclidean quotient: floor(num * t^K / den).  The coefficient of t^e
// (e >= -K) in the expansion of num/den is the coefficient of t^(e+K) here.
DivModResult shifted_divmod(const ProjPoint& x, int K) {
  Poly shifted = x.num * Poly::monomial(x.field(), 1, uint32_t(K));
  return poly_divmod(shifted, x.den);
}

}  // namespace

LaurentExpansion laurent_expand(const ProjPoint& x, int depth) {
  if (x.is_inf()) throw InfinityNotExpandable("cannot expand inf");
  if (depth < 1) throw InvalidStepCount("expansion depth must be >= 1");
  const FieldSpec& F = x.field();
  if (x.is_zero()) return LaurentExpansion{&F, 0, {}, true};
  int top = point_degree(x).value();
  int low = top - depth + 1;              // smallest exponent in the window
  int K = low < 0 ? -low : 0;
  auto [Q, R] = shifted_divmod(x, K);
  LaurentExpansion out{&F, top, std::vector<uint32_t>(size_t(depth), 0), R.is_zero()};
  for (int i = 0; i < depth; ++i) out.coeffs[size_t(i)] = Q.coeff(size_t(top - i + K));
  // Exactness also requires no terms below the window inside the quotient.
  for (int e = low + K; e-- > 0;)
    if (Q.coeff(size_t(e)) != 0) out.exact = false;
  return out;
}

uint32_t laurent_coeff(const ProjPoint& x, int e) {
  if (x.is_inf()) throw InfinityNotExpandable("cannot expand inf");
  if (x.is_zero()) return 0;
  int K = e < 0 ? -e : 0;
  auto [Q, R] = shifted_divmod(x, K);
  return Q.coeff(size_t(e + K));
}

Decomposition decompose(const ProjPoint& x) {
  if (x.is_inf()) throw InfinityNotDecomposable("cannot decompose inf");
  Poly part = poly_part(x);
  ProjPoint frac = rat_sub(x, ProjPoint::from_poly(part));
  return Decomposition{part, point_degree(frac), point_leading(x), point_degree(x)};
}

std::string LaurentExpansion::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    int e = top - int(i);
    if (!out.empty()) out += "+";
    std::string cs = F->elem_to_string(coeffs[i]);
    bool paren = F->k() > 1 && cs.find('+') != std::string::npos;
    if (e == 0) {
      out += paren ? "(" + cs + ")" : cs;
      continue;
    }
    if (coeffs[i] != 1 || paren) out += paren ? "(" + cs + ")" : cs;
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fqt
