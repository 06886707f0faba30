#pragma once

#include <array>
#include <string>
#include <vector>

#include "fqt/poly.hpp"

namespace fqt {

// A point of P^1(F_q(t)) as a reduced fraction num/den.  Canonical form:
// gcd(num, den) = 1, den monic when nonzero; infinity is num = 1, den = 0.
// Equality is componentwise equality of canonical forms, so ProjPoint values
// are directly comparable.
struct ProjPoint {
  Poly num, den;

  // Canonicalizing constructor; throws InvalidPoint for 0/0.
  ProjPoint(Poly numerator, Poly denominator);

  static ProjPoint infinity(const FieldSpec& F) {
    return ProjPoint(Poly::constant(F, 1), Poly::zero(F));
  }
  static ProjPoint zero(const FieldSpec& F) {
    return ProjPoint(Poly::zero(F), Poly::constant(F, 1));
  }
  static ProjPoint from_poly(Poly f) {
    const FieldSpec& F = *f.F;
    return ProjPoint(std::move(f), Poly::constant(F, 1));
  }

  const FieldSpec& field() const { return *num.F; }
  bool is_inf() const { return den.is_zero(); }
  bool is_zero() const { return num.is_zero(); }
  // Finite point that is a polynomial (denominator 1).
  bool is_poly() const { return den.is_constant() && !den.is_zero(); }

  bool operator==(const ProjPoint& o) const { return num == o.num && den == o.den; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const {
    if (!(den == o.den)) return den < o.den;
    return num < o.num;
  }

  std::string to_string() const;
};

// deg(num) - deg(den); -inf for 0, +inf for infinity.
Degree point_degree(const ProjPoint& w);
// Leading coefficient of the Laurent expansion: lc(num)/lc(den); 0 for the
// zero point by convention; throws InfinityNotDecomposable at infinity.
uint32_t point_leading(const ProjPoint& w);
// deg(w - w'); -inf iff equal; both points must be finite.
Degree diff_degree(const ProjPoint& w, const ProjPoint& w2);

// Exact rational arithmetic on finite points (used by the Mobius machinery
// and the dynamics formula oracle).  Division is projectively total
// (x/0 = inf for x != 0); only 0/0 throws DivisionByZero.
ProjPoint rat_add(const ProjPoint& a, const ProjPoint& b);
ProjPoint rat_sub(const ProjPoint& a, const ProjPoint& b);
ProjPoint rat_mul(const ProjPoint& a, const ProjPoint& b);
ProjPoint rat_div(const ProjPoint& a, const ProjPoint& b);
ProjPoint rat_neg(const ProjPoint& a);
// Projective reciprocal 1/w, total (0 <-> inf).
ProjPoint rat_inv(const ProjPoint& a);

// Polynomial part [w] of a finite point: the Euclidean quotient adjusted so
// that the fractional remainder has negative degree.
Poly poly_part(const ProjPoint& w);

// Mutually distinct ordered boundary triple.
struct Triple {
  std::array<ProjPoint, 3> w;

  const ProjPoint& operator[](size_t i) const { return w[i]; }
  bool operator==(const Triple& o) const { return w == o.w; }
  bool operator!=(const Triple& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Throws DistinctnessViolated naming the (1-based) equal pair.
Triple make_triple(ProjPoint w1, ProjPoint w2, ProjPoint w3);

// Regular continued fraction [a0; a1, ..., am] with polynomial partial
// quotients, nonconstant for index >= 1.  Finite because inputs are rational.
struct ContinuedFraction {
  std::vector<Poly> a;

  std::string to_string() const;
};

// Euclidean CF expansion of a finite point; throws InfinityNotExpandable.
ContinuedFraction cf_expand(const ProjPoint& w);
// Exact bottom-up evaluation; inverse of cf_expand.  Throws MalformedCF if a
// quotient with index >= 1 is constant, or the CF is empty.
ProjPoint cf_assemble(const ContinuedFraction& cf);

}  // namespace fqt
