#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fqt/field.hpp"

namespace fqt {

// Totally ordered degree with the sentinels deg(0) = -inf and deg(inf) = +inf,
// so every degree comparison in the membership predicates is well defined on
// degenerate points.  Finite degrees add; sums involving one sentinel are
// absorbed by it (the opposite-sentinel sum never arises and asserts).
class Degree {
 public:
  static Degree neg_inf() { return Degree(-1, 0); }
  static Degree pos_inf() { return Degree(+1, 0); }
  static Degree finite(int v) { return Degree(0, v); }

  bool is_finite() const { return kind_ == 0; }
  bool is_neg_inf() const { return kind_ < 0; }
  bool is_pos_inf() const { return kind_ > 0; }

  // Value of a finite degree.
  int value() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.kind_ == b.kind_ && (a.kind_ != 0 || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != 0) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }

  Degree operator+(const Degree& o) const;
  Degree operator-() const;

  std::string to_string() const;

 private:
  Degree(int kind, int v) : kind_(kind), v_(v) {}
  int kind_;  // -1: -inf, 0: finite, +1: +inf
  int v_;
};

// Polynomial in t over F_q.  Coefficients are raw field indices, index =
// exponent of t, canonical form: no trailing zeros (zero polynomial = empty
// vector).  Every Poly carries its field.
struct Poly {
  const FieldSpec* F;
  std::vector<uint32_t> c;

  explicit Poly(const FieldSpec& spec) : F(&spec) {}
  Poly(const FieldSpec& spec, std::vector<uint32_t> coeffs);

  static Poly zero(const FieldSpec& spec) { return Poly(spec); }
  static Poly constant(const FieldSpec& spec, uint32_t v);
  // c * t^e (e >= 0)
  static Poly monomial(const FieldSpec& spec, uint32_t coeff, uint32_t e);
  static Poly t(const FieldSpec& spec) { return monomial(spec, 1, 1); }

  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }
  // Leading coefficient; 0 for the zero polynomial.
  uint32_t lead() const { return c.empty() ? 0 : c.back(); }
  uint32_t coeff(size_t e) const { return e < c.size() ? c[e] : 0; }

  bool operator==(const Poly& o) const { return F->same(*o.F) && c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Lexicographic-by-(degree, coefficients) order for use as map keys.
  bool operator<(const Poly& o) const;

  std::string to_string() const;
};

Degree deg(const Poly& f);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, uint32_t s);

// Euclidean division: f = q*g + r with deg r < deg g.  Throws DivisionByZero
// for g = 0.
struct DivModResult {
  Poly quot, rem;
};
DivModResult poly_divmod(const Poly& f, const Poly& g);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// f made monic (throws DivisionByZero on 0).
Poly monic(const Poly& f);

}  // namespace fqt
