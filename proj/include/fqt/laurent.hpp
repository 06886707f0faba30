#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqt/projective.hpp"

namespace fqt {

// Truncated t^(-1)-adic expansion of a rational function: coefficients for
// exponents top, top-1, ..., top-m+1.  A derived/display type only — every
// decision in the library (degrees, leading terms, CF quotients) is computed
// exactly on rationals, never from truncations.
struct LaurentExpansion {
  const FieldSpec* F;
  int top;                       // exponent of the first stored coefficient
  std::vector<uint32_t> coeffs;  // empty iff the value is exactly 0
  bool exact;                    // expansion terminated within the depth

  std::string to_string() const;
};

// First `depth` coefficients of the expansion of x (starting at exponent
// deg x); pre: x finite, depth >= 1.  exact=true iff the division remainder
// vanished within depth steps.
LaurentExpansion laurent_expand(const ProjPoint& x, int depth);

// Four-way split of a series: polynomial part [x], fractional
// part {x} reported by its degree, leading coefficient [x]_L, and deg x.
// For x = 0: ([x] = 0, deg{x} = -inf, [x]_L = 0 by convention, deg = -inf).
struct Decomposition {
  Poly poly_part;
  Degree frac_degree;
  uint32_t leading;
  Degree degree;
};
Decomposition decompose(const ProjPoint& x);

// Exact single Laurent coefficient of exponent e (used by vertex truncation).
uint32_t laurent_coeff(const ProjPoint& x, int e);

}  // namespace fqt
