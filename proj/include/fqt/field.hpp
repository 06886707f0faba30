#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqt/error.hpp"

namespace fqt {

// Description of a finite field F_q with q = p^k.  Elements are stored as
// integer indices in [0, q): the index's base-p digits are the coordinates of
// the element relative to the power basis 1, a, ..., a^(k-1), where a is a
// root of the modulus polynomial.  For k = 1 the index is simply the residue
// mod p and the modulus is unused.
//
// FieldSpec instances are immutable and shared by pointer; every value type
// (FieldElem, Poly, ...) keeps a pointer to its spec.  Two specs are
// interchangeable iff they are structurally equal.
class FieldSpec {
 public:
  // Prime field F_p.
  explicit FieldSpec(uint32_t p);

  // Extension field F_{p^k}; modulus = coefficients of a monic irreducible
  // degree-k polynomial in the symbol 'a' over F_p, index = exponent,
  // length k+1.  Irreducibility is checked by trial division.
  FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  bool same(const FieldSpec& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  // Raw value arithmetic on indices in [0, q).
  uint32_t add(uint32_t x, uint32_t y) const;
  uint32_t sub(uint32_t x, uint32_t y) const;
  uint32_t neg(uint32_t x) const;
  uint32_t mul(uint32_t x, uint32_t y) const;
  uint32_t inv(uint32_t x) const;  // throws DivisionByZero on 0
  uint32_t pow(uint32_t x, uint64_t e) const;

  // Element rendering: "0", "2", "a", "a+1", "2a^2+a", ...
  std::string elem_to_string(uint32_t x) const;

  // Element from a polynomial in the generator a (coefficient index =
  // exponent), reduced mod the modulus.  Degree >= k inputs are reduced;
  // requires k > 1 unless the input is constant.
  uint32_t elem_from_apoly(const std::vector<uint32_t>& coeffs) const;

 private:
  std::vector<uint32_t> digits(uint32_t x) const;
  uint32_t undigits(const std::vector<uint32_t>& d) const;

  uint32_t p_, k_, q_;
  std::vector<uint32_t> modulus_;  // empty when k == 1
};

// A field element bound to its spec; the arithmetic wrapper used at API
// boundaries.  Containers (Poly coefficients) store raw indices instead and
// carry a single spec pointer.
struct FieldElem {
  const FieldSpec* F;
  uint32_t v;

  FieldElem(const FieldSpec& spec, uint32_t value) : F(&spec), v(value % spec.q()) {}

  bool operator==(const FieldElem& o) const { return F->same(*o.F) && v == o.v; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  std::string to_string() const { return F->elem_to_string(v); }
};

enum class FieldOp { add, mul, neg, inv };

// The four primitive operations behind one dispatcher; neg and inv ignore y.
FieldElem field_arith(const FieldElem& x, const FieldElem& y, FieldOp op);

bool is_prime(uint32_t n);

}  // namespace fqt
