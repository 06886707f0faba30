#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqt/projective.hpp"

namespace fqt {

// Element of PGL_2 over F_q(t) as a canonical 2x2 polynomial matrix
// [[a, b], [c, d]]: denominators cleared, entries divided by their monic
// polynomial content, then scaled so the first nonzero entry in row-major
// order is monic.  Canonical forms are equal iff the PGL classes are equal.
//
// Elements of Gamma = PGL_2(F_q[t]) are exactly those with unit determinant
// after canonicalization; this is a checked flag, not a separate type, since
// phi_inverse produces matrices with nonconstant determinant living in the
// same arithmetic.
struct GammaElem {
  Poly a, b, c, d;
  bool in_gamma;  // derived: det is a nonzero constant

  bool operator==(const GammaElem& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const GammaElem& o) const { return !(*this == o); }
  bool operator<(const GammaElem& o) const;

  const FieldSpec& field() const { return *a.F; }
  Poly det() const { return a * d - b * c; }
  std::string to_string() const;
};

// Canonicalizing constructor; throws SingularMatrix if det = 0.
GammaElem make_matrix(Poly a, Poly b, Poly c, Poly d);
GammaElem identity_matrix(const FieldSpec& F);

// Generators: iota = [[0,1],[1,0]], sigma_c = [[c,0],[0,1]] (c != 0),
// u_f = [[1,f],[0,1]].
GammaElem gen_iota(const FieldSpec& F);
GammaElem gen_sigma(const FieldSpec& F, uint32_t c);  // InvalidGenerator on c = 0
GammaElem gen_u(Poly f);

GammaElem compose(const GammaElem& g, const GammaElem& h);  // g * h
GammaElem inverse(const GammaElem& g);

// Mobius action (a*w + b) / (c*w + d), total on P^1.
ProjPoint act_point(const GammaElem& g, const ProjPoint& w);
Triple act_triple(const GammaElem& g, const Triple& T);

// The inverse of Phi(g) = g.(0, 1, inf): a matrix M with M.(0,1,inf) = T.
// Determinant is nonzero but in general not a unit (element of PGL_2(K)).
GammaElem phi_inverse(const Triple& T);

// One generator token of a Word.  U-tokens produced by the reduction are
// remembered in "minus form": the machine applies u_{-a} for a stripped
// quotient a and displays the token as "u:-<a>" rather than the reduced
// spelling of -a, matching the move names of the reduction procedure.
struct Token {
  enum class Kind { Iota, Sigma, U };
  Kind kind;
  uint32_t c = 0;       // sigma scalar
  std::vector<uint32_t> f;  // u offset coefficients (ascending), canonical
  bool minus_form = false;

  std::string to_string(const FieldSpec& F) const;
};

// Sequence of generators with a cached matrix product.  Tokens are stored in
// application order (tokens[0] acts first); the printed form lists them in
// matrix-product order (leftmost factor applied last), dot-separated.
class Word {
 public:
  explicit Word(const FieldSpec& F) : F_(&F), product_(identity_matrix(F)) {}

  // Appends a token that acts after everything already in the word.
  void push_iota();
  void push_sigma(uint32_t c);
  void push_u(const Poly& f, bool minus_form = false);

  const std::vector<Token>& tokens() const { return toks_; }
  const GammaElem& product() const { return product_; }
  const FieldSpec& field() const { return *F_; }
  size_t size() const { return toks_.size(); }

  std::string to_string() const;

 private:
  const FieldSpec* F_;
  std::vector<Token> toks_;
  GammaElem product_;
};

// Matrix of a single token.
GammaElem token_matrix(const FieldSpec& F, const Token& t);

}  // namespace fqt
