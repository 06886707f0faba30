#pragma once

#include <map>
#include <string>

#include "fqt/group.hpp"
#include "fqt/projective.hpp"
#include "fqt/tree.hpp"

namespace fqt {

// Text grammar shared by the CLI and the test fixtures; all parsers are
// whitespace-insensitive and throw ParseError with a character position.
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ['*'] [tpart] | tpart
//   tpart  := 't' ['^' int]            (negative exponents in Laurent contexts)
//   coeff  := uint | amono | '(' apoly ')'
//   amono  := [uint] ['*'] 'a' ['^' uint]
//   point  := part ['/' part] | 'inf'  with part := '(' poly ')' | poly
//   triple := '(' point ',' point ',' point ')'
//   matrix := '[[' poly ',' poly '],[' poly ',' poly ']]'
//   vertex := '(' int ';' laurent-poly ')'
//   word   := token ('.' token)*  with token := 'iota' | 'sigma:' elem | 'u:' poly

Poly parse_poly(const FieldSpec& F, const std::string& text);
// Sparse Laurent polynomial (exponent -> coefficient), negative exponents
// allowed; used for vertex offsets.
std::map<int, uint32_t> parse_laurent(const FieldSpec& F, const std::string& text);
ProjPoint parse_point(const FieldSpec& F, const std::string& text);
Triple parse_triple(const FieldSpec& F, const std::string& text);
GammaElem parse_matrix(const FieldSpec& F, const std::string& text);
Vertex parse_vertex(const FieldSpec& F, const std::string& text);
Word parse_word(const FieldSpec& F, const std::string& text);

// Polynomial in the field generator 'a' with integer coefficients reduced mod
// p, e.g. "a^2+a+1"; returns the coefficient vector (index = exponent).  Used
// to construct extension-field moduli, so it cannot presuppose a FieldSpec.
std::vector<uint32_t> parse_modulus(uint32_t p, const std::string& text);

}  // namespace fqt
