#pragma once

#include <map>
#include <string>
#include <vector>

#include "fqt/domain.hpp"
#include "fqt/group.hpp"

namespace fqt {

// Vertex of the Bruhat-Tits tree in end-truncation coordinates: the pair
// (n, f) stands for the coset [[t^n, f], [0, 1]]W, with f a Laurent
// polynomial supported on exponents >= n+1 (negative exponents occur for
// n < -1).  The offset is stored sparsely, keyed by exponent, nonzero
// coefficients only.  The standard vertex is o = (0, 0), the apartment
// vertices are x_i = (i, 0).
struct Vertex {
  int n;
  std::map<int, uint32_t> f;
  const FieldSpec* F;

  bool operator==(const Vertex& o) const { return n == o.n && f == o.f; }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  bool operator<(const Vertex& o) const { return n != o.n ? n < o.n : f < o.f; }

  std::string to_string() const;
};

// Validating constructor: every exponent >= n+1, every coefficient nonzero
// after reduction (throws InvalidVertex otherwise).
Vertex make_vertex(const FieldSpec& F, int n, std::map<int, uint32_t> f);
Vertex standard_vertex(const FieldSpec& F);          // o = (0, 0)
Vertex apartment_vertex(const FieldSpec& F, int i);  // x_i = (i, 0)

// Tree structure: one parent (n+1, f minus its t^(n+1) term) and q children
// (n-1, f + c t^n); every vertex has degree q+1.
Vertex parent(const Vertex& v);
std::vector<Vertex> children(const Vertex& v);
std::vector<Vertex> neighbors(const Vertex& v);

// Graph distance via ascent to the common ancestor.
int distance(const Vertex& v, const Vertex& w);

// The vertex at level n on the geodesic from inf to w: (n, w_{>= n+1}), the
// truncation of w's Laurent expansion to exponents >= n+1.  Pre: w finite.
Vertex end_truncation(const ProjPoint& w, int n);

// The median of three ends: the unique vertex on all three pairwise
// geodesics (the projection of w2 onto the geodesic (w1 w3)).
Vertex tripod_center(const Triple& T);

// Bi-infinite geodesic (w1 w3) with a distinguished parametrization:
// ell(0) = anchor, indices increase toward w3.  `base` records the
// accumulated flow shift (display only).
struct ParamGeodesic {
  ProjPoint w1, w3;
  Vertex anchor;
  int base;

  std::string to_string() const;
};

// Validates w1 != w3 and that the anchor lies on (w1 w3); throws
// AnchorOffGeodesic otherwise.
ParamGeodesic make_geodesic(ProjPoint w1, ProjPoint w3, Vertex anchor, int base = 0);

// ell with ell(-inf) = w1, ell(+inf) = w3, ell(0) = tripod center of T.
ParamGeodesic theta(const Triple& T);

// ell(n): n adjacency steps from the anchor, toward w3 for n > 0.
Vertex vertex_at(const ParamGeodesic& ell, int n);

// The geodesic flow: reanchor so that vertex_at(flow_shift(ell, k), n) =
// vertex_at(ell, n + k).
ParamGeodesic flow_shift(const ParamGeodesic& ell, int k);

// Action of a matrix on vertices (the coset action): column-reduce
// g * [[t^n, f], [0, 1]] over the valuation ring O = F_q[[t^-1]] back to the
// normal form [[t^n', f'], [0, 1]]W.
Vertex act_vertex(const GammaElem& g, const Vertex& v);

// The double-coset class of v: the unique i >= 0 with v in Gamma.x_i,
// computed by reducing the triple (f, f + t^n, inf) — whose tripod center is
// exactly v — and reading the apartment level of the reduced triple's center.
int vertex_class(const Vertex& v);

}  // namespace fqt
