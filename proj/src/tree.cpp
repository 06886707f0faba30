#include "fqt/tree.hpp"

#include <algorithm>

#include "fqt/laurent.hpp"

namespace fqt {

namespace {

std::string sparse_to_string(const FieldSpec& F, const std::map<int, uint32_t>& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    auto [e, c] = *it;
    if (!out.empty()) out += "+";
    std::string cs = F.elem_to_string(c);
    bool paren = F.k() > 1 && cs.find('+') != std::string::npos;
    if (e == 0) {
      out += paren ? "(" + cs + ")" : cs;
      continue;
    }
    if (c != 1 || paren) out += paren ? "(" + cs + ")" : cs;
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// The sparse offset as an exact rational function (t^min-denominator form).
ProjPoint sparse_to_point(const FieldSpec& F, const std::map<int, uint32_t>& f) {
  if (f.empty()) return ProjPoint::zero(F);
  int min_e = f.begin()->first;
  int shift = min_e < 0 ? -min_e : 0;
  Poly num(F);
  num.c.assign(size_t(f.rbegin()->first + shift) + 1, 0);
  for (auto [e, c] : f) num.c[size_t(e + shift)] = c;
  return ProjPoint(Poly(F, num.c), Poly::monomial(F, 1, uint32_t(shift)));
}

}  // namespace

std::string Vertex::to_string() const {
  return "(" + std::to_string(n) + "; " + sparse_to_string(*F, f) + ")";
}

Vertex make_vertex(const FieldSpec& F, int n, std::map<int, uint32_t> f) {
  for (auto it = f.begin(); it != f.end();) {
    it->second %= F.q();
    if (it->second == 0) {
      it = f.erase(it);
      continue;
    }
    if (it->first < n + 1)
      throw InvalidVertex("offset exponent " + std::to_string(it->first) +
                          " below t^" + std::to_string(n + 1));
    ++it;
  }
  return Vertex{n, std::move(f), &F};
}

Vertex standard_vertex(const FieldSpec& F) { return Vertex{0, {}, &F}; }

Vertex apartment_vertex(const FieldSpec& F, int i) { return Vertex{i, {}, &F}; }

Vertex parent(const Vertex& v) {
  Vertex p{v.n + 1, v.f, v.F};
  p.f.erase(v.n + 1);
  return p;
}

std::vector<Vertex> children(const Vertex& v) {
  std::vector<Vertex> out;
  for (uint32_t c = 0; c < v.F->q(); ++c) {
    Vertex child{v.n - 1, v.f, v.F};
    if (c != 0) child.f[v.n] = c;
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<Vertex> neighbors(const Vertex& v) {
  std::vector<Vertex> out{parent(v)};
  auto kids = children(v);
  out.insert(out.end(), kids.begin(), kids.end());
  return out;
}

int distance(const Vertex& v, const Vertex& w) {
  Vertex a = v, b = w;
  int steps = 0;
  while (a.n < b.n) {
    a = parent(a);
    ++steps;
  }
  while (b.n < a.n) {
    b = parent(b);
    ++steps;
  }
  while (a != b) {
    a = parent(a);
    b = parent(b);
    steps += 2;
  }
  return steps;
}

Vertex end_truncation(const ProjPoint& w, int n) {
  if (w.is_inf()) throw InfinityNotExpandable("no truncation for the inf end");
  const FieldSpec& F = w.field();
  std::map<int, uint32_t> f;
  Degree d = point_degree(w);
  if (d.is_finite() && d.value() >= n + 1) {
    int top = d.value();
    int depth = top - n;  // exponents top .. n+1
    LaurentExpansion exp = laurent_expand(w, depth);
    for (int i = 0; i < depth; ++i)
      if (exp.coeffs[size_t(i)] != 0) f[top - i] = exp.coeffs[size_t(i)];
  }
  return Vertex{n, std::move(f), &F};
}

namespace {

Degree separation(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_inf() || b.is_inf()) return Degree::pos_inf();
  return diff_degree(a, b);
}

}  // namespace

Vertex tripod_center(const Triple& T) {
  // Pairwise separation levels; the ultrametric forces the two largest to be
  // equal, and the center is the truncation of the minimal pair at its level.
  struct Pair {
    Degree d;
    int i, j;
  };
  Pair ps[3] = {{separation(T[0], T[1]), 0, 1},
                {separation(T[0], T[2]), 0, 2},
                {separation(T[1], T[2]), 1, 2}};
  const Pair* min = &ps[0];
  for (const Pair& p : ps)
    if (p.d < min->d) min = &p;
  // Distinctness excludes -inf; at most one component is inf, so the minimal
  // separation is finite.
  return end_truncation(T[min->i], min->d.value());
}

std::string ParamGeodesic::to_string() const {
  return "geodesic(" + w1.to_string() + " -> " + w3.to_string() +
         "; anchor " + anchor.to_string() + ", base " + std::to_string(base) + ")";
}

namespace {

// Intrinsic coordinate chi on the geodesic (w1 w3), strictly increasing
// toward w3.  Both-finite geodesics peak at the apex level D = deg(w1 - w3):
// the w1-side vertex at level m has chi = m, the w3-side one chi = 2D - m.
// With an infinite end the geodesic is a single truncation line.
struct Chart {
  const ProjPoint* w1;
  const ProjPoint* w3;
  bool has_apex;
  int D;

  Vertex at(int chi) const {
    if (!w1->is_inf() && !w3->is_inf())
      return chi <= D ? end_truncation(*w1, chi) : end_truncation(*w3, 2 * D - chi);
    if (w3->is_inf()) return end_truncation(*w1, chi);
    return end_truncation(*w3, -chi);
  }

  // chi of a vertex, or nullopt when off the geodesic.
  std::optional<int> locate(const Vertex& v) const {
    if (!w1->is_inf() && !w3->is_inf()) {
      if (v.n > D) return std::nullopt;
      if (end_truncation(*w1, v.n) == v) return v.n;
      if (end_truncation(*w3, v.n) == v) return 2 * D - v.n;
      return std::nullopt;
    }
    if (w3->is_inf())
      return end_truncation(*w1, v.n) == v ? std::optional<int>(v.n) : std::nullopt;
    return end_truncation(*w3, v.n) == v ? std::optional<int>(-v.n) : std::nullopt;
  }
};

Chart chart_of(const ProjPoint& w1, const ProjPoint& w3) {
  Chart ch{&w1, &w3, false, 0};
  if (!w1.is_inf() && !w3.is_inf()) {
    ch.has_apex = true;
    ch.D = diff_degree(w1, w3).value();
  }
  return ch;
}

}  // namespace

ParamGeodesic make_geodesic(ProjPoint w1, ProjPoint w3, Vertex anchor, int base) {
  if (w1 == w3) throw DistinctnessViolated("geodesic ends coincide");
  Chart ch = chart_of(w1, w3);
  if (!ch.locate(anchor))
    throw AnchorOffGeodesic("anchor " + anchor.to_string() + " not on (" +
                            w1.to_string() + " " + w3.to_string() + ")");
  return ParamGeodesic{std::move(w1), std::move(w3), std::move(anchor), base};
}

ParamGeodesic theta(const Triple& T) {
  return ParamGeodesic{T[0], T[2], tripod_center(T), 0};
}

Vertex vertex_at(const ParamGeodesic& ell, int n) {
  Chart ch = chart_of(ell.w1, ell.w3);
  auto chi0 = ch.locate(ell.anchor);
  if (!chi0) throw AnchorOffGeodesic("anchor left the geodesic");
  return ch.at(*chi0 + n);
}

ParamGeodesic flow_shift(const ParamGeodesic& ell, int k) {
  return ParamGeodesic{ell.w1, ell.w3, vertex_at(ell, k), ell.base + k};
}

Vertex act_vertex(const GammaElem& g, const Vertex& v) {
  const FieldSpec& F = g.field();
  // Columns of g * [[t^n, f], [0, 1]] as exact rationals.
  ProjPoint tn = v.n >= 0
                     ? ProjPoint::from_poly(Poly::monomial(F, 1, uint32_t(v.n)))
                     : ProjPoint(Poly::constant(F, 1), Poly::monomial(F, 1, uint32_t(-v.n)));
  ProjPoint f = sparse_to_point(F, v.f);
  ProjPoint a = rat_mul(ProjPoint::from_poly(g.a), tn);
  ProjPoint c = rat_mul(ProjPoint::from_poly(g.c), tn);
  ProjPoint b = rat_add(rat_mul(ProjPoint::from_poly(g.a), f), ProjPoint::from_poly(g.b));
  ProjPoint d = rat_add(rat_mul(ProjPoint::from_poly(g.c), f), ProjPoint::from_poly(g.d));

  // Column reduction over O = F_q[[t^-1]] (valuation -deg): zero the bottom
  // left entry using column operations with coefficients of degree <= 0,
  // which are exactly the units of the reduction allowed mod W.
  if (!c.is_zero()) {
    if (d.is_zero()) {
      std::swap(a, b);
      std::swap(c, d);
    } else if (point_degree(c) <= point_degree(d)) {
      ProjPoint r = rat_div(c, d);  // in O
      a = rat_sub(a, rat_mul(r, b));
      c = ProjPoint::zero(F);
    } else {
      ProjPoint r = rat_div(d, c);  // in O
      b = rat_sub(b, rat_mul(r, a));
      std::swap(a, b);
      std::swap(c, d);
      c = ProjPoint::zero(F);
    }
  }
  // Triangular form [[A, B], [0, D]]: the vertex is (deg A - deg D,
  // truncation of B/D above that level).
  int n2 = point_degree(a).value() - point_degree(d).value();
  ProjPoint beta = rat_div(b, d);
  Vertex out = end_truncation(beta, n2);
  return out;
}

int vertex_class(const Vertex& v) {
  const FieldSpec& F = *v.F;
  ProjPoint f = sparse_to_point(F, v.f);
  ProjPoint tn = v.n >= 0
                     ? ProjPoint::from_poly(Poly::monomial(F, 1, uint32_t(v.n)))
                     : ProjPoint(Poly::constant(F, 1), Poly::monomial(F, 1, uint32_t(-v.n)));
  Triple probe = make_triple(f, rat_add(f, tn), ProjPoint::infinity(F));
  ReductionResult r = reduce(probe);
  Vertex center = tripod_center(r.reduced);
  // Reduced triples project onto the standard apartment.
  if (!center.f.empty()) throw Error("Internal", "reduced center off the apartment");
  return center.n < 0 ? -center.n : center.n;
}

}  // namespace fqt
