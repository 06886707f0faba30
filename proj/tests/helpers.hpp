#pragma once

// Shared randomized-value generators for the test binaries.  Every generator
// takes an explicit engine so each test is reproducible from its local seed;
// no global random state.

#include <random>
#include <vector>

#include "fqt/group.hpp"
#include "fqt/parse.hpp"
#include "fqt/projective.hpp"
#include "fqt/tree.hpp"

namespace fqt::testing {

using Rng = std::mt19937_64;

inline Poly rand_poly(const FieldSpec& F, Rng& rng, int max_deg, bool allow_zero = true) {
  std::uniform_int_distribution<int> degree(allow_zero ? -1 : 0, max_deg);
  int d = degree(rng);
  if (d < 0) return Poly::zero(F);
  std::vector<uint32_t> c(size_t(d) + 1);
  std::uniform_int_distribution<uint32_t> any(0, F.q() - 1), lead(1, F.q() - 1);
  for (int i = 0; i < d; ++i) c[size_t(i)] = any(rng);
  c[size_t(d)] = lead(rng);
  return Poly(F, std::move(c));
}

// Random point of P^1; inf with probability 1/10 unless finite_only.
inline ProjPoint rand_point(const FieldSpec& F, Rng& rng, int max_deg,
                            bool finite_only = false) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (!finite_only && pick(rng) == 0) return ProjPoint::infinity(F);
  Poly num = rand_poly(F, rng, max_deg);
  Poly den = rand_poly(F, rng, max_deg, /*allow_zero=*/false);
  return ProjPoint(std::move(num), std::move(den));
}

inline Triple rand_triple(const FieldSpec& F, Rng& rng, int max_deg,
                          bool finite_only = false) {
  while (true) {
    ProjPoint a = rand_point(F, rng, max_deg, finite_only);
    ProjPoint b = rand_point(F, rng, max_deg, finite_only);
    ProjPoint c = rand_point(F, rng, max_deg, finite_only);
    if (a != b && a != c && b != c) return make_triple(a, b, c);
  }
}

// Random in_gamma matrix as a word in the generators.
inline GammaElem rand_gamma(const FieldSpec& F, Rng& rng, int len, int max_deg) {
  GammaElem g = identity_matrix(F);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<uint32_t> unit(1, F.q() - 1);
  for (int i = 0; i < len; ++i) {
    switch (kind(rng)) {
      case 0:
        g = compose(g, gen_iota(F));
        break;
      case 1:
        g = compose(g, gen_sigma(F, unit(rng)));
        break;
      default:
        g = compose(g, gen_u(rand_poly(F, rng, max_deg)));
        break;
    }
  }
  return g;
}

// Random vertex within `radius` parent/child steps of o.
inline Vertex rand_vertex(const FieldSpec& F, Rng& rng, int radius) {
  Vertex v = standard_vertex(F);
  std::uniform_int_distribution<int> stepcount(0, radius);
  int n = stepcount(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> nb = neighbors(v);
    std::uniform_int_distribution<size_t> pick(0, nb.size() - 1);
    v = nb[pick(rng)];
  }
  return v;
}

}  // namespace fqt::testing
