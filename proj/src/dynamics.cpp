#include "fqt/dynamics.hpp"

namespace fqt {

GammaElem h_matrix(const FieldSpec& F) {
  return make_matrix(Poly::t(F), Poly::zero(F), Poly::zero(F), Poly::constant(F, 1));
}

Triple varphi_h(const Triple& T) {
  const FieldSpec& F = T[0].field();
  Triple base = make_triple(ProjPoint::zero(F), ProjPoint::from_poly(Poly::t(F)),
                            ProjPoint::infinity(F));
  return act_triple(phi_inverse(T), base);
}

Triple varphi_h_by_formula(const Triple& T) {
  const FieldSpec& F = T[0].field();
  const ProjPoint& w1 = T[0];
  const ProjPoint& w2 = T[1];
  const ProjPoint& w3 = T[2];
  if (w1.is_inf() || w2.is_inf())
    throw InfinityNotDecomposable("formula branch requires finite w1, w2");
  ProjPoint t = ProjPoint::from_poly(Poly::t(F));
  ProjPoint d21 = rat_sub(w2, w1);
  ProjPoint w2p = w3.is_inf()
                      // Degenerate branch (c = 0): w2' = (w2 - w1) t + w1.
                      ? rat_add(rat_mul(d21, t), w1)
                      : rat_div(rat_add(rat_mul(rat_mul(d21, w3), t),
                                        rat_mul(rat_sub(w3, w2), w1)),
                                rat_add(rat_mul(d21, t), rat_sub(w3, w2)));
  return make_triple(w1, w2p, w3);
}

FlowStep psi_h(const Triple& T) {
  if (!membership(T).in_S())
    throw NotInDomain("psi_h requires a triple in S, got " + T.to_string());
  Triple raw = varphi_h(T);
  ReductionResult r = reduce(raw);
  return FlowStep{T, std::move(raw), std::move(r.reduced), std::move(r.gamma)};
}

std::vector<FlowStep> flow_orbit(const Triple& T, int steps) {
  if (steps < 1) throw InvalidStepCount("flow requires steps >= 1");
  std::vector<FlowStep> out;
  Triple cur = T;
  for (int i = 0; i < steps; ++i) {
    out.push_back(psi_h(cur));
    cur = out.back().post_reduced;
  }
  return out;
}

}  // namespace fqt
