#pragma once

#include <vector>

#include "fqt/domain.hpp"

namespace fqt {

// One step of the fundamental-domain flow.
struct FlowStep {
  Triple pre;           // in S
  Triple post_raw;      // varphi_h image
  Triple post_reduced;  // psi_h image = canonical form of post_raw
  Word gamma;           // gamma.post_raw = post_reduced
};

// The diagonal element h = [[t, 0], [0, 1]].
GammaElem h_matrix(const FieldSpec& F);

// Right translation by h seen on triples: Phi(Phi^{-1}(T) * h), computed as
// phi_inverse(T).(0, t, inf).  Total on distinct triples; fixes w1 and w3.
Triple varphi_h(const Triple& T);

// Reference evaluation of the displayed two-branch formula
//   w2' = ((w2-w1) w3 t + (w3-w2) w1) / ((w2-w1) t + w3-w2),
// with the degenerate branch w2' = (w2-w1) t + w1 when w3 = inf.  Valid for
// finite w1, w2; kept as a cross-check against the matrix route.
Triple varphi_h_by_formula(const Triple& T);

// The flow in fundamental-domain coordinates: reduce after varphi_h.
// Pre: membership(T).in_S (throws NotInDomain).
FlowStep psi_h(const Triple& T);

// Sequential psi_h iterates; steps >= 1 (throws InvalidStepCount).
std::vector<FlowStep> flow_orbit(const Triple& T, int steps);

}  // namespace fqt
