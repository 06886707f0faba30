#pragma once

#include <optional>
#include <string>

#include "fqt/group.hpp"

namespace fqt {

// The four membership flags of the strong fundamental domain
//   S = S0 and S1 and (S2 or S3):
//   S0: the middle end has leading coefficient 1,
//   S1: deg w1 < 0 < deg w3,
//   S2: deg w1 != deg w2 < deg w3,
//   S3: deg w1 = deg w2 = deg(w1 - w2)  (finite degrees only).
//
// Degenerate middle ends: [inf]_L counts as failing S0.  For w2 = 0 the
// leading coefficient of the middle end carries no information ([0]_L = 0),
// and orbits through states (w1, 0, w3) with deg w1 < 0 < deg w3 would have
// no representative at all under a literal reading; S0 is therefore decided
// by [w1]_L = 1 in that case, which restores exactly one representative per
// orbit (the scaling family (c*w1, 0, c*w3) collapses to c = [w1]_L^{-1}).
struct MembershipMask {
  bool s0, s1, s2, s3;
  bool in_S() const { return s0 && s1 && (s2 || s3); }
  std::string to_string() const;
};

MembershipMask membership(const Triple& T);

struct ReductionResult {
  Word gamma;      // gamma.product() maps the input onto `reduced`
  Triple reduced;  // the canonical S-representative of the orbit
  int steps;       // passes of the case machine
};

// Continued-fraction reduction to the canonical orbit representative.
// Iterates one move group per pass:
//   - normalize w1 (iota at infinity, strip the polynomial part),
//   - done when S1 and (S2 or S3): apply the final sigma scaling,
//   - deg w3 <= 0: walk the shared (w1, w3) prefix (iota / iota after u_{-e}),
//   - w2 = inf or deg w2 >= deg w3: u_{-c0} (or prefix step u_{-b0}) then iota,
//   - else (deg w1 = deg w2, shared leading term): iota to strip the (w1, w2)
//     prefix, consumed by the normalization of later passes.
// Composite moves keep w1 normalized, so every pass makes progress into the
// continued fractions; the cap 4*(total CF length) + 16 is a diagnostic guard
// (ReductionDiverged) that is never expected to fire.
ReductionResult reduce(const Triple& T);

// Decides whether T2 = gamma.T1 for some gamma in Gamma, returning a witness.
// Both triples reduce to canonical form; on a match the witness
// g2^{-1} * g1 is verified against the action before being returned.
std::optional<GammaElem> orbit_equivalent(const Triple& T1, const Triple& T2);

}  // namespace fqt
