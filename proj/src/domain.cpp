#include "fqt/domain.hpp"

#include "fqt/laurent.hpp"

namespace fqt {

std::string MembershipMask::to_string() const {
  std::string flags;
  auto add = [&flags](bool on, const char* name) {
    if (!on) return;
    if (!flags.empty()) flags += ",";
    flags += name;
  };
  add(s0, "s0");
  add(s1, "s1");
  add(s2, "s2");
  add(s3, "s3");
  return "{" + flags + "} in_S=" + (in_S() ? "true" : "false");
}

MembershipMask membership(const Triple& T) {
  const ProjPoint& w1 = T[0];
  const ProjPoint& w2 = T[1];
  const ProjPoint& w3 = T[2];
  Degree d1 = point_degree(w1), d2 = point_degree(w2), d3 = point_degree(w3);

  bool s0;
  if (w2.is_inf())
    s0 = false;
  else if (w2.is_zero())
    s0 = !w1.is_inf() && point_leading(w1) == 1;
  else
    s0 = point_leading(w2) == 1;

  bool s1 = d1 < Degree::finite(0) && Degree::finite(0) < d3;
  bool s2 = d1 != d2 && d2 < d3;
  bool s3 = false;
  if (!w1.is_inf() && !w2.is_inf())
    s3 = d1 == d2 && d2.is_finite() && diff_degree(w1, w2) == d1;
  return MembershipMask{s0, s1, s2, s3};
}

namespace {

// Total continued-fraction length of a point, counting inf as one quotient;
// feeds the iteration cap.
int cf_length(const ProjPoint& w) {
  if (w.is_inf()) return 1;
  return int(cf_expand(w).a.size());
}

struct Machine {
  const FieldSpec& F;
  Triple cur;
  Word word;
  int passes = 0;

  explicit Machine(const Triple& T) : F(T[0].field()), cur(T), word(F) {}

  void apply(const GammaElem& g) { cur = act_triple(g, cur); }

  void mv_iota() {
    word.push_iota();
    apply(gen_iota(F));
  }
  // u_{-a} recorded in minus form (a is the stripped quotient).
  void mv_u_minus(const Poly& a) {
    Poly f = -a;
    word.push_u(f, true);
    apply(gen_u(f));
  }
  void mv_sigma(uint32_t c) {
    word.push_sigma(c);
    apply(gen_sigma(F, c));
  }
};

}  // namespace

ReductionResult reduce(const Triple& T) {
  Machine m(T);
  const FieldSpec& F = m.F;
  const int cap = 4 * (cf_length(T[0]) + cf_length(T[1]) + cf_length(T[2])) + 16;

  while (true) {
    if (++m.passes > cap)
      throw ReductionDiverged("no S-representative after " + std::to_string(cap) +
                              " passes for " + T.to_string());
    const ProjPoint& w1 = m.cur[0];
    const ProjPoint& w2 = m.cur[1];
    const ProjPoint& w3 = m.cur[2];

    // Normalize the first end: send inf away, then strip [w1].
    if (w1.is_inf()) {
      if (!w3.is_inf() && point_degree(w3) > Degree::finite(0)) {
        // A bare iota would bounce back through (0, ., proper w3); strip the
        // head of w3 first so the inversion lands on positive degree.
        m.mv_u_minus(poly_part(w3));
      }
      m.mv_iota();
      continue;
    }
    Poly a = poly_part(w1);
    if (!a.is_zero()) {
      m.mv_u_minus(a);
      continue;
    }

    // Here w1 = 0 or deg w1 < 0, hence S1 holds iff deg w3 > 0.
    MembershipMask mask = membership(m.cur);
    if (mask.s1 && (mask.s2 || mask.s3)) {
      uint32_t lam = w2.is_zero() ? point_leading(w1) : point_leading(w2);
      uint32_t c = F.inv(lam);
      if (c != 1) m.mv_sigma(c);
      break;
    }

    if (!(point_degree(w3) > Degree::finite(0))) {
      // S1 fails: walk the shared continued fraction of (w1, w3) one level.
      // w3 is finite here (inf would satisfy S1).
      Poly e = poly_part(w3);
      if (!e.is_zero()) m.mv_u_minus(e);  // nonzero constant head
      m.mv_iota();
      continue;
    }

    // S1 holds but S2 and S3 both fail.
    if (w2.is_inf()) {
      m.mv_u_minus(poly_part(w3));
      m.mv_iota();
      continue;
    }
    if (!(point_degree(w2) < point_degree(w3))) {
      Poly b0 = poly_part(w2);
      Poly c0 = poly_part(w3);
      // Shared head: strip it; distinct heads: translate by the head of w3.
      m.mv_u_minus(b0 == c0 ? b0 : c0);
      m.mv_iota();
      continue;
    }
    // deg w1 = deg w2 < 0 with equal leading terms: invert to expose the
    // shared quotients of (w1, w2); later passes strip them one by one.
    m.mv_iota();
  }

  return ReductionResult{std::move(m.word), std::move(m.cur), m.passes};
}

std::optional<GammaElem> orbit_equivalent(const Triple& T1, const Triple& T2) {
  ReductionResult r1 = reduce(T1);
  ReductionResult r2 = reduce(T2);
  if (r1.reduced != r2.reduced) return std::nullopt;
  GammaElem g = compose(inverse(r2.gamma.product()), r1.gamma.product());
  if (act_triple(g, T1) != T2)
    throw Error("Internal", "orbit witness failed verification");
  return g;
}

}  // namespace fqt
