#include "qmoy/analysis.hpp"

#include <map>

#include "qmoy/oracles.hpp"

namespace qmoy {

BoundsReport bounds(const BraidWord& b, int r, const EvalOptions& opt) {
  BoundsReport rep;
  rep.diagram = stats(b);
  rep.r = r;
  const int cp = rep.diagram.c_plus, cm = rep.diagram.c_minus;
  const int sp = rep.diagram.s_plus, sm = rep.diagram.s_minus;
  rep.a_bound_x2 = r * (-cp + cm + sp + sm);
  rep.q_upper_x2 = r * (sp - sm + cp + cm * (2 * r - 1));
  if (cm == 0) rep.q_lower_x2 = r * (-sp - sm + cp);

  const LinkPoly p = colored_homfly(b, r, opt);
  rep.a_actual_x2 = p.maxdeg_a();
  rep.q_actual_x2 = p.maxdeg_q();
  rep.a_satisfied = !rep.a_actual_x2 || *rep.a_actual_x2 <= rep.a_bound_x2;
  rep.q_satisfied = !rep.q_actual_x2 || *rep.q_actual_x2 <= rep.q_upper_x2;
  rep.a_attained = rep.a_actual_x2 && *rep.a_actual_x2 == rep.a_bound_x2;
  if (rep.q_lower_x2) {
    rep.p_satisfied = rep.q_actual_x2 && *rep.q_lower_x2 <= *rep.q_actual_x2;
    rep.q_conjectured_equality = rep.q_actual_x2 && *rep.q_actual_x2 == *rep.q_lower_x2;
  }
  return rep;
}

bool operator==(const HeadReport& a, const HeadReport& b) {
  return a.r == b.r && a.d_r_x2 == b.d_r_x2 && a.f_r_alpha == b.f_r_alpha &&
         a.lead_sign == b.lead_sign && a.slices == b.slices;
}

HeadReport head_of_poly(const LinkPoly& p, int r) {
  if (p.is_zero()) throw compute_error("head of the zero polynomial");
  HeadReport rep;
  rep.r = r;
  QSeries s = series_at_q_infinity(p, r + 1);
  s.normalize();
  rep.d_r_x2 = -s.top_x();
  const AlphaPoly& lead = s.slices()[0];
  const int top_alpha = lead.rbegin()->first;
  rep.f_r_alpha = -top_alpha;
  rep.lead_sign = lead.rbegin()->second > 0 ? 1 : -1;
  auto qs = s.q_slices(r);
  for (auto& sl : qs) {
    AlphaPoly shifted;
    for (const auto& [e, c] : sl) shifted[e + rep.f_r_alpha] = c;
    rep.slices.push_back(std::move(shifted));
  }
  return rep;
}

HeadReport head(const BraidWord& b, int r, bool prune, const EvalOptions& opt) {
  for (int l : b.letters)
    if (l < 0) throw compute_error("head needs a positive braid word");
  if (prune) {
    std::map<int, int> occ;
    for (int l : b.letters) ++occ[l];
    for (const auto& [gen, count] : occ)
      if (count < 2)
        throw compute_error("head pruning needs every generator to occur at least twice");
  }
  EvalOptions o = opt;
  o.pruned = prune;
  return head_of_poly(colored_homfly(b, r, o), r);
}

QSeries unknot_head_series(int order) {
  const LinkPoly a_inv = LinkPoly::monomial(Rat(1), -2, 0);
  const LinkPoly q_inv = LinkPoly::monomial(Rat(1), 0, -2);
  return pochhammer_inf(a_inv, -2, order) / pochhammer_inf(q_inv, -2, order);
}

LinkPoly twobraid_head_poly(int r) {
  return pochhammer(LinkPoly::monomial(Rat(1), -2, 0), -2, r);
}

QSeries negative_twobraid_head(int r, int trunc) {
  (void)r;
  if (trunc < 1) throw compute_error("series order must be >= 1");
  const LinkPoly a_inv = LinkPoly::monomial(Rat(1), -2, 0);
  const LinkPoly q_inv = LinkPoly::monomial(Rat(1), 0, -2);
  const LinkPoly q_inv2 = LinkPoly::monomial(Rat(1), 0, -4);
  QSeries num = pochhammer_inf(a_inv, -2, trunc);
  num = num * num;
  return num / (pochhammer_inf(q_inv, -2, trunc) * pochhammer_inf(q_inv2, -2, trunc));
}

std::vector<SlopePoint> slopes(const BraidWord& b, int R, const EvalOptions& opt) {
  std::vector<SlopePoint> out;
  const bool two_braid = b.strands == 2;
  for (int r = 1; r <= R; ++r) {
    // 2-braid closures have the exact closed form; use it so higher colors
    // stay cheap.
    LinkPoly p;
    if (two_braid) {
      long c = 0;
      for (int l : b.letters) c += l > 0 ? 1 : -1;
      p = t2_formula(c, r);
    } else {
      p = colored_homfly(b, r, opt);
    }
    if (p.is_zero()) throw compute_error("zero invariant in slope data");
    SlopePoint pt;
    pt.r = r;
    pt.maxdeg_q_x2 = *p.maxdeg_q();
    Rat v(pt.maxdeg_q_x2, 2L * r * r);
    v.canonicalize();
    pt.normalized = v;
    out.push_back(pt);
  }
  return out;
}

}  // namespace qmoy
