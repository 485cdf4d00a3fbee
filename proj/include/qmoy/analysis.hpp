#pragma once

#include <optional>

#include "qmoy/qseries.hpp"
#include "qmoy/statesum.hpp"

namespace qmoy {

// Degree bounds from the diagram data; all degrees are carried in doubled
// units (alpha exponent = 2 * a-degree, x exponent = 2 * q-degree) so every
// half-integer comparison is exact.
struct BoundsReport {
  DiagramStats diagram;
  int r = 1;
  int a_bound_x2 = 0;
  int q_upper_x2 = 0;
  std::optional<int> q_lower_x2;  // only for positive diagrams
  std::optional<int> a_actual_x2;
  std::optional<int> q_actual_x2;
  bool a_satisfied = false;
  bool q_satisfied = false;
  bool p_satisfied = true;   // vacuous unless the diagram is positive
  bool a_attained = false;
  bool q_conjectured_equality = false;  // reported, never asserted
};

BoundsReport bounds(const BraidWord& b, int r, const EvalOptions& opt = {});

// Leading q-expansion data of P_r.
struct HeadReport {
  int r = 1;
  int d_r_x2 = 0;      // 2*d_r, the series starting exponent (P = sum c_j q^{-j})
  int f_r_alpha = 0;   // alpha exponent of the normalizing monomial a^{f_r}
  int lead_sign = 1;   // sign of the leading coefficient, kept out of a^{f_r}
  std::vector<AlphaPoly> slices;  // r leading q-slices after a^{f_r} normalization
};

bool operator==(const HeadReport& a, const HeadReport& b);

HeadReport head(const BraidWord& b, int r, bool prune, const EvalOptions& opt = {});

// Head of a polynomial that is already computed (shared by head() and the
// oracle-driven acceptance paths).
HeadReport head_of_poly(const LinkPoly& p, int r);

// (a^{-1}; q^{-1})_inf / (q^{-1}; q^{-1})_inf to `order` q-levels: the head
// series of the unknot and of every positive braid closure.
QSeries unknot_head_series(int order);

// (a^{-1}; q^{-1})_r, the 2-braid head in closed form.
LinkPoly twobraid_head_poly(int r);

// (a^{-1};q^{-1})_inf^2 / ((q^{-1};q^{-1})_inf (q^{-2};q^{-1})_inf): the head
// series of negative 2-braids.  r is kept in the signature for symmetry with
// the positive case; the series itself does not depend on it.
QSeries negative_twobraid_head(int r, int trunc);

struct SlopePoint {
  int r = 1;
  int maxdeg_q_x2 = 0;  // exact, doubled
  Rat normalized;       // maxdeg_q / r^2
};

// The sequence r |-> maxdeg_q P_r / r^2 for r = 1..R; limit-point reading is
// left to the caller.
std::vector<SlopePoint> slopes(const BraidWord& b, int R, const EvalOptions& opt = {});

}  // namespace qmoy
