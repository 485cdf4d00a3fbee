#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmoy/qseries.hpp"
#include "qmoy/statesum.hpp"

namespace qmoy {

// Dictionary between Morton's (v, z) variables and the (a, q) pair used
// here: v = a^(-1/2) and z = q^(1/2) - q^(-1/2).  All polynomials in this
// library are unreduced (not divided by the unknot value), and the global
// sign is pinned by the 2-braid closed formula at c = 1, r = 1.
struct ConventionMap {
  static LinkPoly z() { return LinkPoly::monomial(Rat(1), 0, 1) - LinkPoly::monomial(Rat(1), 0, -1); }
  static LinkPoly unknot() {
    // -(a^(1/2) - a^(-1/2)) / (q^(1/2) - q^(-1/2))
    LinkPoly s = LinkPoly::monomial(Rat(-1), 1, 0) - LinkPoly::monomial(Rat(-1), -1, 0);
    return s.divided_by(RatFuncX(LaurentX::monomial(Rat(1), 1) - LaurentX::monomial(Rat(1), -1)));
  }
};

// Closed formula for the r-colored invariant of the closure of a 2-braid
// with c crossings (the torus link T(2, c)); exact for every c in Z, r >= 1.
LinkPoly t2_formula(long c, int r);

// Classical skein-relation evaluation of the r = 1 invariant of a braid
// closure; independent of the state-sum pipeline.  Words are capped at 12
// crossings.
LinkPoly homfly_skein(const BraidWord& b);

struct CrosscheckRow {
  std::string name;
  bool ok = false;
  std::string detail;  // on failure, the differing values
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  bool all_ok() const {
    for (const auto& r : rows)
      if (!r.ok) return false;
    return true;
  }
};

// Runs every oracle pair that applies to (b, r): symmetric vs T2 for
// 2-braids, symmetric vs skein at r = 1, anti-symmetric vs brute-force MOY
// at each N, the q -> 1/q symmetry transform, and mirror symmetry.
CrosscheckReport crosscheck(const BraidWord& b, int r, const std::vector<int>& Ns,
                            const EvalOptions& opt = {});

// Pass/fail matrix behind the `selftest` CLI subcommand.
bool run_selftest(bool deep, std::ostream& os);

}  // namespace qmoy
