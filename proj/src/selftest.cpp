#include <iomanip>
#include <ostream>

#include "qmoy/json_io.hpp"
#include "qmoy/oracles.hpp"

namespace qmoy {

namespace {

struct Case {
  std::string word;
  int strands;
  int r;
  std::vector<int> Ns;
};

void print_row(std::ostream& os, const std::string& name, bool ok, const std::string& detail) {
  os << "  " << std::left << std::setw(58) << name << (ok ? "ok" : "FAIL") << "\n";
  if (!ok && !detail.empty()) os << "      " << detail << "\n";
}

}  // namespace

bool run_selftest(bool deep, std::ostream& os) {
  bool all = true;
  std::vector<Case> cases = {
      {"1 1", 2, 1, {2, 3}},
      {"-1 -1", 2, 1, {2}},
      {"1 1 1", 2, 1, {2}},
      {"1", 2, 1, {2}},
      {"1 -2 1 -2", 3, 1, {2}},
  };
  if (deep) {
    cases.push_back({"1 1", 2, 2, {2, 3}});
    cases.push_back({"1 1 1", 2, 2, {2}});
    cases.push_back({"-1 -1 -1", 2, 1, {2}});
    cases.push_back({"-1", 2, 2, {2}});
    cases.push_back({"1 1 1 1 1", 2, 1, {}});
    cases.push_back({"1 2", 3, 1, {2}});
  }
  for (const auto& c : cases) {
    const BraidWord b = parse_braid(c.word, c.strands);
    os << "braid \"" << c.word << "\" (strands " << c.strands << ", color " << c.r << ")\n";
    const CrosscheckReport rep = crosscheck(b, c.r, c.Ns);
    for (const auto& row : rep.rows) {
      print_row(os, row.name, row.ok, row.detail);
      all = all && row.ok;
    }
  }

  os << "markov moves\n";
  {
    const LinkPoly lhs = colored_homfly(parse_braid("1", 2), 1);
    const LinkPoly rhs = colored_homfly(parse_braid("", 1), 1);
    const bool ok = lhs == rhs;
    print_row(os, "positive stabilization (sigma_1 in B2 vs empty B1)", ok, "");
    all = all && ok;
  }
  {
    const LinkPoly lhs = colored_homfly(parse_braid("1 1", 3), 1);
    const LinkPoly rhs = colored_homfly(parse_braid("2 2", 3), 1);
    const bool ok = lhs == rhs;
    print_row(os, "conjugate words (sigma_1^2 vs sigma_2^2 in B3)", ok, "");
    all = all && ok;
  }
  {
    const LinkPoly lhs = colored_homfly(parse_braid("1 1 1", 2), 1);
    const LinkPoly rhs = colored_homfly(parse_braid("1 1 1 2", 3), 1);
    const bool ok = lhs == rhs;
    print_row(os, "positive stabilization (trefoil in B2 vs B3)", ok, "");
    all = all && ok;
  }

  os << "q-Ehrhart\n";
  {
    Poset chain2;
    chain2.elements = {"x1", "x2"};
    chain2.covers = {{0, 1}};
    LinearForm lam;
    lam.coeffs = {1, -1};
    const bool rec_ok = reciprocity_check(chain2, lam, 3);
    print_row(os, "chain-of-2 reciprocity at N=3", rec_ok, "");
    all = all && rec_ok;
    const LaurentX w3 = weighted_count(chain2, lam, 3, false);
    LaurentX expect;
    expect.add_term(0, Rat(4));
    expect.add_term(-2, Rat(3));
    expect.add_term(-4, Rat(2));
    expect.add_term(-6, Rat(1));
    const bool w_ok = w3 == expect;
    print_row(os, "chain-of-2 weighted count at N=3", w_ok, "");
    all = all && w_ok;
  }
  return all;
}

}  // namespace qmoy
