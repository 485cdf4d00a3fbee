#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmoy/json_io.hpp"
#include "qmoy/oracles.hpp"

namespace {

using namespace qmoy;

EvalOptions make_options(long max_res, int threads) {
  EvalOptions opt;
  opt.max_resolutions = max_res;
  opt.threads = threads;
  if (const char* env = std::getenv("HOMFLY_MAX_RESOLUTIONS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) opt.max_resolutions = v;
  }
  return opt;
}

void print_poly(const LinkPoly& p, const std::string& format) {
  if (format == "json")
    std::cout << linkpoly_to_json(p).dump(2) << "\n";
  else
    std::cout << p.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact r-colored HOMFLY invariants of braid closures via MOY state sums"};
  app.require_subcommand(1);

  std::string braid_text, format = "text", poset_file;
  int strands = 0, color = 1, max_color = 3, threads = 0;
  long t2_c = 2, max_res = 65536, recN = 0;
  bool antisymmetric = false, no_prune = false, deep = false, check_b = false;
  std::string resolution_text;

  auto* eval = app.add_subcommand("eval", "Evaluate P_r of a braid closure");
  eval->add_option("--braid", braid_text, "braid word, e.g. \"1 1\" or \"aA\"")->required();
  eval->add_option("--strands", strands, "strand count override");
  eval->add_option("--color", color, "color r >= 1")->required();
  eval->add_flag("--antisymmetric", antisymmetric, "compute the transposed-color invariant");
  eval->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  eval->add_option("--max-resolutions", max_res, "size guard on (r+1)^c");
  eval->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* ehr = app.add_subcommand("ehrhart", "q-Ehrhart polynomial of a poset order polytope");
  ehr->add_option("--poset", poset_file, "poset JSON file")->required();
  ehr->add_option("--check-reciprocity", recN, "verify reciprocity at this N");
  ehr->add_flag("--check-b-independence", check_b, "verify the polynomial has no b part");

  auto* bnd = app.add_subcommand("bounds", "Degree bounds report");
  bnd->add_option("--braid", braid_text)->required();
  bnd->add_option("--strands", strands);
  bnd->add_option("--color", color)->required();
  bnd->add_option("--max-resolutions", max_res);
  bnd->add_option("--threads", threads);

  auto* hd = app.add_subcommand("head", "Leading q-expansion of a positive braid closure");
  hd->add_option("--braid", braid_text)->required();
  hd->add_option("--strands", strands);
  hd->add_option("--color", color)->required();
  hd->add_flag("--no-prune", no_prune, "skip the single-component pruning");
  hd->add_option("--max-resolutions", max_res);
  hd->add_option("--threads", threads);

  auto* sl = app.add_subcommand("slopes", "maxdeg_q P_r / r^2 data for r = 1..R");
  sl->add_option("--braid", braid_text)->required();
  sl->add_option("--strands", strands);
  sl->add_option("--max-color", max_color)->required();
  sl->add_option("--max-resolutions", max_res);
  sl->add_option("--threads", threads);

  auto* orc = app.add_subcommand("oracle", "Reference evaluations");
  auto* orc_t2 = orc->add_subcommand("t2", "closed 2-braid formula");
  orc_t2->add_option("--c", t2_c, "number of crossings (any sign)")->required();
  orc_t2->add_option("--color", color)->required();
  orc_t2->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* orc_sk = orc->add_subcommand("skein", "classical skein evaluation (r = 1)");
  orc_sk->add_option("--braid", braid_text)->required();
  orc_sk->add_option("--strands", strands);
  orc_sk->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  orc->require_subcommand(1);

  auto* st = app.add_subcommand("selftest", "run the oracle crosscheck matrix");
  st->add_flag("--deep", deep, "larger matrix");

  auto* gr = app.add_subcommand("graph", "JSON dump of a resolved MOY graph");
  gr->add_option("--braid", braid_text)->required();
  gr->add_option("--strands", strands);
  gr->add_option("--color", color)->required();
  gr->add_option("--resolution", resolution_text, "space separated i_c values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const EvalOptions opt = make_options(max_res, threads);
    const auto braid = [&]() {
      return parse_braid(braid_text, strands > 0 ? std::optional<int>(strands) : std::nullopt);
    };
    if (eval->parsed()) {
      const LinkPoly p = antisymmetric ? antisym_homfly(braid(), color, opt)
                                       : colored_homfly(braid(), color, opt);
      print_poly(p, format);
    } else if (ehr->parsed()) {
      std::ifstream in(poset_file);
      if (!in) throw parse_error("cannot open poset file: " + poset_file);
      nlohmann::json j;
      in >> j;
      const auto [poset, lam] = poset_from_json(j);
      const EhrhartPoly E = ehrhart_order_polytope(poset, lam);
      std::cout << "E(a,b,q) = " << E.str() << "\n";
      if (recN > 0) {
        std::cout << "W(" << recN << ") = " << weighted_count(poset, lam, recN, false).str() << "\n";
        std::cout << "W_interior(" << recN << ") = "
                  << weighted_count(poset, lam, recN, true).str() << "\n";
        const bool ok = reciprocity_check(poset, lam, recN);
        std::cout << "reciprocity: " << (ok ? "ok" : "FAILED") << "\n";
        if (!ok) return 1;
      }
      if (check_b) {
        const bool ok = E.b_free();
        std::cout << "b-independence: " << (ok ? "ok" : "FAILED (multiplicity "
                  + std::to_string(E.max_multiplicity()) + ")") << "\n";
        if (!ok) return 1;
      }
    } else if (bnd->parsed()) {
      std::cout << bounds_to_json(bounds(braid(), color, opt)).dump(2) << "\n";
    } else if (hd->parsed()) {
      std::cout << head_to_json(head(braid(), color, !no_prune, opt)).dump(2) << "\n";
    } else if (sl->parsed()) {
      std::cout << slopes_to_json(slopes(braid(), max_color, opt)).dump(2) << "\n";
    } else if (orc->parsed()) {
      if (orc_t2->parsed()) print_poly(t2_formula(t2_c, color), format);
      if (orc_sk->parsed()) print_poly(homfly_skein(braid()), format);
    } else if (st->parsed()) {
      const bool ok = run_selftest(deep, std::cout);
      std::cout << (ok ? "selftest: all checks passed" : "selftest: FAILURES above") << "\n";
      if (!ok) return 3;
    } else if (gr->parsed()) {
      const BraidWord b = braid();
      ResolutionIndex idx;
      idx.r = color;
      std::istringstream in(resolution_text);
      int v;
      while (in >> v) idx.i.push_back(v);
      std::cout << resolve(b, idx).json_dump() << "\n";
    }
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
