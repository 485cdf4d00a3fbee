#include "qmoy/oracles.hpp"

#include <algorithm>
#include <sstream>

namespace qmoy {

namespace {

// Pure-q pochhammer as a Laurent polynomial in x: prod_{i<k} (1 - x^(e + i*s)).
LaurentX q_pochhammer(int e, int s, int k) {
  LaurentX acc = LaurentX::one();
  for (int i = 0; i < k; ++i)
    acc = acc * (LaurentX::one() - LaurentX::monomial(Rat(1), e + i * s));
  return acc;
}

}  // namespace

LinkPoly t2_formula(long c, int r) {
  if (r < 1) throw compute_error("color must be >= 1");
  LinkPoly total;
  const LinkPoly a_inv = LinkPoly::monomial(Rat(1), -2, 0);       // a^(-1)
  const LinkPoly qa_inv = LinkPoly::monomial(Rat(1), -2, 2);      // q a^(-1)
  for (int k = 0; k <= r; ++k) {
    const long rk = r - k;
    // q^{c((r-k)^2 - k)/2}
    const long twist_x = c * (rk * rk - k);
    const Rat sign = ((c * rk) % 2 == 0) ? Rat(1) : Rat(-1);
    LinkPoly num = LinkPoly::monomial(sign, 2 * r, static_cast<int>(twist_x) - 2 * k - 2 * r);
    num *= pochhammer(qa_inv, -2, k);
    num *= pochhammer(a_inv, -2, 2 * r - k);
    LaurentX den = q_pochhammer(-2, -2, k);
    den = den * q_pochhammer(-2, -2, 2 * (r - k));
    den = den * q_pochhammer(static_cast<int>(-4 * (rk + 1)), -2, k);
    if (den.is_zero())
      throw compute_error("t2_formula: vanishing denominator factor at k=" + std::to_string(k));
    total += num.divided_by(RatFuncX(den));
  }
  // (q^{r(r-1)/2} a^{r/2})^{-c}
  const LinkPoly pre =
      LinkPoly::monomial(Rat(1), static_cast<int>(-r * c), static_cast<int>(-r * (r - 1) * c));
  return pre * total;
}

namespace {

// Traversal schedule of the braid closure: for each letter, the order in
// which its two strands are first visited, walking each component upward
// from the bottom of its smallest strand.
struct VisitPlan {
  // target sign per letter: +1 if the first visitor enters from the left.
  std::vector<int> target_sign;
  // letters ordered by first-visit time
  std::vector<size_t> by_time;
};

VisitPlan plan_visits(const BraidWord& b) {
  const size_t L = b.letters.size();
  VisitPlan plan;
  plan.target_sign.assign(L, 0);
  std::vector<long> first_time(L, -1);
  std::vector<bool> started(static_cast<size_t>(b.strands) + 1, false);
  long time = 0;
  for (int s = 1; s <= b.strands; ++s) {
    if (started[static_cast<size_t>(s)]) continue;
    int col = s;
    do {
      started[static_cast<size_t>(col)] = true;
      for (size_t t = 0; t < L; ++t) {
        const int k = std::abs(b.letters[t]);
        if (col == k) {
          if (first_time[t] < 0) {
            first_time[t] = time;
            plan.target_sign[t] = +1;  // first visitor enters on the left
          }
          ++time;
          col = k + 1;
        } else if (col == k + 1) {
          if (first_time[t] < 0) {
            first_time[t] = time;
            plan.target_sign[t] = -1;
          }
          ++time;
          col = k;
        }
      }
      // closure arc back to the bottom of the same column
    } while (col != s);
  }
  plan.by_time.resize(L);
  for (size_t t = 0; t < L; ++t) plan.by_time[t] = t;
  std::sort(plan.by_time.begin(), plan.by_time.end(),
            [&](size_t a, size_t c) { return first_time[a] < first_time[c]; });
  return plan;
}

LinkPoly skein_rec(const BraidWord& b, int depth) {
  if (depth > 64 || b.letters.size() > 12) throw compute_error("recursion budget exceeded");
  const VisitPlan plan = plan_visits(b);
  // A closure in which every crossing is first visited on its over strand is
  // descending, hence an unlink.
  long mismatch_at = -1;
  for (size_t t : plan.by_time) {
    const int want = plan.target_sign[t];
    const int have = b.letters[t] > 0 ? 1 : -1;
    if (want != have) {
      mismatch_at = static_cast<long>(t);
      break;
    }
  }
  if (mismatch_at < 0) return ConventionMap::unknot().pow(b.closure_components());

  const size_t t = static_cast<size_t>(mismatch_at);
  BraidWord switched = b;
  switched.letters[t] = -switched.letters[t];
  BraidWord smoothed = b;
  smoothed.letters.erase(smoothed.letters.begin() + static_cast<long>(t));
  const LinkPoly ps = skein_rec(switched, depth + 1);
  const LinkPoly p0 = skein_rec(smoothed, depth + 1);
  // a^(1/2) P_+ - a^(-1/2) P_- = -(q^(1/2) - q^(-1/2)) P_0 in the sign
  // convention pinned by t2_formula.
  if (b.letters[t] > 0) {
    // P_+ = a^(-1) P_- - a^(-1/2) z P_0
    return LinkPoly::monomial(Rat(1), -2, 0) * ps -
           LinkPoly::monomial(Rat(1), -1, 0) * ConventionMap::z() * p0;
  }
  // P_- = a P_+ + a^(1/2) z P_0
  return LinkPoly::monomial(Rat(1), 2, 0) * ps +
         LinkPoly::monomial(Rat(1), 1, 0) * ConventionMap::z() * p0;
}

}  // namespace

LinkPoly homfly_skein(const BraidWord& b) {
  b.validate();
  if (b.letters.size() > 12) throw compute_error("recursion budget exceeded");
  return skein_rec(b, 0);
}

namespace {

std::string diff_detail(const LinkPoly& x, const LinkPoly& y) {
  std::ostringstream os;
  os << "lhs = " << x.str() << " ; rhs = " << y.str();
  return os.str();
}

}  // namespace

CrosscheckReport crosscheck(const BraidWord& b, int r, const std::vector<int>& Ns,
                            const EvalOptions& opt) {
  CrosscheckReport rep;
  const LinkPoly sym = colored_homfly(b, r, opt);

  if (b.strands == 2) {
    long c = 0;
    for (int l : b.letters) c += l > 0 ? 1 : -1;
    const LinkPoly t2 = t2_formula(c, r);
    rep.rows.push_back({"symmetric vs T2(" + std::to_string(c) + "," + std::to_string(r) + ")",
                        sym == t2, sym == t2 ? "" : diff_detail(sym, t2)});
  }
  if (r == 1 && b.letters.size() <= 12) {
    const LinkPoly sk = homfly_skein(b);
    rep.rows.push_back({"symmetric vs skein", sym == sk, sym == sk ? "" : diff_detail(sym, sk)});
  }
  for (int N : Ns) {
    if (N > 4) throw compute_error("crosscheck N must be <= 4");
    bool all = true;
    std::string detail;
    std::vector<int> iv(b.letters.size(), 0);
    for (;;) {
      ResolutionIndex idx;
      idx.r = r;
      idx.i = iv;
      const ResolvedGraph rg = resolve_full(b, idx);
      const LaurentX brute = moy_bruteforce(rg, N);
      const RatFuncX spec_val = antisymmetric_eval(rg, N).at_a_qN(N);
      if (spec_val != RatFuncX(brute)) {
        all = false;
        std::ostringstream os;
        os << "resolution (";
        for (size_t t = 0; t < iv.size(); ++t) os << (t ? "," : "") << iv[t];
        os << "): eval = " << spec_val.str() << " ; brute = " << brute.str();
        detail = os.str();
        break;
      }
      size_t t = 0;
      while (t < iv.size() && iv[t] == r) {
        iv[t] = 0;
        ++t;
      }
      if (t == iv.size()) break;
      ++iv[t];
    }
    rep.rows.push_back({"anti-symmetric vs MOY brute force (N=" + std::to_string(N) + ")", all, detail});
  }
  {
    const LinkPoly as = antisym_homfly(b, r, opt);
    const LinkPoly sym_flip = sym.flipped_q();
    rep.rows.push_back({"symmetry transform (q -> 1/q)", as == sym_flip,
                        as == sym_flip ? "" : diff_detail(as, sym_flip)});
  }
  {
    const LinkPoly mir = colored_homfly(b.mirrored(), r, opt);
    const LinkPoly expect = sym.mirrored();
    rep.rows.push_back({"mirror symmetry", mir == expect, mir == expect ? "" : diff_detail(mir, expect)});
  }
  return rep;
}

}  // namespace qmoy
