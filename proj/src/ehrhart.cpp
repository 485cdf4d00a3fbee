#include "qmoy/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qmoy {

long LinearForm::operator()(const std::vector<long>& pt) const {
  if (pt.size() != coeffs.size()) throw compute_error("linear form dimension mismatch");
  long s = 0;
  for (size_t i = 0; i < pt.size(); ++i) s += coeffs[i] * pt[i];
  return s;
}

namespace {

// Exact solve of M t = p for the coefficient vector t (columns of M are the
// lifted simplex generators).  Returns false if inconsistent.
bool solve_exact(const std::vector<std::vector<Rat>>& M, const std::vector<Rat>& p,
                 std::vector<Rat>* t_out) {
  const size_t rows = M.size(), cols = M.empty() ? 0 : M[0].size();
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) A[r][c] = M[r][c];
    A[r][cols] = p[r];
  }
  std::vector<long> pivot_col_of_row(rows, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pr = rank;
    while (pr < rows && A[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(A[rank], A[pr]);
    const Rat inv = Rat(1) / A[rank][c];
    for (size_t cc = c; cc <= cols; ++cc) A[rank][cc] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      const Rat f = A[r][c];
      for (size_t cc = c; cc <= cols; ++cc) A[r][cc] -= f * A[rank][cc];
    }
    pivot_col_of_row[rank] = static_cast<long>(c);
    ++rank;
  }
  // Inconsistency: a zero row with nonzero rhs.
  for (size_t r = rank; r < rows; ++r)
    if (A[r][cols] != 0) return false;
  std::vector<Rat> t(cols, Rat(0));
  for (size_t r = 0; r < rank; ++r) t[static_cast<size_t>(pivot_col_of_row[r])] = A[r][cols];
  // Columns are linearly independent for simplices, so the solution is unique;
  // verify anyway.
  for (size_t r = 0; r < rows; ++r) {
    Rat s(0);
    for (size_t c = 0; c < cols; ++c) s += M[r][c] * t[c];
    if (s != p[r]) return false;
  }
  if (t_out) *t_out = t;
  return true;
}

std::vector<std::vector<Rat>> lifted_matrix(const LatticeSimplex& S) {
  const size_t m = static_cast<size_t>(S.ambient_dim());
  const size_t n = S.verts.size();
  std::vector<std::vector<Rat>> M(m + 1, std::vector<Rat>(n));
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = 0; r < m; ++r) M[r][c] = Rat(S.verts[c][r]);
    M[m][c] = Rat(1);
  }
  return M;
}

void box_walk(const std::vector<long>& lo, const std::vector<long>& hi,
              const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> pt = lo;
  if (pt.empty()) {
    visit(pt);
    return;
  }
  for (;;) {
    visit(pt);
    size_t i = 0;
    while (i < pt.size() && pt[i] == hi[i]) {
      pt[i] = lo[i];
      ++i;
    }
    if (i == pt.size()) break;
    ++pt[i];
  }
}

}  // namespace

void LatticeSimplex::validate() const {
  if (verts.empty()) throw compute_error("simplex needs at least one vertex");
  for (const auto& v : verts)
    if (static_cast<int>(v.size()) != ambient_dim())
      throw compute_error("simplex vertex dimension mismatch");
  // Affine independence = linear independence of lifted columns.
  auto M = lifted_matrix(*this);
  const size_t rows = M.size(), cols = verts.size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pr = rank;
    while (pr < rows && M[pr][c] == 0) ++pr;
    if (pr == rows) throw compute_error("simplex vertices are affinely dependent");
    std::swap(M[rank], M[pr]);
    const Rat inv = Rat(1) / M[rank][c];
    for (size_t cc = 0; cc < cols; ++cc) M[rank][cc] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] == 0) continue;
      const Rat f = M[r][c];
      for (size_t cc = 0; cc < cols; ++cc) M[r][cc] -= f * M[rank][cc];
    }
    ++rank;
  }
  if (rank < cols) throw compute_error("simplex vertices are affinely dependent");
}

void Poset::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= size() || hi >= size())
      throw compute_error("poset cover index out of range");
    if (!seen.insert({lo, hi}).second) throw compute_error("duplicate poset cover");
  }
  // Cycle check via DFS.
  auto adj = up_adjacency();
  std::vector<int> state(static_cast<size_t>(size()), 0);
  std::function<void(int)> dfs = [&](int v) {
    state[static_cast<size_t>(v)] = 1;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (state[static_cast<size_t>(w)] == 1) throw compute_error("poset cover relation has a cycle");
      if (state[static_cast<size_t>(w)] == 0) dfs(w);
    }
    state[static_cast<size_t>(v)] = 2;
  };
  for (int v = 0; v < size(); ++v)
    if (state[static_cast<size_t>(v)] == 0) dfs(v);
}

std::vector<std::vector<int>> Poset::up_adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(size()));
  for (const auto& [lo, hi] : covers) adj[static_cast<size_t>(lo)].push_back(hi);
  return adj;
}

std::vector<std::vector<int>> Poset::linear_extensions() const {
  const int m = size();
  std::vector<int> indeg(static_cast<size_t>(m), 0);
  auto adj = up_adjacency();
  for (const auto& [lo, hi] : covers) {
    (void)lo;
    ++indeg[static_cast<size_t>(hi)];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> ext;
  std::vector<bool> used(static_cast<size_t>(m), false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(ext.size()) == m) {
      out.push_back(ext);
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[static_cast<size_t>(v)] || indeg[static_cast<size_t>(v)] != 0) continue;
      used[static_cast<size_t>(v)] = true;
      for (int w : adj[static_cast<size_t>(v)]) --indeg[static_cast<size_t>(w)];
      ext.push_back(v);
      rec();
      ext.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) ++indeg[static_cast<size_t>(w)];
      used[static_cast<size_t>(v)] = false;
    }
  };
  rec();
  return out;
}

void EhrhartPoly::add_part(long a_exp, int i, const RatFuncX& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a_exp,
                             [](const Term& t, long e) { return t.a_exp < e; });
  if (it == terms_.end() || it->a_exp != a_exp) it = terms_.insert(it, Term{a_exp, {}});
  auto& parts = it->parts;
  auto pit = std::lower_bound(parts.begin(), parts.end(), i,
                              [](const std::pair<int, RatFuncX>& p, int ii) { return p.first < ii; });
  if (pit == parts.end() || pit->first != i) {
    parts.insert(pit, {i, c});
  } else {
    pit->second += c;
    if (pit->second.is_zero()) parts.erase(pit);
  }
  if (it->parts.empty()) terms_.erase(it);
}

void EhrhartPoly::add(const EhrhartPoly& o) {
  for (const auto& t : o.terms_)
    for (const auto& [i, c] : t.parts) add_part(t.a_exp, i, c);
}

bool EhrhartPoly::operator==(const EhrhartPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].a_exp != o.terms_[k].a_exp) return false;
    if (terms_[k].parts != o.terms_[k].parts) return false;
  }
  return true;
}

bool EhrhartPoly::b_free() const { return max_multiplicity() <= 1; }

int EhrhartPoly::max_multiplicity() const {
  int m = 0;
  for (const auto& t : terms_)
    for (const auto& [i, c] : t.parts) m = std::max(m, i);
  return m;
}

LinkPoly EhrhartPoly::evaluate(int a_aexp, int a_xexp, long b, bool flip_q) const {
  LinkPoly out;
  for (const auto& t : terms_) {
    RatFuncX coeff;
    for (const auto& [i, c] : t.parts) {
      const Rat bin = binom_shift(b, i);
      if (bin == 0) continue;
      coeff += bin * (flip_q ? c.flipped() : c);
    }
    if (coeff.is_zero()) continue;
    const long ae = t.a_exp;
    LinkPoly mono = LinkPoly::monomial(Rat(1), static_cast<int>(ae * a_aexp),
                                       static_cast<int>(ae * a_xexp));
    out += mono.scaled(coeff);
  }
  return out;
}

std::map<int, LinkPoly> EhrhartPoly::evaluate_b_poly(int a_aexp, int a_xexp, long u, long v,
                                                     bool flip_q) const {
  std::map<int, LinkPoly> out;
  for (const auto& t : terms_) {
    for (const auto& [i, c] : t.parts) {
      // binom(slot+i-1, i-1) with slot = u + v*b, expanded in b.
      std::vector<Rat> poly{Rat(1)};
      for (int s = 1; s <= i - 1; ++s) {
        // multiply by (u + v*b + s)/s
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t d = 0; d < poly.size(); ++d) {
          next[d] += poly[d] * Rat(u + s, s);
          Rat vv(v, s);
          vv.canonicalize();
          next[d + 1] += poly[d] * vv;
        }
        poly = std::move(next);
      }
      const RatFuncX cc = flip_q ? c.flipped() : c;
      for (size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] == 0) continue;
        LinkPoly mono = LinkPoly::monomial(poly[d], static_cast<int>(t.a_exp * a_aexp),
                                           static_cast<int>(t.a_exp * a_xexp));
        out[static_cast<int>(d)] += mono.scaled(cc);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string EhrhartPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    for (const auto& [i, c] : t.parts) {
      if (!first) os << " + ";
      first = false;
      os << "[" << c.str() << "]";
      if (i > 1) os << "*binom(b+" << i - 1 << "," << i - 1 << ")";
      if (i == 1) os << "";
      if (t.a_exp != 0) os << "*a^" << t.a_exp;
    }
  }
  if (first) os << "0";
  return os.str();
}

EhrhartPoly partial_fractions(const std::vector<RatFuncX>& num,
                              const std::vector<std::pair<long, int>>& groups) {
  int total_mult = 0;
  for (const auto& [e, m] : groups) total_mult += m;
  int num_deg = -1;
  for (int t = static_cast<int>(num.size()) - 1; t >= 0; --t)
    if (!num[static_cast<size_t>(t)].is_zero()) {
      num_deg = t;
      break;
    }
  if (num_deg >= total_mult)
    throw compute_error("partial fractions: generating function is not proper");

  EhrhartPoly out;
  for (size_t j = 0; j < groups.size(); ++j) {
    const long ej = groups[j].first;
    const int mj = groups[j].second;
    // Taylor-expand R_j(w) = num(z(w)) / prod_{k!=j} (1 - q^{e_k} z(w))^{m_k}
    // around w = 0, where z(w) = (1 - w) q^{-e_j}.
    // Numerator as polynomial in w, truncated to degree mj-1.
    std::vector<RatFuncX> nw(static_cast<size_t>(mj), RatFuncX());
    for (int t = 0; t <= num_deg; ++t) {
      if (num[static_cast<size_t>(t)].is_zero()) continue;
      const RatFuncX scale =
          num[static_cast<size_t>(t)] *
          RatFuncX(LaurentX::monomial(Rat(1), static_cast<int>(-2 * ej * t)));
      // (1-w)^t: coefficient of w^l is C(t,l)(-1)^l.
      Rat binom(1);
      for (int l = 0; l < mj && l <= t; ++l) {
        if (l > 0) {
          binom *= Rat(t - l + 1, l);
          binom.canonicalize();
        }
        const Rat sgn = (l % 2 == 0) ? binom : -binom;
        nw[static_cast<size_t>(l)] += sgn * scale;
      }
    }
    // Denominator factors for k != j as polynomials in w: A + B w with
    // A = 1 - q^{e_k - e_j}, B = q^{e_k - e_j}.
    std::vector<RatFuncX> acc = nw;
    for (size_t k = 0; k < groups.size(); ++k) {
      if (k == j) continue;
      const long d = groups[k].first - ej;
      const RatFuncX qd = RatFuncX(LaurentX::monomial(Rat(1), static_cast<int>(2 * d)));
      const RatFuncX A = RatFuncX::one() - qd;
      if (A.is_zero()) throw compute_error("partial fractions: coincident exponents in groups");
      // Invert (A + B w)^{m_k} as a truncated series: first invert (A + B w).
      std::vector<RatFuncX> inv(static_cast<size_t>(mj), RatFuncX());
      const RatFuncX Ainv = RatFuncX::one() / A;
      RatFuncX cur = Ainv;
      for (int l = 0; l < mj; ++l) {
        inv[static_cast<size_t>(l)] = cur;
        cur = -(cur * qd * Ainv);
      }
      for (int rep = 0; rep < groups[k].second; ++rep) {
        std::vector<RatFuncX> next(static_cast<size_t>(mj), RatFuncX());
        for (int a = 0; a < mj; ++a) {
          if (acc[static_cast<size_t>(a)].is_zero()) continue;
          for (int b = 0; a + b < mj; ++b) {
            if (inv[static_cast<size_t>(b)].is_zero()) continue;
            next[static_cast<size_t>(a + b)] +=
                acc[static_cast<size_t>(a)] * inv[static_cast<size_t>(b)];
          }
        }
        acc = std::move(next);
      }
    }
    // C_{ij} = coefficient of w^{mj - i}.
    for (int i = 1; i <= mj; ++i) {
      const RatFuncX& c = acc[static_cast<size_t>(mj - i)];
      if (!c.is_zero()) out.add_part(ej, i, c);
    }
  }
  return out;
}

namespace {

LaurentX q_to_the(long e) { return LaurentX::monomial(Rat(1), static_cast<int>(2 * e)); }

}  // namespace

LaurentX weighted_count(const LatticeSimplex& S, const LinearForm& lam, long N, bool interior) {
  if (N < 0) throw compute_error("weighted_count needs N >= 0");
  S.validate();
  const int m = S.ambient_dim();
  if (N == 0) {
    // N*Q = {0}.
    if (!interior || S.dim() == 0) return LaurentX::one();
    return LaurentX();
  }
  auto M = lifted_matrix(S);
  std::vector<long> lo(static_cast<size_t>(m)), hi(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    long mn = S.verts[0][static_cast<size_t>(i)], mx = mn;
    for (const auto& v : S.verts) {
      mn = std::min(mn, v[static_cast<size_t>(i)]);
      mx = std::max(mx, v[static_cast<size_t>(i)]);
    }
    lo[static_cast<size_t>(i)] = mn * N;
    hi[static_cast<size_t>(i)] = mx * N;
  }
  LaurentX acc;
  box_walk(lo, hi, [&](const std::vector<long>& pt) {
    std::vector<Rat> rhs(static_cast<size_t>(m) + 1);
    for (int i = 0; i < m; ++i) rhs[static_cast<size_t>(i)] = Rat(pt[static_cast<size_t>(i)]);
    rhs[static_cast<size_t>(m)] = Rat(N);
    std::vector<Rat> t;
    if (!solve_exact(M, rhs, &t)) return;
    for (const Rat& tk : t) {
      if (tk < 0 || (interior && tk == 0)) return;
    }
    acc += q_to_the(lam(pt));
  });
  return acc;
}

LaurentX weighted_count(const Poset& P, const LinearForm& lam, long N, bool interior) {
  if (N < 0) throw compute_error("weighted_count needs N >= 0");
  P.validate();
  const int m = P.size();
  if (N == 0) {
    if (!interior || m == 0) return LaurentX::one();
    return LaurentX();
  }
  std::vector<long> lo(static_cast<size_t>(m), interior ? 1 : 0);
  std::vector<long> hi(static_cast<size_t>(m), interior ? N - 1 : N);
  if (interior && N == 1) return LaurentX();
  LaurentX acc;
  box_walk(lo, hi, [&](const std::vector<long>& pt) {
    for (const auto& [a, b] : P.covers) {
      const long va = pt[static_cast<size_t>(a)], vb = pt[static_cast<size_t>(b)];
      if (interior ? (va >= vb) : (va > vb)) return;
    }
    acc += q_to_the(lam(pt));
  });
  return acc;
}

EhrhartPoly ehrhart_simplex(const LatticeSimplex& S, const LinearForm& lam) {
  S.validate();
  const int m = S.ambient_dim();
  const int n = static_cast<int>(S.verts.size());
  // Numerator: lattice points of the half-open parallelepiped spanned by the
  // lifted generators (v, 1), graded by height in z and weighted by q^lambda.
  std::vector<RatFuncX> num(static_cast<size_t>(n), RatFuncX());
  auto M = lifted_matrix(S);
  std::vector<long> lo(static_cast<size_t>(m) + 1, 0), hi(static_cast<size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i) {
    long neg = 0, pos = 0;
    for (const auto& v : S.verts) {
      neg += std::min(0L, v[static_cast<size_t>(i)]);
      pos += std::max(0L, v[static_cast<size_t>(i)]);
    }
    lo[static_cast<size_t>(i)] = neg;
    hi[static_cast<size_t>(i)] = pos;
  }
  lo[static_cast<size_t>(m)] = 0;
  hi[static_cast<size_t>(m)] = n - 1;  // heights are < n and integral
  std::vector<LaurentX> numq(static_cast<size_t>(n));
  box_walk(lo, hi, [&](const std::vector<long>& pt) {
    std::vector<Rat> rhs(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) rhs[static_cast<size_t>(i)] = Rat(pt[static_cast<size_t>(i)]);
    std::vector<Rat> t;
    if (!solve_exact(M, rhs, &t)) return;
    for (const Rat& tk : t)
      if (tk < 0 || tk >= 1) return;
    std::vector<long> proj(pt.begin(), pt.end() - 1);
    numq[static_cast<size_t>(pt[static_cast<size_t>(m)])] += q_to_the(lam(proj));
  });
  for (int h = 0; h < n; ++h) num[static_cast<size_t>(h)] = RatFuncX(numq[static_cast<size_t>(h)]);

  std::map<long, int> grouped;
  for (const auto& v : S.verts) ++grouped[lam(v)];
  std::vector<std::pair<long, int>> groups(grouped.begin(), grouped.end());
  return partial_fractions(num, groups);
}

EhrhartPoly ehrhart_chain(const std::vector<int>& rho) {
  const int n = static_cast<int>(rho.size());
  // Suffix sums of rho are the values of the linear form on the chain
  // simplex vertices.
  std::map<long, int> grouped;
  long s = 0;
  ++grouped[0];
  for (int k = n - 1; k >= 0; --k) {
    s += rho[static_cast<size_t>(k)];
    ++grouped[s];
  }
  std::vector<std::pair<long, int>> groups(grouped.begin(), grouped.end());
  std::vector<RatFuncX> num{RatFuncX::one()};
  return partial_fractions(num, groups);
}

EhrhartPoly ehrhart_order_polytope(const Poset& P, const LinearForm& lam) {
  P.validate();
  const int m = P.size();
  if (static_cast<int>(lam.coeffs.size()) != m)
    throw compute_error("linear form dimension mismatch");
  EhrhartPoly out;
  for (const auto& ext : P.linear_extensions()) {
    // Half-open chain cell: strict inequality between consecutive extension
    // entries exactly at label descents, which makes the cells disjointly
    // cover the scaled order polytope.
    std::vector<long> vert_lambda(static_cast<size_t>(m) + 1, 0);
    for (int k = 1; k <= m; ++k)
      vert_lambda[static_cast<size_t>(k)] =
          vert_lambda[static_cast<size_t>(k - 1)] + lam.coeffs[static_cast<size_t>(ext[static_cast<size_t>(m - k)])];
    long num_exp = 0;
    int num_zdeg = 0;
    for (int i = 0; i + 1 < m; ++i) {
      if (ext[static_cast<size_t>(i)] > ext[static_cast<size_t>(i + 1)]) {
        const int k = m - 1 - i;  // strict step uses generator k
        num_exp += vert_lambda[static_cast<size_t>(k)];
        ++num_zdeg;
      }
    }
    std::map<long, int> grouped;
    for (int k = 0; k <= m; ++k) ++grouped[vert_lambda[static_cast<size_t>(k)]];
    std::vector<std::pair<long, int>> groups(grouped.begin(), grouped.end());
    std::vector<RatFuncX> num(static_cast<size_t>(num_zdeg) + 1, RatFuncX());
    num[static_cast<size_t>(num_zdeg)] = RatFuncX(q_to_the(num_exp));
    out.add(partial_fractions(num, groups));
  }
  return out;
}

namespace {

bool laurent_equals_linkpoly(const LaurentX& w, const LinkPoly& p) {
  LinkPoly conv;
  conv.add_term(0, RatFuncX(w));
  return conv == p;
}

}  // namespace

bool reciprocity_check(const LatticeSimplex& S, const LinearForm& lam, long N) {
  if (N < 1) throw compute_error("reciprocity needs N >= 1");
  EhrhartPoly E = ehrhart_simplex(S, lam);
  LinkPoly lhs = E.evaluate(0, static_cast<int>(2 * N), -N, true);
  LaurentX rhs = weighted_count(S, lam, N, true);
  if (S.dim() % 2 == 1) rhs = -rhs;
  return laurent_equals_linkpoly(rhs, lhs);
}

bool reciprocity_check(const Poset& P, const LinearForm& lam, long N) {
  if (N < 1) throw compute_error("reciprocity needs N >= 1");
  EhrhartPoly E = ehrhart_order_polytope(P, lam);
  LinkPoly lhs = E.evaluate(0, static_cast<int>(2 * N), -N, true);
  LaurentX rhs = weighted_count(P, lam, N, true);
  if (P.size() % 2 == 1) rhs = -rhs;
  return laurent_equals_linkpoly(rhs, lhs);
}

namespace {

bool degree_bound_holds(const EhrhartPoly& E, long max_lambda) {
  const LinkPoly ev = E.evaluate(2, -2, -1, false);  // a := a/q, b := -1
  if (ev.is_zero()) return true;
  const int maxa = *ev.maxdeg_a();   // alpha units = 2 * a-degree
  const int maxq = *ev.maxdeg_q();   // x units = 2 * q-degree
  return maxa <= 2 * max_lambda && maxq <= -2 * max_lambda;
}

}  // namespace

bool ehrhart_degree_bound_check(const LatticeSimplex& S, const LinearForm& lam) {
  EhrhartPoly E = ehrhart_simplex(S, lam);
  long mx = lam(S.verts[0]);
  for (const auto& v : S.verts) mx = std::max(mx, lam(v));
  return degree_bound_holds(E, mx);
}

bool ehrhart_degree_bound_check(const Poset& P, const LinearForm& lam) {
  EhrhartPoly E = ehrhart_order_polytope(P, lam);
  // max of the form over the order polytope is attained on a vertex, i.e. on
  // the indicator vector of an up-set.
  const int m = P.size();
  auto adj = P.up_adjacency();
  long mx = 0;  // empty up-set
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    bool upset = true;
    for (const auto& [lo, hi] : P.covers) {
      if ((mask >> lo & 1u) && !(mask >> hi & 1u)) {
        upset = false;
        break;
      }
    }
    if (!upset) continue;
    long v = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) v += lam.coeffs[static_cast<size_t>(i)];
    mx = std::max(mx, v);
  }
  return degree_bound_holds(E, mx);
}

}  // namespace qmoy
