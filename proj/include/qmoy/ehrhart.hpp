#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmoy/linkpoly.hpp"

namespace qmoy {

// Integer linear form on the ambient lattice.
struct LinearForm {
  std::vector<long> coeffs;
  long operator()(const std::vector<long>& pt) const;
};

// Lattice simplex given by affinely independent integer vertices.
struct LatticeSimplex {
  std::vector<std::vector<long>> verts;
  int ambient_dim() const { return verts.empty() ? 0 : static_cast<int>(verts[0].size()); }
  int dim() const { return static_cast<int>(verts.size()) - 1; }
  void validate() const;  // affine independence
};

// Finite poset over named elements; covers are (lower, upper) index pairs.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(elements.size()); }
  void validate() const;  // acyclicity, no duplicate covers
  // Adjacency of the cover relation (lower -> upper).
  std::vector<std::vector<int>> up_adjacency() const;
  std::vector<std::vector<int>> linear_extensions() const;
};

// The two-variable polynomial E_{lambda,Q}(a,b,q) stored in partial-fraction
// form: sum over distinct a-exponents e_j of
//     sum_i C_ij(q) * binom(b+i-1, i-1) * a^(e_j).
class EhrhartPoly {
 public:
  struct Term {
    long a_exp;
    std::vector<std::pair<int, RatFuncX>> parts;  // (i, C_ij), i >= 1, sorted by i
  };

  void add_part(long a_exp, int i, const RatFuncX& c);
  void add(const EhrhartPoly& o);
  const std::vector<Term>& terms() const { return terms_; }
  bool operator==(const EhrhartPoly& o) const;

  // No multiplicity-i part with i >= 2 (the structural reading of
  // b-independence).
  bool b_free() const;
  int max_multiplicity() const;

  // Evaluate with a := alpha^a_aexp * x^a_xexp (a monomial given in output
  // variables), b an integer, and q replaced by q^(-1) when flip_q is set
  // (the flip applies to the stored C_ij coefficients only).
  LinkPoly evaluate(int a_aexp, int a_xexp, long b, bool flip_q) const;

  // Same but with the b slot left symbolic as u + v*b; returns coefficients
  // by b-degree.
  std::map<int, LinkPoly> evaluate_b_poly(int a_aexp, int a_xexp, long u, long v,
                                          bool flip_q) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;  // sorted by a_exp
};

// G(q,z) = num(z) / prod_j (1 - q^(e_j) z)^(m_j) expanded in partial
// fractions over Q(q); num must be proper (z-degree < sum of m_j).
EhrhartPoly partial_fractions(const std::vector<RatFuncX>& num,
                              const std::vector<std::pair<long, int>>& groups);

// Exact brute-force weighted lattice point count W_lambda(N*Q, q); the
// interior flag restricts to the relative interior.
LaurentX weighted_count(const LatticeSimplex& S, const LinearForm& lam, long N, bool interior);
LaurentX weighted_count(const Poset& P, const LinearForm& lam, long N, bool interior);

EhrhartPoly ehrhart_simplex(const LatticeSimplex& S, const LinearForm& lam);
EhrhartPoly ehrhart_order_polytope(const Poset& P, const LinearForm& lam);

// Chain order polytope on |rho| elements with the linear form given by rho;
// the case every state-sum sequence reduces to.
EhrhartPoly ehrhart_chain(const std::vector<int>& rho);

bool reciprocity_check(const LatticeSimplex& S, const LinearForm& lam, long N);
bool reciprocity_check(const Poset& P, const LinearForm& lam, long N);

bool ehrhart_degree_bound_check(const LatticeSimplex& S, const LinearForm& lam);
bool ehrhart_degree_bound_check(const Poset& P, const LinearForm& lam);

}  // namespace qmoy
