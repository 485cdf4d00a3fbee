#pragma once

#include <map>
#include <string>

#include "qmoy/rat.hpp"

namespace qmoy {

// Sparse Laurent polynomial in x = q^(1/2).  The stored exponent n stands
// for q^(n/2), so every half-integer power of q that shows up in the state
// sums is an integer power of x.  No zero coefficients are ever stored.
class LaurentX {
 public:
  LaurentX() = default;
  explicit LaurentX(const Rat& c);
  explicit LaurentX(long c);

  static LaurentX monomial(const Rat& c, int xexp);
  // q^k as a LaurentX, i.e. x^(2k).
  static LaurentX q_power(int k) { return monomial(Rat(1), 2 * k); }
  static LaurentX one() { return LaurentX(Rat(1)); }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  const std::map<int, Rat>& terms() const { return t_; }
  int min_exp() const;
  int max_exp() const;
  Rat coeff(int xexp) const;
  Rat leading_coeff() const;

  LaurentX& operator+=(const LaurentX& o);
  LaurentX& operator-=(const LaurentX& o);
  LaurentX operator+(const LaurentX& o) const;
  LaurentX operator-(const LaurentX& o) const;
  LaurentX operator*(const LaurentX& o) const;
  LaurentX operator-() const;
  bool operator==(const LaurentX& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentX& o) const { return t_ != o.t_; }

  LaurentX scaled(const Rat& c) const;
  LaurentX shifted(int k) const;  // multiply by x^k
  LaurentX flipped() const;       // x -> x^(-1), i.e. q -> q^(-1)
  LaurentX pow(int k) const;      // k >= 0

  void add_term(int xexp, const Rat& c);

  // Exact division; throws if the division is not exact.
  LaurentX divexact(const LaurentX& d) const;

  // Monic gcd with min_exp 0.  gcd(0,0) = 0.
  static LaurentX gcd(const LaurentX& a, const LaurentX& b);

  // Renders with explicit q powers, half powers as q^(n/2).
  std::string str() const;

 private:
  std::map<int, Rat> t_;
};

LaurentX operator*(const Rat& c, const LaurentX& p);

}  // namespace qmoy
