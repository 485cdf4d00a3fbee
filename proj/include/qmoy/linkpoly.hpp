#pragma once

#include <map>
#include <optional>
#include <string>

#include "qmoy/ratfuncx.hpp"

namespace qmoy {

// Laurent polynomial in alpha = a^(1/2) whose coefficients are rational
// functions of x = q^(1/2).  This is the value type of every HOMFLY
// evaluation: exponent n of alpha stands for a^(n/2).
class LinkPoly {
 public:
  LinkPoly() = default;
  explicit LinkPoly(const Rat& c);
  explicit LinkPoly(const RatFuncX& c);

  // c * a^(aexp/2) * q^(xexp/2)
  static LinkPoly monomial(const Rat& c, int aexp, int xexp);
  static LinkPoly one() { return LinkPoly(Rat(1)); }

  bool is_zero() const { return t_.empty(); }
  const std::map<int, RatFuncX>& terms() const { return t_; }
  RatFuncX coeff(int aexp) const;
  void add_term(int aexp, const RatFuncX& c);

  LinkPoly operator+(const LinkPoly& o) const;
  LinkPoly operator-(const LinkPoly& o) const;
  LinkPoly operator*(const LinkPoly& o) const;
  LinkPoly operator-() const;
  LinkPoly& operator+=(const LinkPoly& o);
  LinkPoly& operator-=(const LinkPoly& o);
  LinkPoly& operator*=(const LinkPoly& o) { return *this = *this * o; }
  bool operator==(const LinkPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LinkPoly& o) const { return !(*this == o); }

  LinkPoly scaled(const RatFuncX& c) const;
  LinkPoly scaled(const Rat& c) const;
  // Divide every coefficient by a pure-q rational function.
  LinkPoly divided_by(const RatFuncX& c) const;
  LinkPoly pow(int k) const;  // k >= 0

  LinkPoly flipped_q() const;   // q -> q^(-1)
  LinkPoly mirrored() const;    // a -> a^(-1), q -> q^(-1)

  // Substitute a = q^N exactly; the result is a rational function of x.
  RatFuncX at_a_qN(int N) const;

  // Degrees: alpha units for a (2 * a-degree), x units for q (2 * q-degree).
  // nullopt encodes -infinity (zero polynomial).
  std::optional<int> maxdeg_a() const;
  std::optional<int> maxdeg_q() const;

  std::string str() const;

 private:
  std::map<int, RatFuncX> t_;
};

LinkPoly operator*(const Rat& c, const LinkPoly& p);

}  // namespace qmoy
