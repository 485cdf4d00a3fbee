#pragma once

#include <string>
#include <vector>

#include "qmoy/laurentx.hpp"

namespace qmoy {

// Rational function in x = q^(1/2), kept in a canonical form so equality is
// a plain data comparison: the denominator has min_exp 0, is monic, and is
// coprime to the numerator.
class RatFuncX {
 public:
  RatFuncX() : num_(), den_(LaurentX::one()) {}
  explicit RatFuncX(const Rat& c) : num_(c), den_(LaurentX::one()) {}
  explicit RatFuncX(const LaurentX& n) : num_(n), den_(LaurentX::one()) {}
  RatFuncX(const LaurentX& n, const LaurentX& d);

  static RatFuncX one() { return RatFuncX(Rat(1)); }

  const LaurentX& num() const { return num_; }
  const LaurentX& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFuncX operator+(const RatFuncX& o) const;
  RatFuncX operator-(const RatFuncX& o) const;
  RatFuncX operator*(const RatFuncX& o) const;
  RatFuncX operator/(const RatFuncX& o) const;
  RatFuncX operator-() const;
  RatFuncX& operator+=(const RatFuncX& o) { return *this = *this + o; }
  RatFuncX& operator-=(const RatFuncX& o) { return *this = *this - o; }
  RatFuncX& operator*=(const RatFuncX& o) { return *this = *this * o; }
  bool operator==(const RatFuncX& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFuncX& o) const { return !(*this == o); }

  RatFuncX flipped() const { return RatFuncX(num_.flipped(), den_.flipped()); }

  // maxdeg in x units (= 2 * degree in q); requires nonzero.
  int maxdeg_x() const { return num_.max_exp() - den_.max_exp(); }

  // Laurent expansion at x = infinity: returns `count` coefficients of
  // x^(maxdeg_x()), x^(maxdeg_x()-1), ...  Zero function yields all zeros.
  std::vector<Rat> expand_at_infinity(int count) const;

  std::string str() const;

 private:
  LaurentX num_, den_;
  void canonicalize();
};

RatFuncX operator*(const Rat& c, const RatFuncX& f);

}  // namespace qmoy
