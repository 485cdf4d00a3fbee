#include "qmoy/ratfuncx.hpp"

#include <sstream>

namespace qmoy {

RatFuncX::RatFuncX(const LaurentX& n, const LaurentX& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw compute_error("zero divisor");
  canonicalize();
}

void RatFuncX::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentX::one();
    return;
  }
  // x-power units move into the numerator.
  const int sd = den_.min_exp();
  if (sd != 0) {
    den_ = den_.shifted(-sd);
    num_ = num_.shifted(-sd);
  }
  LaurentX g = LaurentX::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
    const int sd2 = den_.min_exp();
    if (sd2 != 0) {
      den_ = den_.shifted(-sd2);
      num_ = num_.shifted(-sd2);
    }
  }
  const Rat lead = den_.leading_coeff();
  if (lead != 1) {
    den_ = den_.scaled(Rat(1) / lead);
    num_ = num_.scaled(Rat(1) / lead);
  }
}

RatFuncX RatFuncX::operator+(const RatFuncX& o) const {
  return RatFuncX(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFuncX RatFuncX::operator-(const RatFuncX& o) const {
  return RatFuncX(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFuncX RatFuncX::operator*(const RatFuncX& o) const {
  return RatFuncX(num_ * o.num_, den_ * o.den_);
}

RatFuncX RatFuncX::operator/(const RatFuncX& o) const {
  if (o.is_zero()) throw compute_error("zero divisor");
  return RatFuncX(num_ * o.den_, den_ * o.num_);
}

RatFuncX RatFuncX::operator-() const {
  RatFuncX r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncX operator*(const Rat& c, const RatFuncX& f) {
  return RatFuncX(f.num().scaled(c), f.den());
}

std::vector<Rat> RatFuncX::expand_at_infinity(int count) const {
  std::vector<Rat> out(static_cast<size_t>(count < 0 ? 0 : count), Rat(0));
  if (num_.is_zero() || count <= 0) return out;
  // num/den with den = lead * x^D * (1 + sum_{j>=1} d_j x^(-j)).
  const int dn = den_.max_exp();
  const Rat lead = den_.leading_coeff();
  const int top = num_.max_exp() - dn;
  // r holds the running remainder of num * x^(-dn) / lead minus the series so far.
  LaurentX r = num_.shifted(-dn).scaled(Rat(1) / lead);
  LaurentX dnorm = den_.shifted(-dn).scaled(Rat(1) / lead);  // 1 + lower order
  for (int k = 0; k < count; ++k) {
    const int e = top - k;
    Rat c = r.coeff(e);
    out[static_cast<size_t>(k)] = c;
    if (c != 0) r -= dnorm.shifted(e).scaled(c);
  }
  return out;
}

std::string RatFuncX::str() const {
  if (is_polynomial()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

}  // namespace qmoy
