#include "qmoy/linkpoly.hpp"

#include <sstream>

namespace qmoy {

LinkPoly::LinkPoly(const Rat& c) {
  if (c != 0) t_[0] = RatFuncX(c);
}

LinkPoly::LinkPoly(const RatFuncX& c) {
  if (!c.is_zero()) t_[0] = c;
}

LinkPoly LinkPoly::monomial(const Rat& c, int aexp, int xexp) {
  LinkPoly p;
  if (c != 0) p.t_[aexp] = RatFuncX(LaurentX::monomial(c, xexp));
  return p;
}

RatFuncX LinkPoly::coeff(int aexp) const {
  auto it = t_.find(aexp);
  return it == t_.end() ? RatFuncX() : it->second;
}

void LinkPoly::add_term(int aexp, const RatFuncX& c) {
  if (c.is_zero()) return;
  auto it = t_.find(aexp);
  if (it == t_.end()) {
    t_[aexp] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LinkPoly& LinkPoly::operator+=(const LinkPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LinkPoly& LinkPoly::operator-=(const LinkPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LinkPoly LinkPoly::operator+(const LinkPoly& o) const {
  LinkPoly r = *this;
  r += o;
  return r;
}

LinkPoly LinkPoly::operator-(const LinkPoly& o) const {
  LinkPoly r = *this;
  r -= o;
  return r;
}

LinkPoly LinkPoly::operator*(const LinkPoly& o) const {
  LinkPoly r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LinkPoly LinkPoly::operator-() const {
  LinkPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

LinkPoly LinkPoly::scaled(const RatFuncX& c) const {
  LinkPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : t_) r.t_[e] = k * c;
  return r;
}

LinkPoly LinkPoly::scaled(const Rat& c) const { return scaled(RatFuncX(c)); }

LinkPoly LinkPoly::divided_by(const RatFuncX& c) const {
  if (c.is_zero()) throw compute_error("zero divisor");
  LinkPoly r;
  for (const auto& [e, k] : t_) r.t_[e] = k / c;
  return r;
}

LinkPoly LinkPoly::pow(int k) const {
  if (k < 0) throw compute_error("negative power of LinkPoly");
  LinkPoly r = one();
  LinkPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LinkPoly LinkPoly::flipped_q() const {
  LinkPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = c.flipped();
  return r;
}

LinkPoly LinkPoly::mirrored() const {
  LinkPoly r;
  for (const auto& [e, c] : t_) r.t_[-e] = c.flipped();
  return r;
}

RatFuncX LinkPoly::at_a_qN(int N) const {
  RatFuncX acc;
  for (const auto& [e, c] : t_) {
    // alpha^e = q^(Ne/2) = x^(Ne)
    acc += c * RatFuncX(LaurentX::monomial(Rat(1), N * e));
  }
  return acc;
}

std::optional<int> LinkPoly::maxdeg_a() const {
  if (t_.empty()) return std::nullopt;
  return t_.rbegin()->first;
}

std::optional<int> LinkPoly::maxdeg_q() const {
  if (t_.empty()) return std::nullopt;
  bool have = false;
  int best = 0;
  for (const auto& [e, c] : t_) {
    const int d = c.maxdeg_x();
    if (!have || d > best) best = d;
    have = true;
  }
  return best;
}

LinkPoly operator*(const Rat& c, const LinkPoly& p) { return p.scaled(c); }

namespace {

std::string a_power_str(int aexp) {
  std::ostringstream os;
  os << "a^(";
  if (aexp % 2 == 0)
    os << aexp / 2;
  else
    os << aexp << "/2";
  os << ")";
  return os.str();
}

}  // namespace

std::string LinkPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->first == 0) {
      os << "[" << it->second.str() << "]";
    } else {
      os << "[" << it->second.str() << "]*" << a_power_str(it->first);
    }
  }
  return os.str();
}

}  // namespace qmoy
