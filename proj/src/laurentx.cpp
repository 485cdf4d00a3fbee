#include "qmoy/laurentx.hpp"

#include <sstream>

namespace qmoy {

LaurentX::LaurentX(const Rat& c) {
  if (c != 0) t_[0] = c;
}

LaurentX::LaurentX(long c) {
  if (c != 0) t_[0] = Rat(c);
}

LaurentX LaurentX::monomial(const Rat& c, int xexp) {
  LaurentX p;
  if (c != 0) p.t_[xexp] = c;
  return p;
}

bool LaurentX::is_one() const {
  return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

int LaurentX::min_exp() const {
  if (t_.empty()) throw compute_error("min_exp of zero polynomial");
  return t_.begin()->first;
}

int LaurentX::max_exp() const {
  if (t_.empty()) throw compute_error("max_exp of zero polynomial");
  return t_.rbegin()->first;
}

Rat LaurentX::coeff(int xexp) const {
  auto it = t_.find(xexp);
  return it == t_.end() ? Rat(0) : it->second;
}

Rat LaurentX::leading_coeff() const { return t_.rbegin()->second; }

void LaurentX::add_term(int xexp, const Rat& c) {
  if (c == 0) return;
  auto it = t_.find(xexp);
  if (it == t_.end()) {
    t_[xexp] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentX& LaurentX::operator+=(const LaurentX& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentX& LaurentX::operator-=(const LaurentX& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentX LaurentX::operator+(const LaurentX& o) const {
  LaurentX r = *this;
  r += o;
  return r;
}

LaurentX LaurentX::operator-(const LaurentX& o) const {
  LaurentX r = *this;
  r -= o;
  return r;
}

LaurentX LaurentX::operator*(const LaurentX& o) const {
  LaurentX r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentX LaurentX::operator-() const {
  LaurentX r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

LaurentX LaurentX::scaled(const Rat& c) const {
  LaurentX r;
  if (c == 0) return r;
  for (const auto& [e, k] : t_) r.t_[e] = k * c;
  return r;
}

LaurentX LaurentX::shifted(int k) const {
  LaurentX r;
  for (const auto& [e, c] : t_) r.t_[e + k] = c;
  return r;
}

LaurentX LaurentX::flipped() const {
  LaurentX r;
  for (const auto& [e, c] : t_) r.t_[-e] = c;
  return r;
}

LaurentX LaurentX::pow(int k) const {
  if (k < 0) throw compute_error("negative power of LaurentX");
  LaurentX r = one();
  LaurentX base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentX operator*(const Rat& c, const LaurentX& p) { return p.scaled(c); }

namespace {

// Long division of a by b in Q[x]; both must have min_exp >= 0 and b != 0.
void poly_divmod(const LaurentX& a, const LaurentX& b, LaurentX* quo, LaurentX* rem) {
  LaurentX q, r = a;
  const int db = b.max_exp();
  const Rat lb = b.leading_coeff();
  while (!r.is_zero() && r.max_exp() >= db) {
    const int sh = r.max_exp() - db;
    const Rat f = r.leading_coeff() / lb;
    q.add_term(sh, f);
    r -= b.shifted(sh).scaled(f);
  }
  if (quo) *quo = q;
  if (rem) *rem = r;
}

Rat rational_content(const LaurentX& p) {
  // gcd of numerators over lcm of denominators; positive.
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_class n = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

}  // namespace

LaurentX LaurentX::divexact(const LaurentX& d) const {
  if (d.is_zero()) throw compute_error("zero divisor");
  if (is_zero()) return LaurentX();
  // Shift both to ordinary polynomials, divide, shift back.
  const int sa = min_exp(), sd = d.min_exp();
  LaurentX quo, rem;
  poly_divmod(shifted(-sa), d.shifted(-sd), &quo, &rem);
  if (!rem.is_zero()) throw compute_error("inexact polynomial division");
  return quo.shifted(sa - sd);
}

LaurentX LaurentX::gcd(const LaurentX& a, const LaurentX& b) {
  if (a.is_zero() && b.is_zero()) return LaurentX();
  LaurentX u = a.is_zero() ? b : a;
  LaurentX v = a.is_zero() ? LaurentX() : b;
  u = u.shifted(-u.min_exp());
  if (!v.is_zero()) v = v.shifted(-v.min_exp());
  while (!v.is_zero()) {
    LaurentX rem;
    poly_divmod(u, v, nullptr, &rem);
    u = v;
    if (!rem.is_zero()) {
      rem = rem.shifted(-rem.min_exp());
      rem = rem.scaled(Rat(1) / rational_content(rem));
    }
    v = rem;
  }
  return u.scaled(Rat(1) / u.leading_coeff());
}

namespace {

std::string q_power_str(int xexp) {
  if (xexp == 0) return "1";
  std::ostringstream os;
  os << "q^(";
  if (xexp % 2 == 0)
    os << xexp / 2;
  else
    os << xexp << "/2";
  os << ")";
  return os.str();
}

}  // namespace

std::string LaurentX::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (it->first == 0) {
      os << rat_str(c);
    } else {
      if (c != 1) os << rat_str(c) << "*";
      os << q_power_str(it->first);
    }
  }
  return os.str();
}

}  // namespace qmoy
