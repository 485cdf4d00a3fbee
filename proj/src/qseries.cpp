#include "qmoy/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qmoy {

void alpha_add(AlphaPoly* dst, const AlphaPoly& src, const Rat& scale) {
  for (const auto& [e, c] : src) {
    Rat v = c * scale;
    if (v == 0) continue;
    auto it = dst->find(e);
    if (it == dst->end()) {
      (*dst)[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) dst->erase(it);
    }
  }
}

AlphaPoly alpha_mul(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) {
      Rat v = c1 * c2;
      auto it = r.find(e1 + e2);
      if (it == r.end()) {
        r[e1 + e2] = v;
      } else {
        it->second += v;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

bool alpha_is_zero(const AlphaPoly& a) { return a.empty(); }

std::string alpha_str(const AlphaPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
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
      os << "a^(";
      if (it->first % 2 == 0)
        os << it->first / 2;
      else
        os << it->first << "/2";
      os << ")";
    }
  }
  return os.str();
}

QSeries::QSeries(int top_x, std::vector<AlphaPoly> slices)
    : top_x_(top_x), slices_(std::move(slices)) {}

QSeries QSeries::zero(int depth) {
  return QSeries(0, std::vector<AlphaPoly>(static_cast<size_t>(depth)));
}

bool QSeries::is_zero() const {
  for (const auto& s : slices_)
    if (!s.empty()) return false;
  return true;
}

AlphaPoly QSeries::slice_at_x(int xexp) const {
  const int k = top_x_ - xexp;
  if (k < 0 || k >= depth()) return {};
  return slices_[static_cast<size_t>(k)];
}

void QSeries::normalize() {
  size_t lead = 0;
  while (lead < slices_.size() && slices_[lead].empty()) ++lead;
  if (lead == 0) return;
  top_x_ -= static_cast<int>(lead);
  slices_.erase(slices_.begin(), slices_.begin() + static_cast<long>(lead));
}

QSeries QSeries::truncated(int d) const {
  std::vector<AlphaPoly> s = slices_;
  if (static_cast<int>(s.size()) > d) s.resize(static_cast<size_t>(d));
  return QSeries(top_x_, std::move(s));
}

QSeries QSeries::operator+(const QSeries& o) const {
  // Known window of the sum: from max top down to the higher of the two
  // truncation floors.
  const int top = std::max(top_x_, o.top_x_);
  const int floor_a = top_x_ - depth();
  const int floor_b = o.top_x_ - o.depth();
  const int floor = std::max(floor_a, floor_b);
  std::vector<AlphaPoly> s(static_cast<size_t>(std::max(0, top - floor)));
  for (int k = 0; k < static_cast<int>(s.size()); ++k) {
    const int e = top - k;
    AlphaPoly v = slice_at_x(e);
    alpha_add(&v, o.slice_at_x(e));
    s[static_cast<size_t>(k)] = std::move(v);
  }
  return QSeries(top, std::move(s));
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(Rat(-1)); }

QSeries QSeries::scaled(const Rat& c) const {
  QSeries r = *this;
  for (auto& s : r.slices_) {
    if (c == 0) {
      s.clear();
      continue;
    }
    for (auto& [e, v] : s) v *= c;
  }
  return r;
}

QSeries QSeries::shifted(int xshift) const {
  QSeries r = *this;
  r.top_x_ += xshift;
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  const int d = std::min(depth(), o.depth());
  std::vector<AlphaPoly> s(static_cast<size_t>(d));
  for (int i = 0; i < std::min(depth(), d); ++i) {
    if (slices_[static_cast<size_t>(i)].empty()) continue;
    for (int j = 0; i + j < d && j < o.depth(); ++j) {
      if (o.slices_[static_cast<size_t>(j)].empty()) continue;
      AlphaPoly prod = alpha_mul(slices_[static_cast<size_t>(i)], o.slices_[static_cast<size_t>(j)]);
      alpha_add(&s[static_cast<size_t>(i + j)], prod);
    }
  }
  return QSeries(top_x_ + o.top_x_, std::move(s));
}

QSeries QSeries::operator/(const QSeries& o) const {
  QSeries den = o;
  den.normalize();
  if (den.depth() == 0 || den.slices_[0].empty()) throw compute_error("zero divisor");
  if (den.slices_[0].size() != 1)
    throw compute_error("series division needs a monomial leading slice");
  const int lead_aexp = den.slices_[0].begin()->first;
  const Rat lead_c = den.slices_[0].begin()->second;
  const int d = std::min(depth(), den.depth());
  // b = 1/den by the usual recursion, then multiply.
  std::vector<AlphaPoly> inv(static_cast<size_t>(d));
  AlphaPoly inv_lead;
  inv_lead[-lead_aexp] = Rat(1) / lead_c;
  inv[0] = inv_lead;
  for (int k = 1; k < d; ++k) {
    AlphaPoly acc;
    for (int i = 1; i <= k && i < den.depth(); ++i) {
      if (den.slices_[static_cast<size_t>(i)].empty() || inv[static_cast<size_t>(k - i)].empty())
        continue;
      alpha_add(&acc, alpha_mul(den.slices_[static_cast<size_t>(i)], inv[static_cast<size_t>(k - i)]));
    }
    inv[static_cast<size_t>(k)] = alpha_mul(acc, inv_lead);
    for (auto& [e, c] : inv[static_cast<size_t>(k)]) c = -c;
  }
  QSeries invs(-den.top_x_, std::move(inv));
  return (*this) * invs;
}

bool QSeries::agrees_with(const QSeries& o, int n) const {
  QSeries a = *this, b = o;
  a.normalize();
  b.normalize();
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() != b.is_zero()) return false;
  if (a.top_x_ != b.top_x_) return false;
  for (int k = 0; k < n; ++k) {
    if (k >= a.depth() || k >= b.depth()) break;
    if (a.slices_[static_cast<size_t>(k)] != b.slices_[static_cast<size_t>(k)]) return false;
  }
  return true;
}

std::vector<AlphaPoly> QSeries::q_slices(int n) const {
  QSeries norm = *this;
  norm.normalize();
  std::vector<AlphaPoly> out;
  for (int j = 0; j < n; ++j) {
    const int k = 2 * j;
    if (k >= norm.depth()) break;
    out.push_back(norm.slices_[static_cast<size_t>(k)]);
    if (k + 1 < norm.depth() && !norm.slices_[static_cast<size_t>(k + 1)].empty())
      throw compute_error("series has terms at odd half-q levels");
  }
  return out;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < depth(); ++k) {
    if (slices_[static_cast<size_t>(k)].empty()) continue;
    if (!first) os << " + ";
    first = false;
    const int e = top_x_ - k;
    os << "(" << alpha_str(slices_[static_cast<size_t>(k)]) << ")";
    if (e != 0) {
      os << "*q^(";
      if (e % 2 == 0)
        os << e / 2;
      else
        os << e << "/2";
      os << ")";
    }
  }
  if (first) os << "0";
  os << " + O(q^(" << (top_x_ - depth()) << "/2))";
  return os.str();
}

QSeries series_at_q_infinity(const LinkPoly& p, int order) {
  if (order < 1) throw compute_error("series order must be >= 1");
  const int d = 2 * order;
  if (p.is_zero()) return QSeries::zero(d);
  const int top = *p.maxdeg_q();
  std::vector<AlphaPoly> slices(static_cast<size_t>(d));
  for (const auto& [aexp, f] : p.terms()) {
    const int ftop = f.maxdeg_x();
    const int skip = top - ftop;  // this coefficient starts lower down
    if (skip >= d) continue;
    std::vector<Rat> coeffs = f.expand_at_infinity(d - skip);
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
      if (coeffs[static_cast<size_t>(k)] == 0) continue;
      slices[static_cast<size_t>(skip + k)][aexp] += coeffs[static_cast<size_t>(k)];
      if (slices[static_cast<size_t>(skip + k)][aexp] == 0)
        slices[static_cast<size_t>(skip + k)].erase(aexp);
    }
  }
  return QSeries(top, std::move(slices));
}

namespace {

// base must be c * alpha^A * x^E; returns (c, A, E).
std::tuple<Rat, int, int> monomial_parts(const LinkPoly& base) {
  if (base.terms().size() != 1) throw compute_error("pochhammer base must be a monomial");
  const auto& [aexp, f] = *base.terms().begin();
  if (!f.is_polynomial() || f.num().terms().size() != 1)
    throw compute_error("pochhammer base must be a monomial");
  return {f.num().terms().begin()->second, aexp, f.num().terms().begin()->first};
}

}  // namespace

LinkPoly pochhammer(const LinkPoly& base, int step_x, int k) {
  if (k < 0) throw compute_error("pochhammer length must be >= 0");
  auto [c, aexp, xexp] = monomial_parts(base);
  LinkPoly acc = LinkPoly::one();
  for (int i = 0; i < k; ++i)
    acc *= LinkPoly::one() - LinkPoly::monomial(c, aexp, xexp + i * step_x);
  return acc;
}

QSeries pochhammer_inf(const LinkPoly& base, int step_x, int order) {
  if (order < 1) throw compute_error("series order must be >= 1");
  if (step_x >= 0) throw compute_error("divergent product");
  auto [c, aexp, xexp] = monomial_parts(base);
  const int d = 2 * order;
  // Worst case top growth: factors with nonnegative exponent raise the top.
  int extra = 0;
  for (int i = 0; xexp + i * step_x > 0; ++i) extra += xexp + i * step_x;
  std::vector<AlphaPoly> sl(static_cast<size_t>(d + extra));
  sl[0][0] = Rat(1);
  QSeries acc(0, std::move(sl));
  for (int i = 0;; ++i) {
    const int e = xexp + i * step_x;
    if (e <= acc.top_x() - acc.depth()) break;  // factor is 1 + (below window)
    std::vector<AlphaPoly> f(static_cast<size_t>(acc.depth()));
    const int ftop = std::max(0, e);
    f[0] = AlphaPoly();
    // factor = 1 - c*alpha^A*x^e laid out from its own top
    if (e > 0) {
      f[0][aexp] = -c;
      if (e < acc.depth()) f[static_cast<size_t>(e)][0] = Rat(1);
    } else {
      f[0][0] = Rat(1);
      if (-e < acc.depth()) f[static_cast<size_t>(-e)][aexp] = -c;
    }
    acc = acc * QSeries(ftop, std::move(f));
  }
  acc.normalize();
  return acc.truncated(d);
}

}  // namespace qmoy
