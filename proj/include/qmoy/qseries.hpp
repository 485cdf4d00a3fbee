#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmoy/linkpoly.hpp"

namespace qmoy {

// Laurent polynomial in alpha with plain rational coefficients; the slice
// type of q-expansions.
using AlphaPoly = std::map<int, Rat>;

void alpha_add(AlphaPoly* dst, const AlphaPoly& src, const Rat& scale = Rat(1));
AlphaPoly alpha_mul(const AlphaPoly& a, const AlphaPoly& b);
bool alpha_is_zero(const AlphaPoly& a);
std::string alpha_str(const AlphaPoly& a);

// Truncated Laurent series in x^(-1) (descending powers of q^(1/2)) with
// AlphaPoly coefficients.  slices()[k] is the coefficient of x^(top_x - k);
// depth() slices are known, anything below is truncated away.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int top_x, std::vector<AlphaPoly> slices);

  // All-zero series of the given depth.
  static QSeries zero(int depth);

  bool is_zero() const;
  int top_x() const { return top_x_; }
  int depth() const { return static_cast<int>(slices_.size()); }
  const std::vector<AlphaPoly>& slices() const { return slices_; }
  AlphaPoly slice_at_x(int xexp) const;

  // Drops leading zero slices so that slices()[0] is nonzero (unless the
  // whole series vanishes to its depth).
  void normalize();

  QSeries truncated(int depth) const;
  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  // Requires the leading slice of o to be a single alpha-monomial.
  QSeries operator/(const QSeries& o) const;
  QSeries scaled(const Rat& c) const;
  QSeries shifted(int xshift) const;

  // True if the two series agree on the first n known slices (aligned by
  // absolute x exponent).
  bool agrees_with(const QSeries& o, int n) const;

  // Every second slice starting from the top; throws if a skipped slice is
  // nonzero.  This is the integer-q-step reading used by head comparisons.
  std::vector<AlphaPoly> q_slices(int n) const;

  std::string str() const;

 private:
  int top_x_ = 0;
  std::vector<AlphaPoly> slices_;
};

// Laurent expansion of p at q = infinity retaining `order` q-levels
// (2*order x-slices measured from the top x-degree of p).
QSeries series_at_q_infinity(const LinkPoly& p, int order);

// Finite q-Pochhammer product: prod_{i=0}^{k-1} (1 - base * q^(i*step)).
// `base` must be a monomial c * alpha^aexp * x^xexp; step_x is the step in
// x units (twice the q power).
LinkPoly pochhammer(const LinkPoly& base, int step_x, int k);

// Infinite product truncated to `order` q-levels; requires step_x < 0.
QSeries pochhammer_inf(const LinkPoly& base, int step_x, int order);

}  // namespace qmoy
