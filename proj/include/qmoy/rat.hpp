#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qmoy {

// Exact rational coefficients. mpq_class keeps gcd(num,den)=1 and den>0
// after canonicalize(); every constructor below goes through that.
using Rat = mpq_class;

struct compute_error : std::runtime_error {
  explicit compute_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw compute_error("zero divisor");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// binomial(b + i - 1, i - 1) for integer b, the basis in which Ehrhart data
// is stored; i >= 1.  binom(-1 + i - 1, i - 1) vanishes for i >= 2.
inline Rat binom_shift(long b, int i) {
  Rat acc(1);
  for (int t = 1; t <= i - 1; ++t) {
    Rat f(b + t, t);
    f.canonicalize();
    acc *= f;
  }
  return acc;
}

}  // namespace qmoy
