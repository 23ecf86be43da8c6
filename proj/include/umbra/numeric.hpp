#pragma once

#include <cstdio>
#include <string>

#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Rational value with a certified absolute error bound: the quantity being
// approximated lies within [val - err, val + err].  All bookkeeping is exact.
struct BoundedRat {
  Rat val;
  Rat err;  // >= 0

  static BoundedRat exact(Rat v) { return {std::move(v), Rat(0)}; }

  BoundedRat operator+(const BoundedRat& o) const { return {val + o.val, err + o.err}; }
  BoundedRat operator-(const BoundedRat& o) const { return {val - o.val, err + o.err}; }
  BoundedRat operator*(const BoundedRat& o) const {
    Rat e = val.abs() * o.err + o.val.abs() * err + err * o.err;
    return {val * o.val, e};
  }
  BoundedRat widened(const Rat& extra) const { return {val, err + extra}; }

  // Reciprocal; valid only when the enclosing interval stays strictly
  // positive, since 1/x on [v - e, v + e] is then bounded by e / (v (v - e)).
  BoundedRat inverse() const {
    if (!(val - err > Rat(0)))
      raise(ErrorKind::NotConvergent, "interval not bounded away from zero");
    return {Rat(1) / val, err / (val * (val - err))};
  }
};

// |approx - target| provably below tol.
inline bool within(const BoundedRat& approx, const Rat& target, const Rat& tol) {
  return (approx.val - target).abs() + approx.err < tol;
}

// e^x as an exact partial sum of the exponential series with a geometric
// tail certificate: once m + 2 > 2|x| the term ratio stays below 1/2 and
// the remainder is at most twice the next term.
inline BoundedRat exp_rational(const Rat& x, const Rat& eps) {
  if (!(eps > Rat(0))) raise(ErrorKind::InvalidParameter, "eps must be positive");
  Rat sum(1);
  Rat term(1);
  Rat ax = x.abs();
  for (long m = 0; m < 20000; ++m) {
    Rat next = term * x / Rat(m + 1);
    Rat ratio = ax / Rat(m + 2);
    if (ratio < Rat(1)) {
      Rat bound = next.abs() / (Rat(1) - ratio);
      if (bound < eps) return {sum, bound};
    }
    sum += next;
    term = next;
  }
  raise(ErrorKind::InsufficientTerms, "exponential series did not certify");
}

// Short decimal rendering for report strings; comparisons never use it.
inline std::string approx_str(const Rat& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v.to_double());
  return buf;
}

}  // namespace umbra
