#pragma once

#include "umbra/check_report.hpp"
#include "umbra/poly.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Newton coefficients [0,1,...,k; b] of a rational polynomial and the
// generalized Stirling machinery built on them.

// Computed both as the forward-difference sum sum_l (-1)^{k-l} b(l) / ((k-l)! l!)
// and by a divided-difference table at nodes 0..k; the two routes are
// cross-asserted on every call.
Rat newton_stirling(const Poly<Rat>& b, long k);

// Product of shifted s-step falling factorials:
// b_ns(x; r, s) = prod_{j=1}^{n} [x + (j-1)(r-s)] (x+(j-1)(r-s)-1) ... (s factors).
Poly<Rat> b_ns_poly(long n, long r, long s);

// S_{r,s}(n,k) = (1/k!) sum_{l=s}^{k} (-1)^{k-l} C(k,l) b_ns(l; r, s).
// k < s yields 0 (empty sum); k > ns is out of range.
Rat generalized_S_rs(long n, long k, long r, long s);

// Divided difference of x^n over the equidistant nodes j/k, j = 0..k.
// Cross-asserted against the closed form (k^k/k!) sum_r (-1)^{k-r} C(k,r) r^n / k^n
// and against k^{n-k} d_{n,k} = {n,k}.
Rat abel_goncharov_d(long n, long k);

// sum_k [0..k; b], the Bell-like number attached to one polynomial.
Rat ns_bell(const Poly<Rat>& b);

// e^{-x} sum_{m<=terms} b(m) x^m / m!  versus  sum_k [0..k;b] x^k,
// compared through certified rational arithmetic at tolerance 10^-9.
CheckReport ns_dobinski_numeric(const Poly<Rat>& b, const Rat& x, long terms);

}  // namespace umbra
