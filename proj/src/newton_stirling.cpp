#include "umbra/newton_stirling.hpp"

#include <string>

#include "umbra/divided_diff.hpp"
#include "umbra/errors.hpp"
#include "umbra/numeric.hpp"
#include "umbra/scalar.hpp"

namespace umbra {
namespace {

SPoly lift(const Poly<Rat>& b) {
  std::vector<Scalar> c;
  for (long i = 0; i <= b.degree(); ++i) c.emplace_back(b.coeff_or(i, Rat(0)));
  if (c.empty()) c.emplace_back(Rat(0));
  return SPoly::from_coeffs(std::move(c));
}

Rat sign(long parity) { return parity % 2 == 0 ? Rat(1) : Rat(-1); }

}  // namespace

Rat newton_stirling(const Poly<Rat>& b, long k) {
  if (k < 0) raise(ErrorKind::IndexOutOfRange, "negative order");
  Rat by_sum(0);
  for (long l = 0; l <= k; ++l) {
    Rat t = b.eval(Rat(l)) / (Rat::factorial(k - l) * Rat::factorial(l));
    by_sum += sign(k - l) * t;
  }
  std::vector<Scalar> nodes;
  for (long j = 0; j <= k; ++j) nodes.emplace_back(Rat(j));
  Rat by_table = divided_difference(nodes, lift(b)).rat();
  if (!(by_sum == by_table))
    raise(ErrorKind::InvalidParameter, "newton coefficient routes disagree");
  return by_sum;
}

Poly<Rat> b_ns_poly(long n, long r, long s) {
  if (n < 1 || s < 1 || r < s)
    raise(ErrorKind::InvalidParameter, "need n >= 1 and r >= s >= 1");
  Poly<Rat> p = Poly<Rat>::from_coeffs({Rat(1)});
  for (long j = 1; j <= n; ++j) {
    Rat shift = Rat((j - 1) * (r - s));
    for (long t = 0; t < s; ++t) p = p.times_linear(Rat(t) - shift);
  }
  return p;
}

Rat generalized_S_rs(long n, long k, long r, long s) {
  if (n < 1 || s < 1 || r < s)
    raise(ErrorKind::InvalidParameter, "need n >= 1 and r >= s >= 1");
  if (k < 0 || k > n * s) raise(ErrorKind::IndexOutOfRange, "k outside [0, n*s]");
  if (k < s) return Rat(0);
  Poly<Rat> b = b_ns_poly(n, r, s);
  Rat sum(0);
  for (long l = s; l <= k; ++l)
    sum += sign(k - l) * Rat::binomial(k, l) * b.eval(Rat(l));
  Rat value = sum / Rat::factorial(k);
  if (!(value == newton_stirling(b, k)))
    raise(ErrorKind::InvalidParameter, "generalized Stirling routes disagree");
  return value;
}

Rat abel_goncharov_d(long n, long k) {
  if (n < 0 || k < 1) raise(ErrorKind::InvalidParameter, "need n >= 0 and k >= 1");
  std::vector<Scalar> nodes;
  for (long j = 0; j <= k; ++j) nodes.emplace_back(Rat(j, k));
  SPoly en = SPoly::monomial(Scalar(Rat(1)), n);
  Rat by_table = divided_difference(nodes, en).rat();

  Rat closed(0);
  for (long r = 0; r <= k; ++r)
    closed += sign(k - r) * Rat::binomial(k, r) * Rat(r).pow(n);
  closed = closed * Rat(k).pow(k) / (Rat::factorial(k) * Rat(k).pow(n));
  if (!(closed == by_table))
    raise(ErrorKind::InvalidParameter, "Abel-Goncharov routes disagree");

  Poly<Rat> en_plain = Poly<Rat>::monomial(Rat(1), n);
  Rat stirling = newton_stirling(en_plain, k);
  Rat scaled = n >= k ? Rat(k).pow(n - k) * by_table : by_table;
  Rat expect = n >= k ? stirling : Rat(0);
  if (!(scaled == expect))
    raise(ErrorKind::InvalidParameter, "scaled Abel-Goncharov value is not Stirling");
  return by_table;
}

Rat ns_bell(const Poly<Rat>& b) {
  Rat sum(0);
  for (long k = 0; k <= b.degree(); ++k) sum += newton_stirling(b, k);
  return sum;
}

CheckReport ns_dobinski_numeric(const Poly<Rat>& b, const Rat& x, long terms) {
  if (terms < b.degree() + 10)
    raise(ErrorKind::InvalidParameter, "terms must be at least deg b + 10");
  Rat tol(1, 1000000000);

  Rat weight(1);  // x^m / m!
  Rat partial(0);
  Rat last(0);
  for (long m = 0; m <= terms; ++m) {
    last = b.eval(Rat(m)) * weight;
    partial += last;
    weight = weight * x / Rat(m + 1);
  }
  if (!(last.abs() * Rat(10) < tol))
    raise(ErrorKind::InsufficientTerms, "final series term above tolerance/10");

  BoundedRat em = exp_rational(-x, Rat(1, 1000000000000));
  BoundedRat lhs = em * BoundedRat::exact(partial);

  Rat rhs(0);
  for (long k = 0; k <= b.degree(); ++k)
    rhs += newton_stirling(b, k) * x.pow(k);

  bool holds = within(lhs, rhs, tol);
  CheckBuilder rep("ns-dob", "x=" + x.str() + " terms=" + std::to_string(terms));
  rep.cell({{"terms", terms}}, holds, approx_str(lhs.val), approx_str(rhs));
  rep.note("series side versus Newton coefficient sum, tolerance 1/10^9");
  return rep.done();
}

}  // namespace umbra
