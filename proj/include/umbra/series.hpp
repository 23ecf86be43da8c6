#pragma once

#include <utility>
#include <vector>

#include "umbra/scalar.hpp"

namespace umbra {

// Truncated power series: coefficients 0..order over one scalar tag. Binary
// operations truncate to the smaller order.
class Series {
 public:
  Series(Tag t, int order) {
    if (order < 0) raise(ErrorKind::InvalidParameter, "series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, Scalar::from_int(0, t));
  }

  static Series from_coeffs(std::vector<Scalar> c) {
    if (c.empty()) raise(ErrorKind::InvalidParameter, "series needs at least one coefficient");
    Series s;
    s.c_ = std::move(c);
    for (const Scalar& x : s.c_)
      if (x.tag() != s.c_[0].tag())
        raise(ErrorKind::TagMismatch, "series coefficients must share one tag");
    return s;
  }

  static Series from_poly(const SPoly& p, Tag t, int order) {
    Series s(t, order);
    for (int i = 0; i <= p.degree() && i <= order; ++i) s.c_[static_cast<size_t>(i)] = p[i];
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Tag tag() const { return c_[0].tag(); }
  const Scalar& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  Scalar& coeff(int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  Series() = default;
  std::vector<Scalar> c_;
};

inline Series series_add(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return Series::from_coeffs(std::move(c));
}

inline Series series_sub(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
  return Series::from_coeffs(std::move(c));
}

inline Series series_mul(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar s = a.coeff(0) * b.coeff(k);
    for (int i = 1; i <= k; ++i) s = s + a.coeff(i) * b.coeff(k - i);
    c.push_back(std::move(s));
  }
  return Series::from_coeffs(std::move(c));
}

inline Series series_scale(const Series& a, const Scalar& s) {
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(a.order()) + 1);
  for (int i = 0; i <= a.order(); ++i) c.push_back(a.coeff(i) * s);
  return Series::from_coeffs(std::move(c));
}

inline Series series_inverse(const Series& a) {
  if (a.coeff(0).is_zero())
    raise(ErrorKind::NonInvertibleConstantTerm, "series inverse needs invertible constant term");
  Scalar a0_inv = a.coeff(0).inverse();
  std::vector<Scalar> b;
  b.reserve(static_cast<size_t>(a.order()) + 1);
  b.push_back(a0_inv);
  for (int n = 1; n <= a.order(); ++n) {
    Scalar s = a.coeff(1) * b[static_cast<size_t>(n - 1)];
    for (int i = 2; i <= n; ++i) s = s + a.coeff(i) * b[static_cast<size_t>(n - i)];
    b.push_back(-(s * a0_inv));
  }
  return Series::from_coeffs(std::move(b));
}

// exp of a series with zero constant term, with ordinary (classical) calculus
// weights: n*b_n = sum_{k=1..n} k*a_k*b_{n-k}.
inline Series series_exp(const Series& a) {
  if (!a.coeff(0).is_zero())
    raise(ErrorKind::NonzeroConstantTerm, "series exp needs zero constant term");
  std::vector<Scalar> b;
  b.reserve(static_cast<size_t>(a.order()) + 1);
  b.push_back(one_like(a.coeff(0)));
  for (int n = 1; n <= a.order(); ++n) {
    Scalar s = a.coeff(1) * b[static_cast<size_t>(n - 1)];
    for (int k = 2; k <= n; ++k)
      s = s + int_like(s, k) * a.coeff(k) * b[static_cast<size_t>(n - k)];
    b.push_back(s / int_like(s, n));
  }
  return Series::from_coeffs(std::move(b));
}

}  // namespace umbra
