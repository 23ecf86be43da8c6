#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Construction of field constants "in the image" of an exemplar value. For
// plain fields the exemplar is ignored; the runtime-tagged Scalar overloads
// these to preserve its tag.
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat int_like(const Rat&, long v) { return Rat(v); }

// Dense univariate polynomial over a field F. Invariant: coefficient vector is
// empty (the zero polynomial) or has a nonzero leading entry.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F c0) {
    c_.push_back(std::move(c0));
    trim();
  }

  static Poly from_coeffs(std::vector<F> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  static Poly monomial(F coeff, int deg) {
    Poly p;
    if (!coeff.is_zero()) {
      for (int i = 0; i < deg; ++i) p.c_.push_back(zero_like(coeff));
      p.c_.push_back(std::move(coeff));
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }

  const F& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  F coeff_or(int i, const F& like) const {
    if (i < 0 || i > degree()) return zero_like(like);
    return c_[static_cast<size_t>(i)];
  }

  const F& leading() const {
    if (is_zero()) raise(ErrorKind::InvalidParameter, "leading coefficient of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const Poly *lo = &a, *hi = &b;
    if (lo->c_.size() > hi->c_.size()) std::swap(lo, hi);
    std::vector<F> r;
    r.reserve(hi->c_.size());
    for (size_t i = 0; i < lo->c_.size(); ++i) r.push_back(lo->c_[i] + hi->c_[i]);
    for (size_t i = lo->c_.size(); i < hi->c_.size(); ++i) r.push_back(hi->c_[i]);
    return from_coeffs(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& x : c_) r.push_back(-x);
    return from_coeffs(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<std::optional<F>> acc(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) {
        F t = a.c_[i] * b.c_[j];
        if (acc[i + j])
          *acc[i + j] = *acc[i + j] + t;
        else
          acc[i + j] = std::move(t);
      }
    std::vector<F> r;
    r.reserve(acc.size());
    for (auto& x : acc) r.push_back(std::move(*x));
    return from_coeffs(std::move(r));
  }

  Poly scaled(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const F& x : c_) r.push_back(x * s);
    return from_coeffs(std::move(r));
  }

  // p(x) * (x - root)
  Poly times_linear(const F& root) const {
    if (is_zero()) return Poly();
    std::vector<F> r;
    r.reserve(c_.size() + 1);
    r.push_back(-(c_[0] * root));
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i - 1] - c_[i] * root);
    r.push_back(c_.back());
    return from_coeffs(std::move(r));
  }

  template <class X>
  X eval(const X& x) const {
    if (is_zero()) return zero_like(x);
    X acc = c_.back();
    for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
    return acc;
  }

  // d/dx with ordinary integer weights.
  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<F> r;
    r.reserve(c_.size() - 1);
    for (int i = 1; i <= degree(); ++i)
      r.push_back(c_[static_cast<size_t>(i)] * int_like(c_[0], i));
    return from_coeffs(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "monic form of zero polynomial");
    return scaled(leading().inverse());
  }

  // Requires F constructible from long (true fields used inside RatFunc).
  friend std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly q;
    q.c_.assign(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, F(0));
    F lead_inv = b.leading().inverse();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      int shift = a.degree() - b.degree();
      F f = a.leading() * lead_inv;
      q.c_[static_cast<size_t>(shift)] = f;
      for (int i = 0; i <= b.degree(); ++i)
        a.c_[static_cast<size_t>(i + shift)] =
            a.c_[static_cast<size_t>(i + shift)] - f * b.c_[static_cast<size_t>(i)];
      a.trim();
    }
    q.trim();
    return {std::move(q), std::move(a)};
  }

  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      auto [q, r] = divrem(std::move(a), b);
      (void)q;
      a = std::move(b);
      b = std::move(r);
      if (!b.is_zero()) b = b.monic();
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
struct ScalarFormat;  // specialized per coefficient type

template <>
struct ScalarFormat<Rat> {
  static std::string str(const Rat& r) { return r.str(); }
  static bool atomic(const Rat&) { return true; }
};

template <class F>
std::string Poly<F>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const F& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = ScalarFormat<F>::str(c);
    bool neg = !cs.empty() && cs[0] == '-' && ScalarFormat<F>::atomic(c);
    if (!first)
      out += neg ? "-" : "+";
    else if (neg)
      out += "-";
    if (neg) cs = cs.substr(1);
    bool atomic = ScalarFormat<F>::atomic(c);
    std::string term;
    if (i == 0) {
      term = atomic ? cs : "(" + cs + ")";
    } else {
      std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
      if (c.is_one())
        term = xs;
      else
        term = (atomic ? cs : "(" + cs + ")") + "*" + xs;
    }
    out += term;
    first = false;
  }
  return out;
}

}  // namespace umbra
