#pragma once

#include <string>
#include <utility>

#include "umbra/poly.hpp"

namespace umbra {

// Rational function num/den over a field F. Canonical form: den is monic,
// gcd(num, den) = 1, and the zero element is 0/1. Equality is structural.
template <class F>
class RatFunc {
 public:
  RatFunc() : num_(), den_(one_poly()) {}
  RatFunc(long v) : num_(Poly<F>(F(v))), den_(one_poly()) {}  // NOLINT
  explicit RatFunc(F c) : num_(Poly<F>(std::move(c))), den_(one_poly()) {}
  explicit RatFunc(Poly<F> p) : num_(std::move(p)), den_(one_poly()) {}
  RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { canon(); }

  static RatFunc variable() { return RatFunc(Poly<F>::monomial(F(1), 1)); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }
  bool is_poly() const { return den_.degree() == 0; }

  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc inverse() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  F eval(const F& x) const {
    F d = den_.eval(x);
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "rational function pole at evaluation point");
    return num_.eval(x) / d;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str(const std::string& var) const {
    if (is_poly()) return num_.str(var);  // canonical den is exactly 1
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  static Poly<F> one_poly() { return Poly<F>(F(1)); }

  void canon() {
    if (den_.is_zero())
      raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = one_poly();
      return;
    }
    Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    F lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
  }

  Poly<F> num_, den_;
};

template <class F>
RatFunc<F> zero_like(const RatFunc<F>&) {
  return RatFunc<F>();
}
template <class F>
RatFunc<F> one_like(const RatFunc<F>&) {
  return RatFunc<F>(1);
}
template <class F>
RatFunc<F> int_like(const RatFunc<F>&, long v) {
  return RatFunc<F>(v);
}

template <class F>
struct ScalarFormat<RatFunc<F>> {
  // Variable naming convention for nested fields: innermost "q", outer "p".
  static std::string str(const RatFunc<F>& r) { return r.str(var_name()); }
  // A term is safe to splice unparenthesized when it has no additive structure
  // or quotient (a leading sign and interior '*' are fine).
  static bool atomic(const RatFunc<F>& r) {
    std::string s = str(r);
    for (size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == '/') return false;
      if ((ch == '+' || ch == '-') && i > 0) return false;
    }
    return true;
  }
  static const char* var_name();
};

template <>
inline const char* ScalarFormat<RatFunc<Rat>>::var_name() { return "q"; }
template <>
inline const char* ScalarFormat<RatFunc<RatFunc<Rat>>>::var_name() { return "p"; }

}  // namespace umbra
