#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "umbra/errors.hpp"

namespace umbra {

// Arbitrary-precision rational with canonical representation (coprime
// numerator/denominator, denominator > 0), backed by GMP.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rat(long num, long den) {
    if (den == 0) raise(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" in base 10.
  static Rat parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      raise(ErrorKind::InvalidParameter, "cannot parse rational '" + s + "'");
    if (q.get_den() == 0) raise(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(std::move(q));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) raise(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inverse() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return Rat(mpq_class(1) / v_);
  }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  Rat pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class r(n, d);
    return Rat(std::move(r));
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  static Rat factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
  }

  static Rat fibonacci(unsigned long n) {
    mpz_class f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return Rat(f);
  }

  static Rat binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
  }

  static Rat pow10(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(p).inverse() : Rat(p);
  }

  // Accepts plain rationals plus decimal and scientific forms like "0.25",
  // "1e-9" or "2.5e-3", all converted exactly.
  static Rat parse_decimal(const std::string& s) {
    size_t epos = s.find_first_of("eE");
    std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
      try {
        exp10 = std::stol(s.substr(epos + 1));
      } catch (const std::exception&) {
        raise(ErrorKind::InvalidParameter, "cannot parse exponent in '" + s + "'");
      }
    }
    Rat base;
    size_t dot = mant.find('.');
    if (dot == std::string::npos) {
      base = parse(mant);
    } else {
      std::string digits = mant.substr(0, dot) + mant.substr(dot + 1);
      long frac = static_cast<long>(mant.size() - dot - 1);
      if (digits.empty() || digits == "-" || digits == "+")
        raise(ErrorKind::InvalidParameter, "cannot parse rational '" + s + "'");
      base = parse(digits) / pow10(frac);
    }
    return base * pow10(exp10);
  }

 private:
  mpq_class v_;
};

}  // namespace umbra
