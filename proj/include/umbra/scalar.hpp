#pragma once

#include <string>
#include <utility>
#include <variant>

#include "umbra/rat_func.hpp"

namespace umbra {

using QFun = RatFunc<Rat>;         // element of Q(q)
using PQFun = RatFunc<QFun>;       // element of Q(p, q), p-major over Q(q)

enum class Tag { Rational, Q, PQ };

inline const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Rational: return "rational";
    case Tag::Q: return "q";
    case Tag::PQ: return "pq";
  }
  return "?";
}

// Runtime-tagged exact scalar. Arithmetic is closed within one tag; mixing
// tags raises TagMismatch rather than promoting.
class Scalar {
 public:
  Scalar() : v_(Rat(0)) {}
  Scalar(Rat r) : v_(std::move(r)) {}    // NOLINT
  Scalar(QFun f) : v_(std::move(f)) {}   // NOLINT
  Scalar(PQFun f) : v_(std::move(f)) {}  // NOLINT

  static Scalar from_int(long v, Tag t) {
    switch (t) {
      case Tag::Rational: return Scalar(Rat(v));
      case Tag::Q: return Scalar(QFun(v));
      case Tag::PQ: return Scalar(PQFun(v));
    }
    raise(ErrorKind::InvalidParameter, "bad tag");
  }

  static Scalar q_var() { return Scalar(QFun::variable()); }
  static Scalar pq_p() { return Scalar(PQFun::variable()); }
  static Scalar pq_q() { return Scalar(PQFun(Poly<QFun>(QFun::variable()))); }

  Tag tag() const { return static_cast<Tag>(v_.index()); }

  const Rat& rat() const { return get<Rat>("rational"); }
  const QFun& qf() const { return get<QFun>("q"); }
  const PQFun& pqf() const { return get<PQFun>("pq"); }

  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }
  bool is_one() const {
    return std::visit([](const auto& x) { return x.is_one(); }, v_);
  }

  Scalar operator-() const {
    return std::visit([](const auto& x) { return Scalar(-x); }, v_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar inverse() const {
    return std::visit([](const auto& x) { return Scalar(x.inverse()); }, v_);
  }

  Scalar pow(unsigned long e) const {
    Scalar acc = from_int(1, tag());
    Scalar base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.tag() != b.tag()) return false;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Substitute a numeric value for q (Q tag only; rationals pass through).
  Scalar subst_q(const Rat& q0) const {
    switch (tag()) {
      case Tag::Rational: return *this;
      case Tag::Q: return Scalar(qf().eval(q0));
      case Tag::PQ:
        raise(ErrorKind::TagMismatch, "cannot substitute q into a (p,q) scalar");
    }
    raise(ErrorKind::InvalidParameter, "bad tag");
  }

  std::string str() const {
    switch (tag()) {
      case Tag::Rational: return rat().str();
      case Tag::Q: return qf().str("q");
      case Tag::PQ: return pqf().str("p");
    }
    return "?";
  }

 private:
  template <class T>
  const T& get(const char* want) const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    raise(ErrorKind::TagMismatch,
          std::string("expected ") + want + " scalar, have " + tag_name(tag()));
  }

  template <class Op>
  static Scalar binop(const Scalar& a, const Scalar& b, Op op) {
    if (a.tag() != b.tag())
      raise(ErrorKind::TagMismatch, std::string("cannot combine ") + tag_name(a.tag()) +
                                        " with " + tag_name(b.tag()));
    switch (a.tag()) {
      case Tag::Rational: return Scalar(op(std::get<Rat>(a.v_), std::get<Rat>(b.v_)));
      case Tag::Q: return Scalar(op(std::get<QFun>(a.v_), std::get<QFun>(b.v_)));
      case Tag::PQ: return Scalar(op(std::get<PQFun>(a.v_), std::get<PQFun>(b.v_)));
    }
    raise(ErrorKind::InvalidParameter, "bad tag");
  }

  std::variant<Rat, QFun, PQFun> v_;
};

inline Scalar zero_like(const Scalar& s) { return Scalar::from_int(0, s.tag()); }
inline Scalar one_like(const Scalar& s) { return Scalar::from_int(1, s.tag()); }
inline Scalar int_like(const Scalar& s, long v) { return Scalar::from_int(v, s.tag()); }

template <>
struct ScalarFormat<Scalar> {
  static std::string str(const Scalar& s) { return s.str(); }
  static bool atomic(const Scalar& s) {
    std::string t = s.str();
    for (size_t i = 0; i < t.size(); ++i) {
      char ch = t[i];
      if (ch == '/' && s.tag() != Tag::Rational) return false;
      if ((ch == '+' || ch == '-') && i > 0) return false;
    }
    return true;
  }
};

using SPoly = Poly<Scalar>;  // polynomial in a formal variable over Scalar

}  // namespace umbra
