#include "umbra/psi_sequence.hpp"

#include <sstream>

namespace umbra {

namespace {

Poly<Rat> q_ones(long n) {
  // 1 + q + ... + q^(n-1)
  std::vector<Rat> c(static_cast<size_t>(n), Rat(1));
  return Poly<Rat>::from_coeffs(std::move(c));
}

Poly<Rat> q_power(long e) { return Poly<Rat>::monomial(Rat(1), static_cast<int>(e)); }

// prod_{i=0}^{n-1} (q^n - q^i), the order of GL_n over a field with q elements.
Poly<Rat> gamma_gl_factorial_poly(long n) {
  Poly<Rat> acc(Rat(1));
  for (long i = 0; i < n; ++i) acc = acc * (q_power(n) - q_power(i));
  return acc;
}

Rat rat_pow(const Rat& base, long e) { return base.pow(static_cast<unsigned long>(e)); }

}  // namespace

PsiSequence PsiSequence::custom(std::vector<Scalar> values) {
  if (values.empty()) raise(ErrorKind::InvalidSequenceSpec, "custom sequence needs values");
  if (!values[0].is_zero())
    raise(ErrorKind::InvalidSequenceSpec, "custom sequence must start with 0 at index 0");
  for (const Scalar& v : values)
    if (v.tag() != values[0].tag())
      raise(ErrorKind::InvalidSequenceSpec, "custom sequence values must share one tag");
  PsiSequence s(PsiKind::Custom);
  s.custom_ = std::move(values);
  return s;
}

Tag PsiSequence::tag() const {
  switch (kind_) {
    case PsiKind::Classical:
    case PsiKind::QGaussNumeric:
    case PsiKind::Fibonomial:
    case PsiKind::FermionicF:
    case PsiKind::QFermionNumeric:
    case PsiKind::HyperL:
    case PsiKind::GammaGLNumeric:
      return Tag::Rational;
    case PsiKind::QGaussSymbolic:
    case PsiKind::QFermionSymbolic:
    case PsiKind::GammaGLSymbolic:
      return Tag::Q;
    case PsiKind::PQWachsWhite:
      return Tag::PQ;
    case PsiKind::Custom:
      return custom_[0].tag();
  }
  raise(ErrorKind::InvalidParameter, "bad kind");
}

std::string PsiSequence::spec_string() const {
  switch (kind_) {
    case PsiKind::Classical: return "classical";
    case PsiKind::QGaussSymbolic: return "q";
    case PsiKind::QGaussNumeric: return "q=" + q0_.str();
    case PsiKind::Fibonomial: return "fib";
    case PsiKind::PQWachsWhite: return "pq";
    case PsiKind::FermionicF: return "fermF";
    case PsiKind::QFermionSymbolic: return "qferm";
    case PsiKind::QFermionNumeric: return "qferm@q=" + q0_.str();
    case PsiKind::HyperL: return "hyperL=" + std::to_string(level_);
    case PsiKind::GammaGLSymbolic: return "gammaGL";
    case PsiKind::GammaGLNumeric: return "gammaGL@q=" + q0_.str();
    case PsiKind::Custom: {
      std::string out = "custom:[";
      for (size_t i = 0; i < custom_.size(); ++i) {
        if (i) out += ",";
        out += custom_[i].str();
      }
      return out + "]";
    }
  }
  return "?";
}

Scalar PsiSequence::value(long n) const {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "sequence index must be >= 0");
  if (kind_ != PsiKind::Custom && n == 0) return Scalar::from_int(0, tag());
  switch (kind_) {
    case PsiKind::Classical:
      return Scalar(Rat(n));
    case PsiKind::QGaussSymbolic:
      return Scalar(QFun(q_ones(n)));
    case PsiKind::QGaussNumeric: {
      if (q0_ == Rat(1)) return Scalar(Rat(n));
      return Scalar((Rat(1) - rat_pow(q0_, n)) / (Rat(1) - q0_));
    }
    case PsiKind::Fibonomial:
      return Scalar(Rat::fibonacci(static_cast<unsigned long>(n)));
    case PsiKind::PQWachsWhite: {
      // p^(n-1) + p^(n-2) q + ... + q^(n-1), p-major
      std::vector<QFun> c;
      c.reserve(static_cast<size_t>(n));
      for (long i = 0; i < n; ++i) c.push_back(QFun(q_power(n - 1 - i)));
      return Scalar(PQFun(Poly<QFun>::from_coeffs(std::move(c))));
    }
    case PsiKind::FermionicF:
      return Scalar(Rat(n % 2 == 1 ? 1 : 0));
    case PsiKind::QFermionSymbolic: {
      Poly<Rat> num = (n % 2 == 1) ? Poly<Rat>(Rat(1)) + q_power(n)
                                   : Poly<Rat>(Rat(1)) - q_power(n);
      Poly<Rat> den = Poly<Rat>(Rat(1)) + q_power(1);
      return Scalar(QFun(num, den));
    }
    case PsiKind::QFermionNumeric: {
      Rat sign = (n % 2 == 1) ? Rat(-1) : Rat(1);
      return Scalar((Rat(1) - sign * rat_pow(q0_, n)) / (Rat(1) + q0_));
    }
    case PsiKind::HyperL: {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(level_ + 1));
      return Scalar(Rat(p));
    }
    case PsiKind::GammaGLSymbolic: {
      QFun fn(gamma_gl_factorial_poly(n));
      QFun fprev(gamma_gl_factorial_poly(n - 1));
      return Scalar(fn / fprev);
    }
    case PsiKind::GammaGLNumeric: {
      Rat acc(1), prev(1);
      for (long i = 0; i < n; ++i) acc *= rat_pow(q0_, n) - rat_pow(q0_, i);
      for (long i = 0; i < n - 1; ++i) prev *= rat_pow(q0_, n - 1) - rat_pow(q0_, i);
      return Scalar(acc / prev);
    }
    case PsiKind::Custom: {
      if (n >= static_cast<long>(custom_.size()))
        raise(ErrorKind::IndexOutOfRange,
              "custom sequence defines values only up to index " +
                  std::to_string(custom_.size() - 1));
      return custom_[static_cast<size_t>(n)];
    }
  }
  raise(ErrorKind::InvalidParameter, "bad kind");
}

Scalar PsiSequence::factorial(long n) const {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "factorial index must be >= 0");
  switch (kind_) {
    case PsiKind::Classical:
      return Scalar(Rat::factorial(static_cast<unsigned long>(n)));
    case PsiKind::GammaGLSymbolic:
      return Scalar(QFun(gamma_gl_factorial_poly(n)));
    case PsiKind::GammaGLNumeric: {
      Rat acc(1);
      for (long i = 0; i < n; ++i) acc *= rat_pow(q0_, n) - rat_pow(q0_, i);
      return Scalar(acc);
    }
    default: {
      Scalar acc = Scalar::from_int(1, tag());
      for (long i = 1; i <= n; ++i) acc = acc * value(i);
      return acc;
    }
  }
}

Scalar PsiSequence::binomial(long n, long k) const {
  if (k < 0 || k > n) raise(ErrorKind::IndexOutOfRange, "binomial needs 0 <= k <= n");
  Scalar nf = factorial(n), kf = factorial(k), mf = factorial(n - k);
  if (nf.is_zero() || kf.is_zero() || mf.is_zero())
    raise(ErrorKind::ZeroFactorial, "binomial undefined: vanishing factorial");
  return nf / (kf * mf);
}

CapabilityFlags PsiSequence::capabilities(long probe) const {
  long hi = probe;
  if (limit() >= 0 && limit() < hi) hi = limit();
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(hi) + 1);
  for (long i = 0; i <= hi; ++i) vals.push_back(value(i));
  CapabilityFlags f;
  f.distinct_nodes = true;
  for (size_t i = 0; i < vals.size() && f.distinct_nodes; ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      if (vals[i] == vals[j]) {
        f.distinct_nodes = false;
        break;
      }
  f.invertible_factorials = true;
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i].is_zero()) {
      f.invertible_factorials = false;
      break;
    }
  switch (kind_) {
    case PsiKind::Classical:
    case PsiKind::Fibonomial:
    case PsiKind::HyperL:
      f.numeric_convergent = true;
      break;
    case PsiKind::QGaussNumeric:
      f.numeric_convergent = q0_ > Rat(0) && q0_ < Rat(1);
      break;
    default:
      f.numeric_convergent = false;
  }
  return f;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

Rat parse_rat_or_die(const std::string& s, const std::string& spec) {
  try {
    return Rat::parse_decimal(strip(s));
  } catch (const Error&) {
    raise(ErrorKind::InvalidSequenceSpec, "bad number '" + s + "' in sequence spec '" + spec + "'");
  }
}

}  // namespace

PsiSequence PsiSequence::parse(const std::string& raw) {
  std::string s = strip(raw);
  if (s == "classical") return classical();
  if (s == "q") return q_symbolic();
  if (s.rfind("q=", 0) == 0) return q_numeric(parse_rat_or_die(s.substr(2), raw));
  if (s == "fib") return fibonomial();
  if (s == "pq") return pq_wachs_white();
  if (s == "fermF") return fermionic_f();
  if (s == "qferm") return q_fermion_symbolic();
  if (s.rfind("qferm@q=", 0) == 0) return q_fermion_numeric(parse_rat_or_die(s.substr(8), raw));
  if (s.rfind("hyperL=", 0) == 0) {
    try {
      return hyper_l(std::stol(s.substr(7)));
    } catch (const std::exception&) {
      raise(ErrorKind::InvalidSequenceSpec, "bad level in '" + raw + "'");
    }
  }
  if (s == "gammaGL") return gamma_gl_symbolic();
  if (s.rfind("gammaGL@q=", 0) == 0) return gamma_gl_numeric(parse_rat_or_die(s.substr(10), raw));
  if (s.rfind("custom:[", 0) == 0 && s.back() == ']') {
    std::string body = s.substr(8, s.size() - 9);
    std::vector<Scalar> vals;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
      vals.push_back(Scalar(parse_rat_or_die(item, raw)));
    if (vals.empty()) raise(ErrorKind::InvalidSequenceSpec, "empty custom list in '" + raw + "'");
    return custom(std::move(vals));
  }
  raise(ErrorKind::InvalidSequenceSpec, "unrecognized sequence spec '" + raw + "'");
}

SPoly falling_node_poly(const PsiSequence& seq, long k) {
  if (k < 0) raise(ErrorKind::IndexOutOfRange, "node polynomial needs k >= 0");
  SPoly p(Scalar::from_int(1, seq.tag()));
  for (long j = 0; j < k; ++j) p = p.times_linear(seq.value(j));
  return p;
}

SPoly rising_node_poly(const PsiSequence& seq, long k) {
  if (k < 0) raise(ErrorKind::IndexOutOfRange, "node polynomial needs k >= 0");
  SPoly p(Scalar::from_int(1, seq.tag()));
  for (long j = 0; j < k; ++j) p = p.times_linear(-seq.value(j));
  return p;
}

Scalar psi_falling_power(const PsiSequence& seq, long N, long k) {
  if (k < 0) raise(ErrorKind::IndexOutOfRange, "falling power needs k >= 0");
  Scalar acc = Scalar::from_int(1, seq.tag());
  for (long j = 0; j < k; ++j) {
    long idx = N - j;
    if (idx < 0) return Scalar::from_int(0, seq.tag());
    acc = acc * seq.value(idx);
  }
  return acc;
}

SPoly psi_derivative(const SPoly& p, const PsiSequence& seq) {
  if (p.degree() < 1) return SPoly();
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) c.push_back(p[i] * seq.value(i));
  return SPoly::from_coeffs(std::move(c));
}

Series psi_derivative_series(const Series& s, const PsiSequence& seq) {
  if (s.order() == 0) return Series(s.tag(), 0);
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(s.order()));
  for (int i = 1; i <= s.order(); ++i) c.push_back(s.coeff(i) * seq.value(i));
  return Series::from_coeffs(std::move(c));
}

Series exp_psi_series(const PsiSequence& seq, int order) {
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(order) + 1);
  Scalar fact = Scalar::from_int(1, seq.tag());
  c.push_back(fact);
  for (int i = 1; i <= order; ++i) {
    Scalar v = seq.value(i);
    if (v.is_zero())
      raise(ErrorKind::ZeroFactorial,
            "exponential series undefined: " + std::to_string(i) + "_psi = 0");
    fact = fact * v;
    c.push_back(fact.inverse());
  }
  return Series::from_coeffs(std::move(c));
}

}  // namespace umbra
