#pragma once

#include <string>
#include <vector>

#include "umbra/series.hpp"

namespace umbra {

enum class PsiKind {
  Classical,
  QGaussSymbolic,
  QGaussNumeric,
  Fibonomial,
  PQWachsWhite,
  FermionicF,
  QFermionSymbolic,
  QFermionNumeric,
  HyperL,
  GammaGLSymbolic,
  GammaGLNumeric,
  Custom,
};

struct CapabilityFlags {
  bool distinct_nodes = false;
  bool invertible_factorials = false;
  bool numeric_convergent = false;
};

// An admissible sequence: the regularized values n_psi with 0_psi = 0,
// together with derived factorials, binomials and capability probes.
class PsiSequence {
 public:
  static constexpr long kDefaultProbe = 32;

  static PsiSequence classical() { return PsiSequence(PsiKind::Classical); }
  static PsiSequence q_symbolic() { return PsiSequence(PsiKind::QGaussSymbolic); }
  static PsiSequence q_numeric(const Rat& q0) {
    PsiSequence s(PsiKind::QGaussNumeric);
    s.q0_ = q0;
    return s;
  }
  static PsiSequence fibonomial() { return PsiSequence(PsiKind::Fibonomial); }
  static PsiSequence pq_wachs_white() { return PsiSequence(PsiKind::PQWachsWhite); }
  static PsiSequence fermionic_f() { return PsiSequence(PsiKind::FermionicF); }
  static PsiSequence q_fermion_symbolic() { return PsiSequence(PsiKind::QFermionSymbolic); }
  static PsiSequence q_fermion_numeric(const Rat& q0) {
    if (q0 == Rat(-1))
      raise(ErrorKind::InvalidParameter, "q-fermion sequence undefined at q = -1");
    PsiSequence s(PsiKind::QFermionNumeric);
    s.q0_ = q0;
    return s;
  }
  static PsiSequence hyper_l(long L) {
    if (L < 1) raise(ErrorKind::InvalidParameter, "hyperharmonic level must be >= 1");
    PsiSequence s(PsiKind::HyperL);
    s.level_ = L;
    return s;
  }
  static PsiSequence gamma_gl_symbolic() { return PsiSequence(PsiKind::GammaGLSymbolic); }
  static PsiSequence gamma_gl_numeric(const Rat& q0) {
    if (q0.is_zero() || q0 == Rat(1) || q0 == Rat(-1))
      raise(ErrorKind::InvalidParameter, "linear-group sequence needs q not in {-1, 0, 1}");
    PsiSequence s(PsiKind::GammaGLNumeric);
    s.q0_ = q0;
    return s;
  }
  static PsiSequence custom(std::vector<Scalar> values);

  // Spec strings: classical | q | q=<rat> | fib | pq | fermF | qferm |
  // qferm@q=<rat> | hyperL=<int> | gammaGL | gammaGL@q=<rat> | custom:[r,...]
  static PsiSequence parse(const std::string& spec);

  PsiKind kind() const { return kind_; }
  Tag tag() const;
  std::string spec_string() const;
  const Rat& q0() const { return q0_; }
  long level() const { return level_; }

  // Largest index with a defined value, or -1 when unbounded.
  long limit() const {
    return kind_ == PsiKind::Custom ? static_cast<long>(custom_.size()) - 1 : -1;
  }

  Scalar value(long n) const;
  Scalar factorial(long n) const;
  Scalar binomial(long n, long k) const;

  CapabilityFlags capabilities(long probe = kDefaultProbe) const;

 private:
  explicit PsiSequence(PsiKind k) : kind_(k) {}

  PsiKind kind_;
  Rat q0_ = Rat(0);
  long level_ = 0;
  std::vector<Scalar> custom_;
};

SPoly falling_node_poly(const PsiSequence& seq, long k);
SPoly rising_node_poly(const PsiSequence& seq, long k);
Scalar psi_falling_power(const PsiSequence& seq, long N, long k);
SPoly psi_derivative(const SPoly& p, const PsiSequence& seq);
Series psi_derivative_series(const Series& s, const PsiSequence& seq);
Series exp_psi_series(const PsiSequence& seq, int order);

}  // namespace umbra
