#pragma once

#include <string>
#include <vector>

#include "umbra/check_report.hpp"
#include "umbra/psi_sequence.hpp"
#include "umbra/scalar.hpp"

namespace umbra {

// Probe rows for the normal-ordering coefficients of the n-th power of the
// multiply-then-psi-derive operator: acting on x^N gives the equation
//   sum_k c_k * N_psi^(falling k) = N_psi^n,  one row per N in 0..N_max.
struct NormalOrderSystem {
  PsiSequence seq;
  long n = 0;
  long N_max = 0;
  std::vector<std::vector<Scalar>> matrix;  // row N, columns k = 0..n
  std::vector<Scalar> rhs;
};

NormalOrderSystem build_system(const PsiSequence& seq, long n, long N_max);

enum class SolveStatus { UniqueSolution, Inconsistent };

// coeffs holds c_0..c_n (c_0 is 1 for n = 0 and 0 otherwise).  When the
// substituted probe equations disagree, `witness_N` carries the first probe
// with lhs the direct power N_psi^n and rhs the normal-ordered sum.
struct NormalOrderOutcome {
  SolveStatus status = SolveStatus::UniqueSolution;
  std::vector<Scalar> coeffs;
  long witness_N = -1;
  std::string witness_lhs;
  std::string witness_rhs;
  long checked_range = 0;
};

// Triangular solve on rows N = 1..n, then exact substitution into every
// remaining probe row.
NormalOrderOutcome normal_order_solve(const PsiSequence& seq, long n, long N_max);

inline long default_probe(long n) { return 2 * n + 4; }

// Positive direction: symbolic-q solutions exist, are unique, and equal the
// Carlitz table rows; certified beyond the probe range by the pivotal
// identity n_q - k_q = q^k (n-k)_q.
CheckReport check_observation_21(long n_max, long N_max);

// Checked direction: every listed non-q sequence is inconsistent somewhere
// for each n >= 2, while n = 1 stays trivially solvable.  The list must not
// contain the q-extension family (classical included).
CheckReport check_observation_22(const std::vector<PsiSequence>& seqs, long n_max, long N_max);

}  // namespace umbra
