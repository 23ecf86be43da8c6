#pragma once

#include <string>
#include <vector>

#include "umbra/check_report.hpp"
#include "umbra/psi_sequence.hpp"

namespace umbra {

// Triangular table of scalars indexed by 0 <= k <= n <= n_max.
struct Table {
  std::string family;
  std::string seq_spec;
  long n_max = 0;
  std::vector<std::vector<Scalar>> rows;

  const Scalar& at(long n, long k) const { return rows[static_cast<size_t>(n)][static_cast<size_t>(k)]; }
};

// Second kind, node-convention family: {n+1,k} = {n,k-1} + k_psi {n,k}.
Table nwc_second_table(const PsiSequence& seq, long n_max);

// [x^n] of x^k / prod_{i=1..k} (1 - i_psi x).
Scalar nwc_second_via_ogf(const PsiSequence& seq, long n, long k);

// Sum over weakly increasing index words (cross-asserted against the
// composition form internally).
Scalar nwc_second_monomial_sum(const PsiSequence& seq, long n, long k);

// Divided difference of e_n over nodes 0, 1_psi, ..., k_psi.
Scalar nwc_second_divided_diff(const PsiSequence& seq, long n, long k);

// All computation routes agree cell by cell; the divided-difference route is
// included only when the sequence has pairwise distinct nodes.
CheckReport check_route_agreement(const PsiSequence& seq, long n_max);

// x^n = sum_k {n,k} psi_k(x) with psi_k the falling node polynomial.
CheckReport check_basis_change(const PsiSequence& seq, long n_max);

// Alternating-binomial explicit formula (erratum detector beyond classical).
CheckReport check_explicit14(const PsiSequence& seq, long n_max);

// Carlitz family: {n+1,k} = q^(k-1) {n,k-1} + k_q {n,k}, symbolic in q.
Table carlitz_q_table(long n_max);
Table carlitz_q_table_at(const Rat& q0, long n_max);

// Defining relation x_q^n = sum_k {n,k}_q x_q^(k falling), probed at integers.
CheckReport check_carlitz_defining(long n_max);

// Rescaling bridge between the two families: {n,k}~ = q^(-k(k-1)/2) {n,k}_q.
CheckReport check_rescal(long n_max);

// Operator-difference value delta_q^k e_n at 0 via the subset expansion.
Scalar milne_delta_q(long n, long k);
CheckReport check_milne(long n_max);

struct PolyWithCheck {
  SPoly poly;
  CheckReport report;
};

// Exponential polynomial of the node-convention family, verified against the
// multiply-then-derive operator recurrence.
PolyWithCheck exp_poly_nwc(const PsiSequence& seq, long n);

// Carlitz exponential polynomial, verified against the q^(k(k-1)/2)-weighted
// divided-difference coefficients.
PolyWithCheck exp_poly_carlitz(long n);

// First kind: coefficients of falling / rising node polynomials.
Table first_kind_nwc_table(const PsiSequence& seq, long k_max);
Table first_kind_c_table(const PsiSequence& seq, long k_max);

// sum_r [k,r] {r,l} = delta_{k,l}.
CheckReport check_orthogonality(const PsiSequence& seq, long k_max);

// The two printed q-convolution recurrences, evaluated literally.
std::vector<CheckReport> check_convolution_recurrences(long n_max);

// q^e for any integer e, as a symbolic scalar.
Scalar q_power_scalar(long e);

}  // namespace umbra
