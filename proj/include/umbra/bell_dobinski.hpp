#pragma once

#include <vector>

#include "umbra/check_report.hpp"
#include "umbra/numeric.hpp"
#include "umbra/psi_sequence.hpp"
#include "umbra/scalar.hpp"

namespace umbra {

// Row sum of the node-convention second-kind table.
Scalar bell_nwc(const PsiSequence& seq, long n);

// Truncated interpolation coefficient
//   eps_K(r) = r_psi! * sum_{k=r}^{K} prod_{j=0..k, j!=r} (r_psi - j_psi)^{-1}
// over the node set 0_psi, ..., K_psi.  Requires pairwise distinct nodes and
// K >= r.
Scalar epsilon_coefficient(const PsiSequence& seq, long r, long K);

// sum_{r=0}^{K} eps_K(r) r_psi^n / r_psi! equals the n-th Bell value exactly
// once K >= n, because the inner divided differences vanish above degree n.
CheckReport check_dobinski_rearrangement(const PsiSequence& seq, long n, long K);

// Same identity read off on the e.g.f. side: the x^n coefficient of
// sum_r eps_K(r)/r_psi! * e_psi(r_psi x), scaled by n_psi!, for n <= n_max.
CheckReport check_egf18(const PsiSequence& seq, long n_max, long K);

// The printed series forms of eps against the product form.  The classical
// one matches termwise; the q one is missing a q^(-r(k-r)) factor and fails
// from r = 1 onward (the r = 0 and k = r terms still agree).
std::vector<CheckReport> check_epsilon_literal(long K);

// sum_r eps_K(r) r_psi^n x^r / r_psi! against the exponential polynomial at
// x_sample.  Holds at x = 1; recorded as an erratum probe elsewhere.
CheckReport check_exp_pol_II(const PsiSequence& seq, long n, const Rat& x_sample, long K);

// B_{n+1} = sum_k binom_psi(n,k) B_k starting from B_0 = 1.
std::vector<Scalar> bell_umbral_binomial(const PsiSequence& seq, long n_max);

// Cell-by-cell comparison of the umbral-binomial values with the table row
// sums.  Classically equal; for symbolic q the two branch at n = 4.
CheckReport compare_umbral_vs_nwc(const PsiSequence& seq, long n_max);

// The two printed q-Bell recurrences, evaluated literally against row sums
// of the respective tables.  One report per recurrence.
std::vector<CheckReport> check_q_bell_recurrences(long n_max);

// D_n = n_psi! * [x^n] exp(e_psi(x) - 1), the exponential-formula transform
// of the sequence's factorial weights; D_0 = 1.
std::vector<Scalar> prefab_bell(const PsiSequence& seq, long n_max);

// Coefficients of the formal series e_psi(x)^{-1} * sum_k k_psi^n x^k/k_psi!
// together with a report on whether it truncates at degree n.  For Classical
// and symbolic q the head is asserted against the known exponential
// polynomials; for other sequences the verdict is recorded without
// assertion.
struct GordianResult {
  std::vector<Scalar> coeffs;
  CheckReport report;
};

GordianResult gordian_S_psi(const PsiSequence& seq, long n, int order);

// Literal operator route: apply the psi-derivative followed by
// multiplication by x, n times, to e_psi(x), then divide by e_psi(x).
// Must agree with gordian_S_psi coefficient by coefficient.
CheckReport ghw_exp_poly_series(const PsiSequence& seq, long n, int order);

enum class DobinskiVariant { Classical, CarlitzQ, Milne, Psi, Cigl };

const char* dobinski_variant_name(DobinskiVariant v);

// Certified partial-sum evaluation of the infinite-series Bell formulas.
// Every sum is carried out in exact rationals; the tail is bounded by a
// geometric certificate and folded into the error budget before comparing
// with the exact target.  The Psi variant has no independent target and
// reports the value only.
CheckReport dobinski_numeric(DobinskiVariant variant, const PsiSequence& seq, long n,
                             long terms, const Rat& tol);

// Falling factorial moments of the psi-Poisson weight: for every convergent
// sequence, e_psi(1)^{-1} sum_k k_psi^(falling n)/k_psi! telescopes to 1.
CheckReport psi_poisson_moment_check(const PsiSequence& seq, long n_max, long terms,
                                     const Rat& tol);

// p_n = e_psi(lambda)^{-1} lambda^n / n_psi!, certified through `terms`
// partial-sum terms of the normalizing series.
BoundedRat psi_poisson_pmf(const PsiSequence& seq, const Rat& lambda, long n, long terms);

// Structural check on the pmf: p_n falls out of the generating series
// G(t) = sum p_n t^n as its n-th psi-Taylor coefficient over n_psi!, and the
// truncated mass sums to 1 within the certified error.
CheckReport psi_poisson_pmf_check(const PsiSequence& seq, const Rat& lambda, long n_max,
                                  long terms, const Rat& tol);

}  // namespace umbra
