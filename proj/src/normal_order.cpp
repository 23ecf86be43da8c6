#include "umbra/normal_order.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/stirling.hpp"
#include "umbra/threads.hpp"

namespace umbra {

namespace {

std::string joined(const std::vector<Scalar>& cs) {
  std::string s = "[";
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += cs[i].str();
  }
  return s + "]";
}

std::string outcome_str(const NormalOrderOutcome& out) {
  if (out.status == SolveStatus::UniqueSolution) return "unique " + joined(out.coeffs);
  return "inconsistent at N=" + std::to_string(out.witness_N) + " (" + out.witness_lhs +
         " vs " + out.witness_rhs + ")";
}

bool q_extension_kind(PsiKind k) {
  return k == PsiKind::Classical || k == PsiKind::QGaussSymbolic || k == PsiKind::QGaussNumeric;
}

}  // namespace

NormalOrderSystem build_system(const PsiSequence& seq, long n, long N_max) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "operator power must be nonnegative");
  if (N_max < n + 2) raise(ErrorKind::InvalidParameter, "probe range must reach at least n + 2");
  NormalOrderSystem sys{seq, n, N_max, {}, {}};
  for (long N = 0; N <= N_max; ++N) {
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) row.push_back(psi_falling_power(seq, N, k));
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(seq.value(N).pow(static_cast<unsigned long>(n)));
  }
  return sys;
}

NormalOrderOutcome normal_order_solve(const PsiSequence& seq, long n, long N_max) {
  NormalOrderSystem sys = build_system(seq, n, N_max);
  NormalOrderOutcome out;
  out.checked_range = N_max;

  Scalar one = one_like(sys.rhs[0]);
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, zero_like(one));
  if (n == 0) c[0] = one;

  // Rows N = 1..n are triangular: the equation for N first involves c_N,
  // with pivot N_psi^(falling N) = N_psi!.
  for (long N = 1; N <= n; ++N) {
    Scalar acc = sys.rhs[static_cast<size_t>(N)];
    for (long k = 0; k < N; ++k)
      acc = acc - c[static_cast<size_t>(k)] * sys.matrix[static_cast<size_t>(N)][static_cast<size_t>(k)];
    const Scalar& pivot = sys.matrix[static_cast<size_t>(N)][static_cast<size_t>(N)];
    if (pivot.is_zero())
      raise(ErrorKind::SingularSystem,
            "factorial pivot vanishes at N=" + std::to_string(N) + " for " + seq.spec_string());
    acc = acc * pivot.inverse();
    c[static_cast<size_t>(N)] = acc;
  }
  out.coeffs = c;

  // Every remaining row is a pure consistency probe; the first disagreement
  // is the inconsistency witness.
  for (long N = 0; N <= N_max; ++N) {
    if (N >= 1 && N <= n) continue;
    Scalar sub = zero_like(one);
    for (long k = 0; k <= n; ++k)
      sub = sub + c[static_cast<size_t>(k)] * sys.matrix[static_cast<size_t>(N)][static_cast<size_t>(k)];
    const Scalar& direct = sys.rhs[static_cast<size_t>(N)];
    if (!(sub == direct)) {
      out.status = SolveStatus::Inconsistent;
      out.witness_N = N;
      out.witness_lhs = direct.str();
      out.witness_rhs = sub.str();
      return out;
    }
  }
  return out;
}

CheckReport check_observation_21(long n_max, long N_max) {
  PsiSequence q = PsiSequence::q_symbolic();
  CheckBuilder b("observation-21",
                 "seq=" + q.spec_string() + " n_max=" + std::to_string(n_max) +
                     " N_max=" + std::to_string(N_max));
  Table carl = carlitz_q_table(n_max);
  for (long n = 0; n <= n_max; ++n) {
    NormalOrderOutcome out = normal_order_solve(q, n, std::max(N_max, n + 2));
    bool ok = out.status == SolveStatus::UniqueSolution;
    std::vector<Scalar> row;
    for (long k = 0; k <= n; ++k) {
      row.push_back(carl.at(n, k));
      if (ok) ok = out.coeffs[static_cast<size_t>(k)] == carl.at(n, k);
    }
    b.require({{"n", n}}, ok, outcome_str(out), joined(row));
  }
  // The probe rows only certify finitely many N; the identity
  // n_q - k_q = q^k (n-k)_q extends agreement to every N symbolically.
  for (long n = 0; n <= N_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Scalar lhs = q.value(n) - q.value(k);
      Scalar rhs = q_power_scalar(k) * q.value(n - k);
      b.require({{"n", n}, {"k", k}}, lhs == rhs, lhs.str(), rhs.str());
    }
  return b.done();
}

CheckReport check_observation_22(const std::vector<PsiSequence>& seqs, long n_max, long N_max) {
  std::string spec_list;
  for (const PsiSequence& s : seqs) {
    if (q_extension_kind(s.kind()))
      raise(ErrorKind::InvalidParameter, "sequence list must exclude the q-extension family");
    if (!spec_list.empty()) spec_list += ",";
    spec_list += s.spec_string();
  }
  CheckBuilder b("observation-22",
                 "seqs=" + spec_list + " n_max=" + std::to_string(n_max) +
                     " N_max=" + std::to_string(N_max));

  struct Job {
    size_t i;
    long n;
  };
  std::vector<Job> jobs;
  for (size_t i = 0; i < seqs.size(); ++i)
    for (long n = 1; n <= n_max; ++n) jobs.push_back({i, n});
  std::vector<NormalOrderOutcome> outs(jobs.size());
  std::vector<std::exception_ptr> errs(jobs.size());

  // Each solve is pure and writes only its own slot, so the cells can be
  // computed out of order and recorded deterministically afterwards.  Errors
  // are captured per job (they must not unwind through the parallel region)
  // and the lowest-index one is rethrown.
  int nt = effective_threads();
  long total = static_cast<long>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
  for (long j = 0; j < total; ++j) {
    const Job& job = jobs[static_cast<size_t>(j)];
    try {
      outs[static_cast<size_t>(j)] =
          normal_order_solve(seqs[job.i], job.n, std::max(N_max, default_probe(job.n)));
    } catch (...) {
      errs[static_cast<size_t>(j)] = std::current_exception();
    }
  }
  (void)nt;
  for (const std::exception_ptr& err : errs)
    if (err) std::rethrow_exception(err);

  for (size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    const NormalOrderOutcome& out = outs[j];
    IndexList where{{"seq-index", static_cast<long>(job.i)}, {"n", job.n}};
    if (job.n == 1) {
      bool ok = out.status == SolveStatus::UniqueSolution && out.coeffs.size() == 2 &&
                out.coeffs[1].is_one();
      b.cell(where, ok, outcome_str(out), "unique [0, 1]");
    } else {
      b.cell(where, out.status == SolveStatus::Inconsistent, outcome_str(out), "inconsistent");
    }
  }
  return b.done();
}

}  // namespace umbra
