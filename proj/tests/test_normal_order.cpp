#include <optional>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "umbra/normal_order.hpp"
#include "umbra/stirling.hpp"

using namespace umbra;

namespace {

Scalar sr(long n, long d = 1) { return Scalar(Rat(n, d)); }

template <class F>
std::optional<ErrorKind> thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

std::vector<Scalar> power_values(long base, long up_to) {
  std::vector<Scalar> v{sr(0)};
  Rat p(1);
  for (long n = 1; n <= up_to; ++n) {
    v.push_back(Scalar(p));
    p *= Rat(base);
  }
  return v;
}

}  // namespace

TEST_CASE("probe system rows") {
  NormalOrderSystem sys = build_system(PsiSequence::fibonomial(), 2, 4);
  REQUIRE(sys.matrix.size() == 5);
  REQUIRE(sys.rhs.size() == 5);
  for (const auto& row : sys.matrix) REQUIRE(row.size() == 3);

  CHECK(sys.matrix[0][0].is_one());
  CHECK(sys.matrix[0][1].is_zero());
  CHECK(sys.matrix[0][2].is_zero());
  CHECK(sys.rhs[0].is_zero());

  CHECK(sys.matrix[1][1].is_one());
  CHECK(sys.matrix[1][2].is_zero());  // falling factor reaches node 0
  CHECK(sys.rhs[1].is_one());

  CHECK(sys.matrix[2][1].is_one());
  CHECK(sys.matrix[2][2].is_one());
  CHECK(sys.rhs[2].is_one());

  CHECK(sys.matrix[3][1] == sr(2));
  CHECK(sys.matrix[3][2] == sr(2));
  CHECK(sys.rhs[3] == sr(4));

  NormalOrderSystem zero = build_system(PsiSequence::classical(), 0, 2);
  for (long N = 0; N <= 2; ++N) {
    CHECK(zero.matrix[static_cast<size_t>(N)].size() == 1);
    CHECK(zero.rhs[static_cast<size_t>(N)].is_one());
  }

  CHECK(thrown([] { build_system(PsiSequence::fibonomial(), 2, 3); }) == ErrorKind::InvalidParameter);
  CHECK(thrown([] { build_system(PsiSequence::classical(), -1, 5); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("solve recovers the second-kind rows for the q-extension family") {
  PsiSequence cl = PsiSequence::classical();
  Table t = nwc_second_table(cl, 6);
  for (long n = 0; n <= 6; ++n) {
    NormalOrderOutcome out = normal_order_solve(cl, n, default_probe(n));
    REQUIRE(out.status == SolveStatus::UniqueSolution);
    REQUIRE(out.coeffs.size() == static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) CHECK(out.coeffs[static_cast<size_t>(k)] == t.at(n, k));
    CHECK(out.checked_range == default_probe(n));
  }

  NormalOrderOutcome one = normal_order_solve(cl, 1, 6);
  CHECK(one.coeffs[0].is_zero());
  CHECK(one.coeffs[1].is_one());

  PsiSequence q = PsiSequence::q_symbolic();
  NormalOrderOutcome q2 = normal_order_solve(q, 2, 6);
  REQUIRE(q2.status == SolveStatus::UniqueSolution);
  CHECK(q2.coeffs[1].is_one());
  CHECK(q2.coeffs[2] == Scalar::q_var());

  Table carl = carlitz_q_table(5);
  for (long n = 0; n <= 5; ++n) {
    NormalOrderOutcome out = normal_order_solve(q, n, default_probe(n));
    REQUIRE(out.status == SolveStatus::UniqueSolution);
    for (long k = 0; k <= n; ++k) CHECK(out.coeffs[static_cast<size_t>(k)] == carl.at(n, k));
  }

  // q = 1 collapses to the classical solution.
  PsiSequence q1 = PsiSequence::q_numeric(Rat(1));
  for (long n = 0; n <= 5; ++n) {
    NormalOrderOutcome out = normal_order_solve(q1, n, default_probe(n));
    REQUIRE(out.status == SolveStatus::UniqueSolution);
    for (long k = 0; k <= n; ++k)
      CHECK(out.coeffs[static_cast<size_t>(k)] ==
            sr(oracle::stirling2(static_cast<int>(n), static_cast<int>(k))));
  }
}

TEST_CASE("inconsistency witnesses for the Fibonacci weights") {
  NormalOrderOutcome out = normal_order_solve(PsiSequence::fibonomial(), 2, 5);
  REQUIRE(out.status == SolveStatus::Inconsistent);
  CHECK(out.witness_N == 3);
  CHECK(out.witness_lhs == "4");
  CHECK(out.witness_rhs == "2");

  for (long n = 2; n <= 6; ++n) {
    NormalOrderOutcome o = normal_order_solve(PsiSequence::fibonomial(), n, default_probe(n));
    REQUIRE(o.status == SolveStatus::Inconsistent);
    CHECK(o.witness_N <= 2 * n + 3);
  }

  NormalOrderOutcome lin = normal_order_solve(PsiSequence::fibonomial(), 1, 10);
  REQUIRE(lin.status == SolveStatus::UniqueSolution);
  CHECK(lin.coeffs[1].is_one());
}

TEST_CASE("singular pivots are reported") {
  PsiSequence gap = PsiSequence::custom({sr(0), sr(1), sr(0), sr(1), sr(1)});
  CHECK(thrown([&] { normal_order_solve(gap, 2, 4); }) == ErrorKind::SingularSystem);
  CHECK(thrown([] { normal_order_solve(PsiSequence::fermionic_f(), 2, 4); }) ==
        ErrorKind::SingularSystem);

  // The linear case never needs an inverse beyond 1_psi.
  NormalOrderOutcome out = normal_order_solve(PsiSequence::fermionic_f(), 1, 8);
  CHECK(out.status == SolveStatus::UniqueSolution);
}

TEST_CASE("symbolic certification of the q solutions") {
  CheckReport rep = check_observation_21(6, 8);
  CHECK(rep.id == "observation-21");
  CHECK(rep.status == CheckStatus::Holds);
  CHECK(rep.cells.empty());
}

TEST_CASE("every listed non-q sequence turns inconsistent") {
  CheckReport rep = check_observation_22({PsiSequence::fibonomial(), PsiSequence::hyper_l(2)}, 6, 8);
  CHECK(rep.id == "observation-22");
  CHECK(rep.status == CheckStatus::Holds);
  REQUIRE(rep.cells.size() == 12);
  CHECK(rep.cells[0].lhs == "unique [0, 1]");
  CHECK(rep.cells[1].lhs == "inconsistent at N=3 (4 vs 2)");
  for (const auto& c : rep.cells) CHECK(c.holds);

  CheckReport pow2 = check_observation_22({PsiSequence::custom(power_values(2, 10))}, 3, 5);
  CHECK(pow2.status == CheckStatus::Holds);
  REQUIRE(pow2.cells.size() == 3);

  CHECK(thrown([] { check_observation_22({PsiSequence::classical()}, 3, 5); }) ==
        ErrorKind::InvalidParameter);
  CHECK(thrown([] { check_observation_22({PsiSequence::q_numeric(Rat(1, 2))}, 3, 5); }) ==
        ErrorKind::InvalidParameter);
  CHECK(thrown([] { check_observation_22({PsiSequence::fermionic_f()}, 3, 5); }) ==
        ErrorKind::SingularSystem);
}

TEST_CASE("a covert q-extension defeats the inconsistency sweep") {
  // Classical values smuggled in as a custom list stay solvable, so the
  // check honestly fails with the offending cell as witness.
  std::vector<Scalar> vals;
  for (long n = 0; n <= 8; ++n) vals.push_back(sr(n));
  CheckReport rep = check_observation_22({PsiSequence::custom(vals)}, 2, 4);
  CHECK(rep.status == CheckStatus::Fails);
  REQUIRE(rep.witness.has_value());
  CHECK(witness_index(rep, "n") == 2);
  CHECK(rep.witness->lhs == "unique [0, 1, 1]");
}
