#include <cstdint>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/newton_stirling.hpp"
#include "umbra/numeric.hpp"

using namespace umbra;

namespace {

Poly<Rat> xpow(long n) { return Poly<Rat>::monomial(Rat(1), static_cast<int>(n)); }

// Deterministic generator for random-coefficient property tests.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  long next(long lo, long hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("certified rational exponential") {
  BoundedRat e1 = exp_rational(Rat(1), Rat(1, 1000000000000));
  CHECK(e1.err < Rat(1, 1000000000000));
  // 2.718281828459... bracketed
  CHECK(e1.val > Rat(2718281828, 1000000000));
  CHECK(e1.val < Rat(2718281829, 1000000000));
  BoundedRat em = exp_rational(Rat(-1), Rat(1, 1000000000000));
  BoundedRat prod = e1 * em;
  CHECK(within(prod, Rat(1), Rat(1, 100000000000)));
  BoundedRat zero = exp_rational(Rat(0), Rat(1, 1000));
  CHECK(zero.val == Rat(1));
  CHECK_THROWS_AS(exp_rational(Rat(1), Rat(0)), Error);
}

TEST_CASE("newton coefficients of monomials are Stirling numbers") {
  CHECK(newton_stirling(xpow(3), 2) == Rat(3));
  CHECK(newton_stirling(xpow(2), 3) == Rat(0));
  CHECK(newton_stirling(Poly<Rat>::from_coeffs({Rat(1)}), 0) == Rat(1));
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(newton_stirling(xpow(n), k) == Rat(oracle::stirling2(n, k)));
}

TEST_CASE("both newton routes agree on random polynomials") {
  Lcg rng(20260823);
  for (int trial = 0; trial < 200; ++trial) {
    long deg = rng.next(0, 8);
    std::vector<Rat> c;
    for (long i = 0; i <= deg; ++i) c.emplace_back(rng.next(-9, 9), rng.next(1, 5));
    Poly<Rat> b = Poly<Rat>::from_coeffs(std::move(c));
    long k = rng.next(0, 9);
    CHECK_NOTHROW(newton_stirling(b, k));  // internal cross-assertion
  }
}

TEST_CASE("generalized Stirling numbers") {
  // r = s = 1 collapses to the classical second kind.
  for (long n = 1; n <= 6; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(generalized_S_rs(n, k, 1, 1) == Rat(oracle::stirling2(n, k)));
  CHECK(b_ns_poly(3, 1, 1) == Poly<Rat>::from_coeffs({Rat(0), Rat(0), Rat(0), Rat(1)}));

  // Single factor: leading Newton coefficient of [x]^(s) is 1.
  for (long s = 1; s <= 4; ++s) CHECK(generalized_S_rs(1, s, s + 1, s) == Rat(1));

  CHECK(generalized_S_rs(3, 1, 2, 2) == Rat(0));  // k < s
  CHECK_THROWS_AS(generalized_S_rs(2, 5, 2, 2), Error);  // k > n*s
  CHECK_THROWS_AS(generalized_S_rs(2, 1, 1, 2), Error);  // r < s
}

TEST_CASE("Abel-Goncharov coefficients") {
  CHECK(abel_goncharov_d(3, 2) == Rat(3, 2));
  for (long n = 1; n <= 8; ++n) {
    for (long k = 1; k <= n; ++k) {
      Rat d = abel_goncharov_d(n, k);  // internally asserts k^{n-k} d = {n,k}
      CHECK(Rat(k).pow(n - k) * d == Rat(oracle::stirling2(n, k)));
    }
    CHECK(abel_goncharov_d(n, n) == Rat(1));
  }
  CHECK(abel_goncharov_d(2, 3) == Rat(0));
  CHECK_THROWS_AS(abel_goncharov_d(3, 0), Error);
}

TEST_CASE("Bell-like sums") {
  CHECK(ns_bell(xpow(4)) == Rat(oracle::bell(4)));
  CHECK(ns_bell(xpow(0)) == Rat(1));
  CHECK(ns_bell(b_ns_poly(3, 1, 1)) == Rat(oracle::bell(3)));
  // Positivity of B_{r,s}(n) for small parameters.
  for (long r = 1; r <= 3; ++r)
    for (long s = 1; s <= r; ++s)
      for (long n = 1; n <= 6; ++n) CHECK(ns_bell(b_ns_poly(n, r, s)) > Rat(0));
}

TEST_CASE("numeric Dobinski comparison for Newton coefficients") {
  CheckReport r1 = ns_dobinski_numeric(xpow(3), Rat(1), 60);
  CHECK(r1.status == CheckStatus::Holds);

  CheckReport r2 = ns_dobinski_numeric(xpow(2), Rat(2), 80);
  CHECK(r2.status == CheckStatus::Holds);

  CheckReport r3 = ns_dobinski_numeric(Poly<Rat>::from_coeffs({Rat(1)}), Rat(1, 2), 40);
  CHECK(r3.status == CheckStatus::Holds);

  CHECK_THROWS_AS(ns_dobinski_numeric(xpow(3), Rat(1), 5), Error);   // too few terms
  CHECK_THROWS_AS(ns_dobinski_numeric(xpow(3), Rat(9), 20), Error);  // last term too big
}
