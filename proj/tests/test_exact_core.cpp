#include <random>

#include "doctest.h"
#include "umbra/divided_diff.hpp"
#include "umbra/series.hpp"

using namespace umbra;

namespace {

Scalar sr(long n, long d = 1) { return Scalar(Rat(n, d)); }

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  return Rat(num(rng), den(rng));
}

QFun random_qfun(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&] {
    std::vector<Rat> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(random_rat(rng));
    return Poly<Rat>::from_coeffs(std::move(c));
  };
  Poly<Rat> den = poly();
  while (den.is_zero()) den = poly();
  return QFun(poly(), den);
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(1, -2) < Rat(0));
  CHECK(Rat::parse("7/21") == Rat(1, 3));
  CHECK(Rat::parse_decimal("1e-9") == Rat(1) / Rat::pow10(9));
  CHECK(Rat::parse_decimal("2.5e-3") == Rat(1, 400));
  CHECK(Rat::parse_decimal("-0.125") == Rat(-1, 8));
  CHECK(Rat(3, 7).pow(2) == Rat(9, 49));
  CHECK_THROWS_AS(Rat(1, 0), Error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
  CHECK_THROWS_AS(Rat(0).inverse(), Error);
  CHECK(Rat::factorial(6) == Rat(720));
  CHECK(Rat::binomial(10, 3) == Rat(120));
  CHECK(Rat::fibonacci(6) == Rat(8));
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
  }
}

TEST_CASE("polynomial arithmetic and division") {
  Poly<Rat> x = Poly<Rat>::monomial(Rat(1), 1);
  Poly<Rat> p = x * x - Poly<Rat>(Rat(1));
  Poly<Rat> d = x - Poly<Rat>(Rat(1));
  auto [q, r] = divrem(p, d);
  CHECK(r.is_zero());
  CHECK(q == x + Poly<Rat>(Rat(1)));
  CHECK(gcd(p, d) == d);
  CHECK(p.eval(Rat(3)) == Rat(8));
  CHECK((x * x * x).derivative() == Poly<Rat>::monomial(Rat(3), 2));
  CHECK(Poly<Rat>().degree() == -1);
  CHECK(Poly<Rat>(Rat(0)).is_zero());
  Poly<Rat> lin = Poly<Rat>(Rat(1)).times_linear(Rat(2));
  CHECK(lin.eval(Rat(2)).is_zero());
  CHECK(lin.eval(Rat(5)) == Rat(3));
}

TEST_CASE("rational function canonical form") {
  Poly<Rat> x = Poly<Rat>::monomial(Rat(1), 1);
  QFun f(x * x - Poly<Rat>(Rat(1)), x - Poly<Rat>(Rat(1)));
  CHECK(f.is_poly());
  CHECK(f.num() == x + Poly<Rat>(Rat(1)));
  QFun g(Poly<Rat>(Rat(2)), Poly<Rat>::from_coeffs({Rat(2), Rat(2)}));
  CHECK(g.den().leading() == Rat(1));  // monic denominator
  CHECK(g == QFun(Poly<Rat>(Rat(1)), Poly<Rat>::from_coeffs({Rat(1), Rat(1)})));
  CHECK(QFun().is_zero());
  CHECK((g - g).is_zero());
  CHECK((g - g).den() == Poly<Rat>(Rat(1)));  // zero is 0/1
  CHECK_THROWS_AS(QFun(x, Poly<Rat>()), Error);
  CHECK_THROWS_AS(QFun().inverse(), Error);
}

TEST_CASE("rational function field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    QFun a = random_qfun(rng), b = random_qfun(rng), c = random_qfun(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("scalar tags") {
  CHECK((Scalar(Rat(1, 3)) + Scalar(Rat(1, 6))) == sr(1, 2));
  Scalar q = Scalar::q_var();
  Scalar one_q = Scalar::from_int(1, Tag::Q);
  CHECK(((one_q + q) * (one_q + q).inverse()).is_one());
  CHECK_THROWS_AS(Scalar(Rat(1)) + Scalar(QFun(1)), Error);
  CHECK_THROWS_AS(Scalar(QFun(1)) * Scalar::pq_p(), Error);
  CHECK(Scalar::from_int(0, Tag::PQ).is_zero());
  CHECK((q.pow(3)).str() == "q^3");
  CHECK((Scalar::pq_p() + Scalar::pq_q()).tag() == Tag::PQ);
  // q-substitution
  Scalar f = (one_q + q) * (one_q + q);
  CHECK(f.subst_q(Rat(1, 2)) == sr(9, 4));
  CHECK(sr(5).subst_q(Rat(1, 2)) == sr(5));
  CHECK_THROWS_AS(Scalar::pq_p().subst_q(Rat(2)), Error);
  // pole reporting
  Scalar pole = (one_q - q).inverse();
  CHECK_THROWS_AS(pole.subst_q(Rat(1)), Error);
}

TEST_CASE("series multiplication truncates to smaller order") {
  Series a(Tag::Rational, 5), b(Tag::Rational, 3);
  for (int i = 0; i <= 5; ++i) a.coeff(i) = sr(i + 1);
  for (int i = 0; i <= 3; ++i) b.coeff(i) = sr(1);
  Series p = series_mul(a, b);
  CHECK(p.order() == 3);
  CHECK(p.coeff(3) == sr(1 + 2 + 3 + 4));
}

TEST_CASE("series inverse of the exponential series") {
  Series ex(Tag::Rational, 6);
  for (int i = 0; i <= 6; ++i) ex.coeff(i) = Scalar(Rat(1) / Rat::factorial(i));
  Series inv = series_inverse(ex);
  for (int i = 0; i <= 6; ++i) {
    Rat want = (i % 2 ? -Rat(1) : Rat(1)) / Rat::factorial(i);
    CHECK(inv.coeff(i) == Scalar(want));
  }
  CHECK(series_mul(ex, inv).coeff(0).is_one());
  Series z(Tag::Rational, 2);
  CHECK_THROWS_AS(series_inverse(z), Error);
}

TEST_CASE("series exp examples") {
  Series two_x(Tag::Rational, 3);
  two_x.coeff(1) = sr(2);
  Series e2 = series_exp(two_x);
  CHECK(e2.coeff(0) == sr(1));
  CHECK(e2.coeff(1) == sr(2));
  CHECK(e2.coeff(2) == sr(2));
  CHECK(e2.coeff(3) == sr(4, 3));

  Series em1(Tag::Rational, 5);
  for (int i = 1; i <= 5; ++i) em1.coeff(i) = Scalar(Rat(1) / Rat::factorial(i));
  Series bell_egf = series_exp(em1);
  CHECK(bell_egf.coeff(0) == sr(1));
  CHECK(bell_egf.coeff(1) == sr(1));
  CHECK(bell_egf.coeff(2) == sr(1));
  CHECK(bell_egf.coeff(3) == sr(5, 6));
  CHECK(bell_egf.coeff(4) == sr(5, 8));
  CHECK(bell_egf.coeff(5) == sr(13, 30));

  Series bad(Tag::Rational, 2);
  bad.coeff(0) = sr(1);
  CHECK_THROWS_AS(series_exp(bad), Error);
}

TEST_CASE("series exp over the symbolic-q field") {
  Series s(Tag::Q, 4);
  s.coeff(1) = Scalar::q_var();
  Series e = series_exp(s);
  CHECK(e.coeff(2) == Scalar::q_var().pow(2) / Scalar::from_int(2, Tag::Q));
  CHECK(e.coeff(4) == Scalar::q_var().pow(4) / Scalar::from_int(24, Tag::Q));
}

TEST_CASE("divided differences") {
  SPoly cube = SPoly::monomial(sr(1), 3);
  CHECK(divided_difference({sr(0), sr(1), sr(2)}, cube) == sr(3));
  CHECK(divided_difference({sr(0), sr(1, 2), sr(1)}, cube) == sr(3, 2));
  SPoly sq = SPoly::monomial(sr(1), 2);
  CHECK(divided_difference({sr(0), sr(1), sr(2), sr(3)}, sq).is_zero());
  CHECK(divided_difference({sr(5)}, cube) == sr(125));
  CHECK_THROWS_AS(divided_difference({sr(1), sr(1)}, cube), Error);
  // symmetry under node permutation
  CHECK(divided_difference({sr(2), sr(0), sr(1)}, cube) ==
        divided_difference({sr(0), sr(1), sr(2)}, cube));
  // first divided difference is a difference quotient
  SPoly p = SPoly::from_coeffs({sr(1), sr(-2), sr(0), sr(4)});
  Scalar want = (p.eval(sr(3)) - p.eval(sr(1))) / (sr(3) - sr(1));
  CHECK(divided_difference({sr(1), sr(3)}, p) == want);
  // exactness over the symbolic field: nodes 0, 1q, 2q of e_2 give 1
  std::vector<Scalar> nodes = {Scalar::from_int(0, Tag::Q),
                               Scalar(QFun(Poly<Rat>(Rat(1)))),
                               Scalar(QFun(Poly<Rat>::from_coeffs({Rat(1), Rat(1)})))};
  SPoly e2 = SPoly::monomial(Scalar::from_int(1, Tag::Q), 2);
  CHECK(divided_difference(nodes, e2).is_one());
}

TEST_CASE("scalar string forms") {
  CHECK(sr(-5, 3).str() == "-5/3");
  Scalar q = Scalar::q_var();
  Scalar one = Scalar::from_int(1, Tag::Q);
  CHECK((one + q + q * q).str() == "1+q+q^2");
  CHECK((one / (one + q)).str() == "(1)/(1+q)");
  Scalar p = Scalar::pq_p(), qq = Scalar::pq_q();
  CHECK((p + qq).str() == "q+p");
}
