#include "umbra/bell_dobinski.hpp"

#include <functional>
#include <string>
#include <utility>

#include "umbra/partition_stats.hpp"
#include "umbra/series.hpp"
#include "umbra/stirling.hpp"

namespace umbra {

namespace {

Scalar rat_scalar(const Rat& v, Tag t) {
  switch (t) {
    case Tag::Rational: return Scalar(v);
    case Tag::Q: return Scalar(QFun(Poly<Rat>(v)));
    case Tag::PQ: return Scalar(PQFun(Poly<QFun>(QFun(Poly<Rat>(v)))));
  }
  raise(ErrorKind::InvalidParameter, "unknown scalar tag");
}

std::string seq_n_params(const PsiSequence& seq, const char* key, long v) {
  return "seq=" + seq.spec_string() + " " + key + "=" + std::to_string(v);
}

// Exact partial sum of a nonnegative-term series whose term ratios are
// non-increasing past the truncation point (every call site arranges this).
// The tail is then dominated by the geometric series started at t_{K+1}.
BoundedRat tail_sum(long terms, const std::function<Rat(long)>& term) {
  if (terms < 1) raise(ErrorKind::InvalidParameter, "terms must be at least 1");
  Rat sum(0);
  for (long m = 0; m <= terms; ++m) sum += term(m);
  Rat t1 = term(terms + 1);
  Rat t2 = term(terms + 2);
  if (t1 == Rat(0)) {
    if (t2 != Rat(0))
      raise(ErrorKind::InsufficientTerms, "truncated inside the series support");
    return {sum, Rat(0)};
  }
  if (!(t2 < t1)) raise(ErrorKind::NotConvergent, "term ratio not below one at the truncation");
  return {sum, t1 / (Rat(1) - t2 / t1)};
}

// tail_sum plus plausibility gates against the target tolerance, so that a
// hopeless truncation surfaces as InsufficientTerms rather than a Fails.
BoundedRat certified_sum(long terms, const Rat& tol, const std::function<Rat(long)>& term) {
  if (!(tol > Rat(0))) raise(ErrorKind::InvalidParameter, "tol must be positive");
  BoundedRat s = tail_sum(terms, term);
  Rat last = term(terms);
  if (!(last * Rat(10) < tol) || !(s.err < tol))
    raise(ErrorKind::InsufficientTerms, "partial sum cannot certify the tolerance");
  return s;
}

Rat seq_num(const PsiSequence& seq, long k) { return seq.value(k).rat(); }

Rat seq_fact(const PsiSequence& seq, long k) { return seq.factorial(k).rat(); }

void require_numeric(const PsiSequence& seq, long probe) {
  if (seq.tag() != Tag::Rational)
    raise(ErrorKind::InvalidParameter, "needs a numeric sequence");
  if (!seq.capabilities(probe).numeric_convergent)
    raise(ErrorKind::NotConvergent, "sequence values do not support a convergent series");
}

Rat carlitz_row_sum_at(const Rat& q0, long n) {
  Table t = carlitz_q_table_at(q0, n);
  Rat s(0);
  for (long k = 0; k <= n; ++k) s += t.at(n, k).rat();
  return s;
}

CheckReport value_only_report(std::string id, std::string params, const BoundedRat& value,
                              long n, std::string note) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.params = std::move(params);
  rep.status = CheckStatus::NotApplicable;
  rep.witness = CheckWitness{{{"n", n}}, approx_str(value.val), "no exact target"};
  rep.cells.push_back({{{"n", n}}, true, approx_str(value.val), "no exact target"});
  rep.note = std::move(note);
  return rep;
}

}  // namespace

Scalar bell_nwc(const PsiSequence& seq, long n) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "n must be nonnegative");
  Table t = nwc_second_table(seq, n);
  Scalar s = Scalar::from_int(0, seq.tag());
  for (long k = 0; k <= n; ++k) s = s + t.at(n, k);
  return s;
}

Scalar epsilon_coefficient(const PsiSequence& seq, long r, long K) {
  if (r < 0 || K < r) raise(ErrorKind::InvalidParameter, "requires 0 <= r <= K");
  if (!seq.capabilities(K).distinct_nodes)
    raise(ErrorKind::RepeatedNodes, "nodes 0..K must be pairwise distinct");
  Scalar rv = seq.value(r);
  Scalar prod = Scalar::from_int(1, seq.tag());
  for (long j = 0; j < r; ++j) {
    Scalar d = rv - seq.value(j);
    if (d.is_zero()) raise(ErrorKind::RepeatedNodes, "coincident interpolation nodes");
    prod = prod * d.inverse();
  }
  Scalar acc = prod;
  for (long k = r + 1; k <= K; ++k) {
    Scalar d = rv - seq.value(k);
    if (d.is_zero()) raise(ErrorKind::RepeatedNodes, "coincident interpolation nodes");
    prod = prod * d.inverse();
    acc = acc + prod;
  }
  return seq.factorial(r) * acc;
}

CheckReport check_dobinski_rearrangement(const PsiSequence& seq, long n, long K) {
  if (n < 0 || K < n) raise(ErrorKind::InvalidParameter, "requires 0 <= n <= K");
  CheckBuilder b("rearrangement",
                 seq_n_params(seq, "n", n) + " K=" + std::to_string(K));
  Scalar lhs = Scalar::from_int(0, seq.tag());
  for (long r = 0; r <= K; ++r) {
    Scalar w = seq.value(r).pow(static_cast<unsigned long>(n)) / seq.factorial(r);
    lhs = lhs + epsilon_coefficient(seq, r, K) * w;
  }
  Scalar rhs = bell_nwc(seq, n);
  b.cell({{"n", n}}, lhs == rhs, lhs.str(), rhs.str());
  return b.done();
}

CheckReport check_egf18(const PsiSequence& seq, long n_max, long K) {
  if (n_max < 0 || K < n_max) raise(ErrorKind::InvalidParameter, "requires 0 <= n_max <= K");
  CheckBuilder b("egf18", seq_n_params(seq, "n_max", n_max) + " K=" + std::to_string(K));
  int order = static_cast<int>(n_max);
  Series total(seq.tag(), order);
  for (long r = 0; r <= K; ++r) {
    Scalar w = epsilon_coefficient(seq, r, K) / seq.factorial(r);
    Scalar rv = seq.value(r);
    Series er(seq.tag(), order);
    Scalar p = Scalar::from_int(1, seq.tag());
    for (int m = 0; m <= order; ++m) {
      er.coeff(m) = p / seq.factorial(m);
      p = p * rv;
    }
    total = series_add(total, series_scale(er, w));
  }
  for (long nn = 0; nn <= n_max; ++nn) {
    Scalar lhs = total.coeff(static_cast<int>(nn)) * seq.factorial(nn);
    Scalar rhs = bell_nwc(seq, nn);
    b.require({{"n", nn}}, lhs == rhs, lhs.str(), rhs.str());
  }
  return b.done();
}

std::vector<CheckReport> check_epsilon_literal(long K) {
  if (K < 0) raise(ErrorKind::InvalidParameter, "K must be nonnegative");
  std::vector<CheckReport> out;
  {
    PsiSequence cl = PsiSequence::classical();
    CheckBuilder b("epsilon-literal-classical", "K=" + std::to_string(K));
    for (long r = 0; r <= K; ++r) {
      Rat literal(0);
      for (long k = r; k <= K; ++k) {
        Rat t = Rat(1) / Rat::factorial(static_cast<unsigned long>(k - r));
        literal += (k - r) % 2 == 0 ? t : -t;
      }
      Scalar product = epsilon_coefficient(cl, r, K);
      b.cell({{"r", r}}, Scalar(literal) == product, literal.str(), product.str());
    }
    out.push_back(b.done());
  }
  {
    PsiSequence q = PsiSequence::q_symbolic();
    CheckBuilder b("epsilon-literal-q", "K=" + std::to_string(K));
    b.note("series form omits a q^(-r(k-r)) factor; the r = 0 column and the k = r term agree");
    for (long r = 0; r <= K; ++r) {
      Scalar literal = Scalar::from_int(0, Tag::Q);
      for (long k = r; k <= K; ++k) {
        Scalar t = q.factorial(k - r).inverse();
        literal = (k - r) % 2 == 0 ? literal + t : literal - t;
      }
      literal = literal * q_power_scalar(-(r * (r - 1)) / 2);
      Scalar product = epsilon_coefficient(q, r, K);
      b.cell({{"r", r}}, literal == product, literal.str(), product.str());
    }
    out.push_back(b.done());
  }
  return out;
}

CheckReport check_exp_pol_II(const PsiSequence& seq, long n, const Rat& x_sample, long K) {
  if (n < 0 || K < n) raise(ErrorKind::InvalidParameter, "requires 0 <= n <= K");
  CheckBuilder b("exp-pol-II", seq_n_params(seq, "n", n) + " x=" + x_sample.str() +
                                   " K=" + std::to_string(K));
  if (!(x_sample == Rat(1)))
    b.note("general-x form; the identity is only claimed at x = 1");
  Scalar xs = rat_scalar(x_sample, seq.tag());
  Scalar lhs = Scalar::from_int(0, seq.tag());
  for (long r = 0; r <= K; ++r) {
    Scalar w = seq.value(r).pow(static_cast<unsigned long>(n)) *
               xs.pow(static_cast<unsigned long>(r)) / seq.factorial(r);
    lhs = lhs + epsilon_coefficient(seq, r, K) * w;
  }
  Table t = nwc_second_table(seq, n);
  Scalar rhs = Scalar::from_int(0, seq.tag());
  for (long k = 0; k <= n; ++k) rhs = rhs + t.at(n, k) * xs.pow(static_cast<unsigned long>(k));
  b.cell({{"n", n}}, lhs == rhs, lhs.str(), rhs.str());
  return b.done();
}

std::vector<Scalar> bell_umbral_binomial(const PsiSequence& seq, long n_max) {
  if (n_max < 0) raise(ErrorKind::IndexOutOfRange, "n_max must be nonnegative");
  if (!seq.capabilities(n_max + 2).invertible_factorials)
    raise(ErrorKind::ZeroFactorial, "umbral recurrence needs invertible factorials");
  std::vector<Scalar> bell;
  bell.reserve(static_cast<size_t>(n_max) + 1);
  bell.push_back(Scalar::from_int(1, seq.tag()));
  for (long m = 0; m + 1 <= n_max; ++m) {
    Scalar next = Scalar::from_int(0, seq.tag());
    for (long k = 0; k <= m; ++k) next = next + seq.binomial(m, k) * bell[static_cast<size_t>(k)];
    bell.push_back(next);
  }
  return bell;
}

CheckReport compare_umbral_vs_nwc(const PsiSequence& seq, long n_max) {
  CheckBuilder b("umbral-vs-nwc", seq_n_params(seq, "n_max", n_max));
  std::vector<Scalar> umbral = bell_umbral_binomial(seq, n_max);
  for (long n = 0; n <= n_max; ++n) {
    Scalar rhs = bell_nwc(seq, n);
    const Scalar& lhs = umbral[static_cast<size_t>(n)];
    b.cell({{"n", n}}, lhs == rhs, lhs.str(), rhs.str());
  }
  return b.done();
}

std::vector<CheckReport> check_q_bell_recurrences(long n_max) {
  if (n_max < 0) raise(ErrorKind::InvalidParameter, "n_max must be nonnegative");
  PsiSequence q = PsiSequence::q_symbolic();
  std::vector<CheckReport> out;
  {
    Table t = carlitz_q_table(n_max + 1);
    auto row_sum = [&](long n) {
      Scalar s = Scalar::from_int(0, Tag::Q);
      for (long k = 0; k <= n; ++k) s = s + t.at(n, k);
      return s;
    };
    CheckBuilder b("q-bell-recurrence-carlitz", "n_max=" + std::to_string(n_max));
    for (long n = 0; n <= n_max; ++n) {
      Scalar lhs = row_sum(n + 1);
      Scalar rhs = Scalar::from_int(0, Tag::Q);
      for (long l = 0; l <= n; ++l)
        rhs = rhs + q.binomial(n, l) * q_power_scalar(l) * row_sum(l);
      b.cell({{"n", n}}, lhs == rhs, lhs.str(), rhs.str());
    }
    out.push_back(b.done());
  }
  {
    Table t = nwc_second_table(q, n_max + 1);
    auto row_sum = [&](long n) {
      Scalar s = Scalar::from_int(0, Tag::Q);
      for (long k = 0; k <= n; ++k) s = s + t.at(n, k);
      return s;
    };
    auto weighted_row_sum = [&](long n) {
      Scalar s = Scalar::from_int(0, Tag::Q);
      for (long k = 0; k <= n; ++k) s = s + q_power_scalar(k) * t.at(n, k);
      return s;
    };
    CheckBuilder b("q-bell-recurrence-nwc", "n_max=" + std::to_string(n_max));
    for (long n = 0; n <= n_max; ++n) {
      Scalar lhs = row_sum(n + 1);
      Scalar rhs = Scalar::from_int(0, Tag::Q);
      for (long l = 0; l <= n; ++l)
        rhs = rhs + q.binomial(n, l) * q_power_scalar(l + 1) * weighted_row_sum(l);
      b.cell({{"n", n}}, lhs == rhs, lhs.str(), rhs.str());
    }
    out.push_back(b.done());
  }
  return out;
}

std::vector<Scalar> prefab_bell(const PsiSequence& seq, long n_max) {
  if (n_max < 0) raise(ErrorKind::IndexOutOfRange, "n_max must be nonnegative");
  Series e = exp_psi_series(seq, static_cast<int>(n_max));
  e.coeff(0) = Scalar::from_int(0, seq.tag());
  Series g = series_exp(e);
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n)
    out.push_back(seq.factorial(n) * g.coeff(static_cast<int>(n)));
  return out;
}

namespace {

// Coefficients of e_psi(x)^{-1} * sum_k k_psi^n x^k/k_psi!, computed through
// the factorial-scaled division u_m = m_psi^n - sum_{j=1..m} binom(m,j)
// u_{m-j}, where u_m = s_m * m_psi!.  The scaled recurrence never divides, so
// symbolic kinds stay polynomial until the final unscaling.
std::vector<Scalar> gordian_scaled_coeffs(const PsiSequence& seq, long n, int order) {
  std::vector<Scalar> u;
  u.reserve(static_cast<size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    Scalar v = seq.value(m).pow(static_cast<unsigned long>(n));
    for (int j = 1; j <= m; ++j)
      v = v - seq.binomial(m, j) * u[static_cast<size_t>(m - j)];
    u.push_back(v);
  }
  return u;
}

}  // namespace

GordianResult gordian_S_psi(const PsiSequence& seq, long n, int order) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "n must be nonnegative");
  if (order < 2 * n + 8) raise(ErrorKind::InvalidParameter, "order must be at least 2n + 8");
  if (!seq.capabilities(order + 2).invertible_factorials)
    raise(ErrorKind::ZeroFactorial, "series needs invertible factorials");
  std::vector<Scalar> u = gordian_scaled_coeffs(seq, n, order);

  GordianResult res;
  res.coeffs.reserve(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    res.coeffs.push_back(u[static_cast<size_t>(i)].is_zero()
                             ? Scalar::from_int(0, seq.tag())
                             : u[static_cast<size_t>(i)] / seq.factorial(i));

  std::string params = seq_n_params(seq, "n", n) + " order=" + std::to_string(order);
  bool asserted =
      seq.kind() == PsiKind::Classical || seq.kind() == PsiKind::QGaussSymbolic;
  if (asserted) {
    Table head = seq.kind() == PsiKind::Classical ? nwc_second_table(seq, n)
                                                  : carlitz_q_table(n);
    CheckBuilder b("gordian-series", params);
    for (long k = 0; k <= n; ++k) {
      const Scalar& got = res.coeffs[static_cast<size_t>(k)];
      b.require({{"i", k}}, got == head.at(n, k), got.str(), head.at(n, k).str());
    }
    for (int i = static_cast<int>(n) + 1; i <= order; ++i)
      b.require({{"i", i}}, u[static_cast<size_t>(i)].is_zero(),
                res.coeffs[static_cast<size_t>(i)].str(), "0");
    res.report = b.done();
    return res;
  }
  CheckReport rep;
  rep.id = "gordian-series";
  rep.params = params;
  rep.status = CheckStatus::NotApplicable;
  bool truncates = true;
  for (int i = static_cast<int>(n) + 1; i <= order; ++i) {
    bool z = u[static_cast<size_t>(i)].is_zero();
    const Scalar& got = res.coeffs[static_cast<size_t>(i)];
    rep.cells.push_back({{{"i", i}}, z, got.str(), "0"});
    if (!z && truncates) {
      truncates = false;
      rep.witness = CheckWitness{{{"i", i}}, got.str(), "0"};
    }
  }
  rep.note = truncates
                 ? "series truncates at degree n; head reported without a pinned target"
                 : "series does not truncate at degree n; first nonzero tail coefficient "
                   "recorded as witness";
  res.report = std::move(rep);
  return res;
}

CheckReport ghw_exp_poly_series(const PsiSequence& seq, long n, int order) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "n must be nonnegative");
  if (order < n + 8) raise(ErrorKind::InvalidParameter, "order must be at least n + 8");
  if (!seq.capabilities(order + 2).invertible_factorials)
    raise(ErrorKind::ZeroFactorial, "series needs invertible factorials");
  Series s = exp_psi_series(seq, order);
  for (long round = 0; round < n; ++round) {
    Series d = psi_derivative_series(s, seq);
    Series lifted(seq.tag(), order);
    for (int i = 1; i <= order; ++i) lifted.coeff(i) = d.coeff(i - 1);
    s = std::move(lifted);
  }
  // Divide by e_psi(x) in the factorial-scaled form (see gordian_scaled_coeffs).
  std::vector<Scalar> w;
  w.reserve(static_cast<size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    Scalar v = seq.factorial(m) * s.coeff(m);
    for (int j = 1; j <= m; ++j)
      v = v - seq.binomial(m, j) * w[static_cast<size_t>(m - j)];
    w.push_back(v);
  }

  CheckBuilder b("ghw-exp-poly", seq_n_params(seq, "n", n) + " order=" + std::to_string(order));
  GordianResult ref = gordian_S_psi(seq, n, std::max(order, static_cast<int>(2 * n + 8)));
  Table head = seq.kind() == PsiKind::Classical ? nwc_second_table(seq, n) : Table{};
  for (int i = 0; i <= order; ++i) {
    Scalar got = w[static_cast<size_t>(i)].is_zero()
                     ? Scalar::from_int(0, seq.tag())
                     : w[static_cast<size_t>(i)] / seq.factorial(i);
    b.require({{"i", i}}, got == ref.coeffs[static_cast<size_t>(i)], got.str(),
              ref.coeffs[static_cast<size_t>(i)].str());
    if (seq.kind() == PsiKind::Classical && i <= n)
      b.require({{"i", i}}, got == head.at(n, i), got.str(), head.at(n, i).str());
  }
  return b.done();
}

const char* dobinski_variant_name(DobinskiVariant v) {
  switch (v) {
    case DobinskiVariant::Classical: return "classical";
    case DobinskiVariant::CarlitzQ: return "carlitzQ";
    case DobinskiVariant::Milne: return "milne";
    case DobinskiVariant::Psi: return "psi";
    case DobinskiVariant::Cigl: return "cigl";
  }
  return "?";
}

CheckReport dobinski_numeric(DobinskiVariant variant, const PsiSequence& seq, long n,
                             long terms, const Rat& tol) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "n must be nonnegative");
  if (!(tol > Rat(0))) raise(ErrorKind::InvalidParameter, "tol must be positive");
  std::string params = std::string("variant=") + dobinski_variant_name(variant) + " " +
                       seq_n_params(seq, "n", n) + " terms=" + std::to_string(terms) +
                       " tol=" + tol.str();
  unsigned long np = static_cast<unsigned long>(n);

  switch (variant) {
    case DobinskiVariant::Classical: {
      if (seq.kind() != PsiKind::Classical)
        raise(ErrorKind::InvalidParameter, "classical variant takes the classical sequence");
      BoundedRat s = certified_sum(terms, tol, [&](long m) {
        return Rat(m).pow(np) / Rat::factorial(static_cast<unsigned long>(m));
      });
      // The exp certificate is tightened by |s| so the product error stays
      // well inside tol even when the unnormalized sum is large.
      BoundedRat lhs = exp_rational(Rat(-1), tol / (Rat(100) * (s.val.abs() + Rat(1)))) * s;
      Rat target = bell_nwc(seq, n).rat();
      CheckBuilder b("dobinski-numeric", params);
      b.cell({{"n", n}}, within(lhs, target, tol), approx_str(lhs.val), target.str());
      return b.done();
    }
    case DobinskiVariant::CarlitzQ:
    case DobinskiVariant::Milne: {
      if (seq.kind() != PsiKind::QGaussNumeric)
        raise(ErrorKind::InvalidParameter, "variant needs a numeric q sequence");
      require_numeric(seq, terms + 3);
      bool milne = variant == DobinskiVariant::Milne;
      BoundedRat s = certified_sum(terms, tol, [&](long m) {
        if (milne && m == 0) return Rat(0);
        return seq_num(seq, m).pow(np) / seq_fact(seq, milne ? m - 1 : m);
      });
      BoundedRat norm = certified_sum(terms, tol, [&](long m) {
        return Rat(1) / seq_fact(seq, m);
      });
      BoundedRat lhs = norm.inverse() * s;
      Rat target = carlitz_row_sum_at(seq.q0(), milne ? n + 1 : n);
      CheckBuilder b("dobinski-numeric", params);
      b.cell({{"n", n}}, within(lhs, target, tol), approx_str(lhs.val), target.str());
      return b.done();
    }
    case DobinskiVariant::Psi: {
      require_numeric(seq, terms + 3);
      BoundedRat s = certified_sum(terms, tol, [&](long m) {
        return seq_num(seq, m).pow(np) / seq_fact(seq, m);
      });
      BoundedRat norm = certified_sum(terms, tol, [&](long m) {
        return Rat(1) / seq_fact(seq, m);
      });
      BoundedRat lhs = norm.inverse() * s;
      return value_only_report("dobinski-numeric", params, lhs, n,
                               "value report; no target asserted for this sequence");
    }
    case DobinskiVariant::Cigl: {
      if (seq.kind() != PsiKind::QGaussNumeric)
        raise(ErrorKind::InvalidParameter, "variant needs a numeric q sequence");
      Rat q0 = seq.q0();
      if (!(q0 > Rat(0))) raise(ErrorKind::NotConvergent, "needs q > 0 for a positive series");
      if (n > kMaxPartitionN)
        raise(ErrorKind::InvalidParameter, "target enumeration capped at n = 12");
      std::vector<Rat> qpow;
      qpow.reserve(static_cast<size_t>(n));
      Rat p(1);
      for (long j = 0; j < n; ++j) {
        qpow.push_back(p);
        p *= q0;
      }
      BoundedRat s = certified_sum(terms, tol, [&](long m) {
        Rat t = Rat(1) / Rat::factorial(static_cast<unsigned long>(m));
        for (long j = 0; j < n; ++j) t *= Rat(m) + qpow[static_cast<size_t>(j)] - Rat(1);
        return t;
      });
      BoundedRat lhs = exp_rational(Rat(-1), tol / (Rat(100) * (s.val.abs() + Rat(1)))) * s;
      Rat target(0);
      for (int k = 0; k <= static_cast<int>(n); ++k)
        target += statistic_stirling(static_cast<int>(n), k, Statistic::Cigl).eval(q0);
      CheckBuilder b("dobinski-numeric", params);
      b.cell({{"n", n}}, within(lhs, target, tol), approx_str(lhs.val), target.str());
      return b.done();
    }
  }
  raise(ErrorKind::InvalidParameter, "unknown variant");
}

CheckReport psi_poisson_moment_check(const PsiSequence& seq, long n_max, long terms,
                                     const Rat& tol) {
  if (n_max < 0) raise(ErrorKind::IndexOutOfRange, "n_max must be nonnegative");
  require_numeric(seq, terms + 3);
  CheckBuilder b("poisson-moment", seq_n_params(seq, "n_max", n_max) + " terms=" +
                                       std::to_string(terms) + " tol=" + tol.str());
  BoundedRat norm = certified_sum(terms, tol, [&](long m) {
    return Rat(1) / seq_fact(seq, m);
  });
  BoundedRat inv = norm.inverse();
  for (long n = 0; n <= n_max; ++n) {
    BoundedRat s = certified_sum(terms, tol, [&](long m) {
      return psi_falling_power(seq, m, n).rat() / seq_fact(seq, m);
    });
    BoundedRat value = inv * s;
    b.cell({{"n", n}}, within(value, Rat(1), tol), approx_str(value.val), "1");
  }
  return b.done();
}

BoundedRat psi_poisson_pmf(const PsiSequence& seq, const Rat& lambda, long n, long terms) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "n must be nonnegative");
  if (!(lambda > Rat(0))) raise(ErrorKind::InvalidParameter, "lambda must be positive");
  require_numeric(seq, std::max(terms + 3, n + 2));
  BoundedRat norm = tail_sum(terms, [&](long m) {
    return lambda.pow(static_cast<unsigned long>(m)) / seq_fact(seq, m);
  });
  Rat weight = lambda.pow(static_cast<unsigned long>(n)) / seq_fact(seq, n);
  return norm.inverse() * BoundedRat::exact(weight);
}

CheckReport psi_poisson_pmf_check(const PsiSequence& seq, const Rat& lambda, long n_max,
                                  long terms, const Rat& tol) {
  if (n_max < 0) raise(ErrorKind::IndexOutOfRange, "n_max must be nonnegative");
  if (!(lambda > Rat(0))) raise(ErrorKind::InvalidParameter, "lambda must be positive");
  require_numeric(seq, std::max(terms + 3, n_max + 2));
  CheckBuilder b("poisson-pmf", seq_n_params(seq, "n_max", n_max) + " lambda=" + lambda.str() +
                                    " terms=" + std::to_string(terms) + " tol=" + tol.str());

  // The n-th psi-derivative of G(t) = sum_m w_m t^m at t = 0, over n_psi!,
  // must recover w_n exactly; the normalization drops out of both sides.
  int order = static_cast<int>(n_max) + 2;
  Series g(Tag::Rational, order);
  for (int m = 0; m <= order; ++m)
    g.coeff(m) = Scalar(lambda.pow(static_cast<unsigned long>(m)) / seq_fact(seq, m));
  Series d = g;
  for (long n = 0; n <= n_max; ++n) {
    Scalar lhs = d.coeff(0) / seq.factorial(n);
    Scalar rhs = Scalar(lambda.pow(static_cast<unsigned long>(n)) / seq_fact(seq, n));
    b.require({{"n", n}}, lhs == rhs, lhs.str(), rhs.str());
    d = psi_derivative_series(d, seq);
  }

  BoundedRat norm = tail_sum(terms, [&](long m) {
    return lambda.pow(static_cast<unsigned long>(m)) / seq_fact(seq, m);
  });
  Rat partial(0);
  for (long m = 0; m <= terms; ++m)
    partial += lambda.pow(static_cast<unsigned long>(m)) / seq_fact(seq, m);
  BoundedRat mass = norm.inverse() * BoundedRat::exact(partial);
  b.cell({{"mass", terms}}, within(mass, Rat(1), tol), approx_str(mass.val), "1");
  return b.done();
}

}  // namespace umbra
