#include "umbra/stirling.hpp"

#include "umbra/divided_diff.hpp"
#include "umbra/series.hpp"

namespace umbra {

namespace {

std::string cell_params(const PsiSequence& seq, long n_max) {
  return "seq=" + seq.spec_string() + " n_max=" + std::to_string(n_max);
}

SPoly e_n_poly(Tag t, long n) {
  return SPoly::monomial(Scalar::from_int(1, t), static_cast<int>(n));
}

}  // namespace

Scalar q_power_scalar(long e) {
  Scalar q = Scalar::q_var();
  if (e >= 0) return q.pow(static_cast<unsigned long>(e));
  return q.inverse().pow(static_cast<unsigned long>(-e));
}

Table nwc_second_table(const PsiSequence& seq, long n_max) {
  if (n_max < 0) raise(ErrorKind::IndexOutOfRange, "table needs n_max >= 0");
  Table t;
  t.family = "nwc2";
  t.seq_spec = seq.spec_string();
  t.n_max = n_max;
  Scalar zero = Scalar::from_int(0, seq.tag());
  t.rows.push_back({Scalar::from_int(1, seq.tag())});
  for (long n = 0; n < n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Scalar> row(static_cast<size_t>(n) + 2, zero);
    for (long k = 0; k <= n + 1; ++k) {
      Scalar v = zero;
      if (k >= 1 && k - 1 <= n) v = v + prev[static_cast<size_t>(k - 1)];
      if (k <= n) v = v + seq.value(k) * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = v;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Scalar nwc_second_via_ogf(const PsiSequence& seq, long n, long k) {
  if (n < 0 || k < 0) raise(ErrorKind::IndexOutOfRange, "ogf route needs n, k >= 0");
  Scalar zero = Scalar::from_int(0, seq.tag());
  if (k > n) return zero;
  if (k == 0) return n == 0 ? Scalar::from_int(1, seq.tag()) : zero;
  // [x^(n-k)] of 1 / prod_{i=1..k} (1 - i_psi x)
  int ord = static_cast<int>(n - k);
  Series den(seq.tag(), ord);
  den.coeff(0) = Scalar::from_int(1, seq.tag());
  SPoly den_poly(Scalar::from_int(1, seq.tag()));
  for (long i = 1; i <= k; ++i)
    den_poly = den_poly * SPoly::from_coeffs({Scalar::from_int(1, seq.tag()), -seq.value(i)});
  return series_inverse(Series::from_poly(den_poly, seq.tag(), ord)).coeff(ord);
}

Scalar nwc_second_monomial_sum(const PsiSequence& seq, long n, long k) {
  if (n < 0 || k < 0) raise(ErrorKind::IndexOutOfRange, "monomial sum needs n, k >= 0");
  Scalar zero = Scalar::from_int(0, seq.tag());
  if (k > n) return zero;
  long len = n - k;
  // weakly increasing words 1 <= i_1 <= ... <= i_len <= k
  Scalar total_words = zero;
  std::vector<long> word(static_cast<size_t>(len));
  auto rec_words = [&](auto&& self, long pos, long lo, Scalar prod) -> void {
    if (pos == len) {
      total_words = total_words + prod;
      return;
    }
    for (long i = lo; i <= k; ++i)
      self(self, pos + 1, i, prod * seq.value(i));
  };
  if (k == 0 && len > 0) {
    // no admissible words
  } else {
    rec_words(rec_words, 0, 1, Scalar::from_int(1, seq.tag()));
  }
  // compositions d_1 + ... + d_k = len, term prod_i (i_psi)^(d_i)
  Scalar total_comp = zero;
  auto rec_comp = [&](auto&& self, long i, long remaining, Scalar prod) -> void {
    if (i == k) {
      if (remaining == 0) total_comp = total_comp + prod;
      return;
    }
    Scalar p = prod;
    for (long d = 0; d <= remaining; ++d) {
      self(self, i + 1, remaining - d, p);
      p = p * seq.value(i + 1);
    }
  };
  if (k == 0) {
    if (len == 0) total_comp = Scalar::from_int(1, seq.tag());
  } else {
    rec_comp(rec_comp, 0, len, Scalar::from_int(1, seq.tag()));
  }
  if (total_words != total_comp)
    raise(ErrorKind::InvalidParameter,
          "monomial-sum forms disagree at n=" + std::to_string(n) + " k=" + std::to_string(k));
  return total_words;
}

Scalar nwc_second_divided_diff(const PsiSequence& seq, long n, long k) {
  if (n < 0 || k < 0) raise(ErrorKind::IndexOutOfRange, "divided-difference route needs n, k >= 0");
  std::vector<Scalar> nodes;
  nodes.reserve(static_cast<size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) nodes.push_back(seq.value(j));
  return divided_difference(nodes, e_n_poly(seq.tag(), n));
}

CheckReport check_route_agreement(const PsiSequence& seq, long n_max) {
  bool with_dd = seq.capabilities(n_max + 1).distinct_nodes;
  CheckBuilder b("route-agreement", cell_params(seq, n_max));
  b.note(with_dd
             ? "routes: recurrence, ogf, monomial-sum, divided-difference"
             : "routes: recurrence, ogf, monomial-sum (nodes not distinct, no divided differences)");
  Table t = nwc_second_table(seq, n_max);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      const Scalar& ref = t.at(n, k);
      Scalar ogf = nwc_second_via_ogf(seq, n, k);
      Scalar mono = nwc_second_monomial_sum(seq, n, k);
      bool ok = ogf == ref && mono == ref;
      std::string other = ogf == ref ? mono.str() : ogf.str();
      if (ok && with_dd) {
        Scalar dd = nwc_second_divided_diff(seq, n, k);
        ok = dd == ref;
        if (!ok) other = dd.str();
      }
      b.require({{"n", n}, {"k", k}}, ok, ref.str(), ok ? ref.str() : other);
    }
  return b.done();
}

CheckReport check_basis_change(const PsiSequence& seq, long n_max) {
  CheckBuilder b("basis-change", cell_params(seq, n_max));
  Table t = nwc_second_table(seq, n_max);
  for (long n = 0; n <= n_max; ++n) {
    SPoly sum;
    for (long k = 0; k <= n; ++k)
      sum = sum + falling_node_poly(seq, k).scaled(t.at(n, k));
    SPoly want = e_n_poly(seq.tag(), n);
    b.require({{"n", n}}, sum == want, sum.str("x"), want.str("x"));
  }
  return b.done();
}

CheckReport check_explicit14(const PsiSequence& seq, long n_max) {
  CheckBuilder b("explicit14", cell_params(seq, n_max));
  CapabilityFlags caps = seq.capabilities(n_max + 1);
  if (!caps.invertible_factorials) {
    CheckReport r = b.done();
    r.status = CheckStatus::NotApplicable;
    r.note = "needs invertible factorials";
    return r;
  }
  b.note("alternating-binomial explicit formula; row n=0 is boundary convention");
  Table t = nwc_second_table(seq, n_max);
  for (long n = 1; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Scalar sum = Scalar::from_int(0, seq.tag());
      for (long r = 1; r <= k; ++r) {
        Scalar term = seq.binomial(k, r) * seq.value(r).pow(static_cast<unsigned long>(n));
        if ((k - r) % 2 == 1) term = -term;
        sum = sum + term;
      }
      Scalar lhs = k == 0 ? sum : sum / seq.factorial(k);
      b.cell({{"n", n}, {"k", k}}, lhs == t.at(n, k), lhs.str(), t.at(n, k).str());
    }
  return b.done();
}

Table carlitz_q_table(long n_max) {
  if (n_max < 0) raise(ErrorKind::IndexOutOfRange, "table needs n_max >= 0");
  PsiSequence q = PsiSequence::q_symbolic();
  Table t;
  t.family = "carlitz2";
  t.seq_spec = "q";
  t.n_max = n_max;
  Scalar zero = Scalar::from_int(0, Tag::Q);
  t.rows.push_back({Scalar::from_int(1, Tag::Q)});
  for (long n = 0; n < n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Scalar> row(static_cast<size_t>(n) + 2, zero);
    for (long k = 0; k <= n + 1; ++k) {
      Scalar v = zero;
      if (k >= 1 && k - 1 <= n) v = v + q_power_scalar(k - 1) * prev[static_cast<size_t>(k - 1)];
      if (k <= n) v = v + q.value(k) * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = v;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table carlitz_q_table_at(const Rat& q0, long n_max) {
  Table sym = carlitz_q_table(n_max);
  Table t;
  t.family = "carlitz2";
  t.seq_spec = "q=" + q0.str();
  t.n_max = n_max;
  for (const auto& row : sym.rows) {
    std::vector<Scalar> r;
    r.reserve(row.size());
    for (const Scalar& v : row) r.push_back(v.subst_q(q0));
    t.rows.push_back(std::move(r));
  }
  return t;
}

CheckReport check_carlitz_defining(long n_max) {
  CheckBuilder b("carlitz-defining", "n_max=" + std::to_string(n_max));
  PsiSequence q = PsiSequence::q_symbolic();
  Table t = carlitz_q_table(n_max);
  for (long n = 0; n <= n_max; ++n)
    for (long N = 0; N <= n_max + 2; ++N) {
      Scalar lhs = q.value(N).pow(static_cast<unsigned long>(n));
      Scalar rhs = Scalar::from_int(0, Tag::Q);
      for (long k = 0; k <= n; ++k) {
        // x_q^(k falling) at x = N: prod_{j=0..k-1} (N-j)_q
        Scalar fall = Scalar::from_int(1, Tag::Q);
        for (long j = 0; j < k; ++j) fall = fall * q.value(N - j >= 0 ? N - j : 0);
        if (k > N) fall = Scalar::from_int(0, Tag::Q);
        rhs = rhs + t.at(n, k) * fall;
      }
      b.require({{"n", n}, {"N", N}}, lhs == rhs, lhs.str(), rhs.str());
    }
  return b.done();
}

CheckReport check_rescal(long n_max) {
  CheckBuilder b("rescal", "n_max=" + std::to_string(n_max));
  Table tilde = nwc_second_table(PsiSequence::q_symbolic(), n_max);
  Table carl = carlitz_q_table(n_max);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Scalar lhs = tilde.at(n, k) * q_power_scalar(k * (k - 1) / 2);
      b.require({{"n", n}, {"k", k}}, lhs == carl.at(n, k), tilde.at(n, k).str(),
                carl.at(n, k).str());
    }
  return b.done();
}

Scalar milne_delta_q(long n, long k) {
  if (n < 0 || k < 0) raise(ErrorKind::IndexOutOfRange, "operator value needs n, k >= 0");
  PsiSequence q = PsiSequence::q_symbolic();
  Scalar sum = Scalar::from_int(0, Tag::Q);
  for (long m = 0; m <= k; ++m) {
    Scalar term = q_power_scalar((k - m) * (k - m - 1) / 2) * q.binomial(k, m) *
                  q.value(m).pow(static_cast<unsigned long>(n));
    if ((k - m) % 2 == 1) term = -term;
    sum = sum + term;
  }
  return sum;
}

CheckReport check_milne(long n_max) {
  CheckBuilder b("milne", "n_max=" + std::to_string(n_max));
  PsiSequence q = PsiSequence::q_symbolic();
  Table carl = carlitz_q_table(n_max);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Scalar lhs = milne_delta_q(n, k);
      Scalar rhs = q.factorial(k) * carl.at(n, k);
      b.require({{"n", n}, {"k", k}}, lhs == rhs, lhs.str(), rhs.str());
    }
  return b.done();
}

PolyWithCheck exp_poly_nwc(const PsiSequence& seq, long n) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "exponential polynomial needs n >= 0");
  Table t = nwc_second_table(seq, n);
  CheckBuilder b("exp-poly-recurrence", "seq=" + seq.spec_string() + " n=" + std::to_string(n));
  SPoly by_rec(Scalar::from_int(1, seq.tag()));
  SPoly x = e_n_poly(seq.tag(), 1);
  for (long j = 0; j <= n; ++j) {
    SPoly by_table;
    for (long k = 0; k <= j; ++k)
      by_table = by_table + SPoly::monomial(t.at(j, k), static_cast<int>(k));
    b.require({{"n", j}}, by_rec == by_table, by_rec.str("y"), by_table.str("y"));
    if (j < n) by_rec = x * (by_rec + psi_derivative(by_rec, seq));
  }
  SPoly result;
  for (long k = 0; k <= n; ++k)
    result = result + SPoly::monomial(t.at(n, k), static_cast<int>(k));
  return {result, b.done()};
}

PolyWithCheck exp_poly_carlitz(long n) {
  if (n < 0) raise(ErrorKind::IndexOutOfRange, "exponential polynomial needs n >= 0");
  PsiSequence q = PsiSequence::q_symbolic();
  Table t = carlitz_q_table(n);
  CheckBuilder b("exp-poly-carlitz-dd", "n=" + std::to_string(n));
  SPoly result;
  for (long k = 0; k <= n; ++k)
    result = result + SPoly::monomial(t.at(n, k), static_cast<int>(k));
  for (long k = 0; k <= n; ++k) {
    Scalar dd = nwc_second_divided_diff(q, n, k);
    Scalar weighted = q_power_scalar(k * (k - 1) / 2) * dd;
    b.require({{"n", n}, {"k", k}}, weighted == t.at(n, k), weighted.str(), t.at(n, k).str());
  }
  return {result, b.done()};
}

namespace {

Table first_kind_table(const PsiSequence& seq, long k_max, bool falling) {
  if (k_max < 0) raise(ErrorKind::IndexOutOfRange, "table needs k_max >= 0");
  Table t;
  t.family = falling ? "nwc1" : "c1";
  t.seq_spec = seq.spec_string();
  t.n_max = k_max;
  for (long k = 0; k <= k_max; ++k) {
    SPoly p = falling ? falling_node_poly(seq, k) : rising_node_poly(seq, k);
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(k) + 1);
    for (long r = 0; r <= k; ++r)
      row.push_back(p.coeff_or(static_cast<int>(r), Scalar::from_int(0, seq.tag())));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Table first_kind_nwc_table(const PsiSequence& seq, long k_max) {
  return first_kind_table(seq, k_max, true);
}

Table first_kind_c_table(const PsiSequence& seq, long k_max) {
  return first_kind_table(seq, k_max, false);
}

CheckReport check_orthogonality(const PsiSequence& seq, long k_max) {
  CheckBuilder b("orthogonality", cell_params(seq, k_max));
  Table first = first_kind_nwc_table(seq, k_max);
  Table second = nwc_second_table(seq, k_max);
  for (long k = 0; k <= k_max; ++k)
    for (long l = 0; l <= k_max; ++l) {
      Scalar sum = Scalar::from_int(0, seq.tag());
      for (long r = 0; r <= k; ++r)
        if (l <= r) sum = sum + first.at(k, r) * second.at(r, l);
      Scalar want = Scalar::from_int(k == l ? 1 : 0, seq.tag());
      b.require({{"k", k}, {"l", l}}, sum == want, sum.str(), want.str());
    }
  return b.done();
}

std::vector<CheckReport> check_convolution_recurrences(long n_max) {
  PsiSequence q = PsiSequence::q_symbolic();
  Table carl = carlitz_q_table(n_max);
  Table tilde = nwc_second_table(q, n_max);
  CheckBuilder bc("conv-recurrence-carlitz", "n_max=" + std::to_string(n_max));
  bc.note("printed form: {n+1,k} = sum_l binom_q(n,l) q^l {l,k-1}; erratum detector");
  CheckBuilder bt("conv-recurrence-nwc", "n_max=" + std::to_string(n_max));
  bt.note("printed form: {n+1,k}~ = sum_l binom_q(n,l) q^(l-k+1) {l,k-1}~; erratum detector");
  for (long n = 0; n + 1 <= n_max; ++n)
    for (long k = 1; k <= n + 1; ++k) {
      Scalar rhs_c = Scalar::from_int(0, Tag::Q);
      Scalar rhs_t = Scalar::from_int(0, Tag::Q);
      for (long l = 0; l <= n; ++l) {
        if (k - 1 > l) continue;  // {l,k-1} vanishes above the diagonal
        Scalar bin = q.binomial(n, l);
        rhs_c = rhs_c + bin * q_power_scalar(l) * carl.at(l, k - 1);
        rhs_t = rhs_t + bin * q_power_scalar(l - k + 1) * tilde.at(l, k - 1);
      }
      bc.cell({{"n", n}, {"k", k}}, carl.at(n + 1, k) == rhs_c, carl.at(n + 1, k).str(),
              rhs_c.str());
      bt.cell({{"n", n}, {"k", k}}, tilde.at(n + 1, k) == rhs_t, tilde.at(n + 1, k).str(),
              rhs_t.str());
    }
  return {bc.done(), bt.done()};
}

}  // namespace umbra
