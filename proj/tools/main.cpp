#include <cctype>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "umbra/bell_dobinski.hpp"
#include "umbra/newton_stirling.hpp"
#include "umbra/normal_order.hpp"
#include "umbra/partition_stats.hpp"
#include "umbra/stirling.hpp"
#include "umbra/suite.hpp"

using njson = nlohmann::ordered_json;
using namespace umbra;

namespace {

// Scalars follow the exact-scalar wire conventions: rationals as "p/q"
// strings, polynomials as coefficient-string arrays (index = power),
// rational functions as {"num": [...], "den": [...]}.
njson poly_json(const Poly<Rat>& p) {
  njson a = njson::array();
  if (p.is_zero()) {
    a.push_back("0");
    return a;
  }
  for (const Rat& c : p.coeffs()) a.push_back(c.str());
  return a;
}

njson qfun_json(const QFun& f) {
  if (f.is_poly()) return poly_json(f.num());
  njson o;
  o["num"] = poly_json(f.num());
  o["den"] = poly_json(f.den());
  return o;
}

njson poly_qfun_json(const Poly<QFun>& p) {
  njson a = njson::array();
  if (p.is_zero()) {
    a.push_back(qfun_json(QFun(0)));
    return a;
  }
  for (const QFun& c : p.coeffs()) a.push_back(qfun_json(c));
  return a;
}

njson pqfun_json(const PQFun& f) {
  if (f.is_poly()) return poly_qfun_json(f.num());
  njson o;
  o["num"] = poly_qfun_json(f.num());
  o["den"] = poly_qfun_json(f.den());
  return o;
}

njson scalar_json(const Scalar& s) {
  switch (s.tag()) {
    case Tag::Rational: return njson(s.rat().str());
    case Tag::Q: return qfun_json(s.qf());
    case Tag::PQ: return pqfun_json(s.pqf());
  }
  return njson();
}

njson indices_into(njson o, const IndexList& idx) {
  for (const auto& [name, v] : idx) o[name] = v;
  return o;
}

njson report_json(const CheckReport& r) {
  njson o;
  o["id"] = r.id;
  o["status"] = check_status_name(r.status);
  o["params"] = r.params;
  if (r.witness) {
    njson w = indices_into(njson::object(), r.witness->indices);
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    o["witness"] = w;
  }
  if (!r.cells.empty()) {
    njson cells = njson::array();
    for (const CellVerdict& c : r.cells) {
      njson cj = indices_into(njson::object(), c.indices);
      cj["holds"] = c.holds;
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
      cells.push_back(cj);
    }
    o["cells"] = cells;
  }
  if (!r.note.empty()) o["note"] = r.note;
  return o;
}

void emit(const njson& j) { std::cout << j.dump(2) << "\n"; }

// Tiny parser for --b polynomials: signed terms of the form "c", "x",
// "c x^e" with rational or decimal coefficients, e.g. "x^3 - 1/2x + 2".
Poly<Rat> parse_x_poly(const std::string& input) {
  std::string s;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) raise(ErrorKind::InvalidParameter, "empty polynomial");

  std::vector<std::pair<Rat, long>> terms;
  size_t i = 0;
  while (i < s.size()) {
    Rat sign(1);
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    size_t j = i;
    while (j < s.size()) {
      bool exp_sign = j > i && (s[j - 1] == 'e' || s[j - 1] == 'E');
      if ((s[j] == '+' || s[j] == '-') && !exp_sign) break;
      ++j;
    }
    std::string term = s.substr(i, j - i);
    if (term.empty()) raise(ErrorKind::InvalidParameter, "dangling sign in '" + input + "'");

    size_t x = term.find('x');
    Rat coeff(1);
    long deg = 0;
    if (x == std::string::npos) {
      coeff = Rat::parse_decimal(term);
    } else {
      std::string head = term.substr(0, x);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coeff = Rat::parse_decimal(head);
      std::string tail = term.substr(x + 1);
      if (tail.empty()) {
        deg = 1;
      } else if (tail[0] == '^') {
        std::string e = tail.substr(1);
        size_t used = 0;
        try {
          deg = std::stol(e, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != e.size() || deg < 0)
          raise(ErrorKind::InvalidParameter, "bad exponent in '" + term + "'");
      } else {
        raise(ErrorKind::InvalidParameter, "unexpected '" + tail + "' after x in '" + term + "'");
      }
    }
    terms.push_back({sign * coeff, deg});
    i = j;
  }

  long max_deg = 0;
  for (const auto& [c, d] : terms) max_deg = std::max(max_deg, d);
  std::vector<Rat> cs(static_cast<size_t>(max_deg) + 1, Rat(0));
  for (const auto& [c, d] : terms) cs[static_cast<size_t>(d)] += c;
  return Poly<Rat>::from_coeffs(std::move(cs));
}

int exit_for(bool asserted, const CheckReport& r) {
  return asserted && r.status == CheckStatus::Fails ? 1 : 0;
}

int cmd_table(const std::string& family, const std::string& seq_spec, long nmax,
              const std::string& format) {
  PsiSequence seq = PsiSequence::parse(seq_spec);
  Table t;
  if (family == "nwc2") {
    t = nwc_second_table(seq, nmax);
  } else if (family == "carlitz2") {
    if (seq.kind() == PsiKind::QGaussSymbolic)
      t = carlitz_q_table(nmax);
    else if (seq.kind() == PsiKind::QGaussNumeric)
      t = carlitz_q_table_at(seq.q0(), nmax);
    else
      raise(ErrorKind::InvalidParameter, "carlitz2 table needs --seq q or --seq q=<value>");
  } else if (family == "nwc1") {
    t = first_kind_nwc_table(seq, nmax);
  } else {
    t = first_kind_c_table(seq, nmax);
  }

  if (format == "csv") {
    for (long n = 0; n <= nmax; ++n) {
      std::string line;
      for (long k = 0; k <= n; ++k) {
        if (k) line += ",";
        line += t.at(n, k).str();
      }
      std::cout << line << "\n";
    }
    return 0;
  }
  njson o;
  o["family"] = family;
  o["seq"] = seq.spec_string();
  o["n_max"] = nmax;
  njson rows = njson::array();
  for (long n = 0; n <= nmax; ++n) {
    njson row = njson::array();
    for (long k = 0; k <= n; ++k) row.push_back(scalar_json(t.at(n, k)));
    rows.push_back(row);
  }
  o["rows"] = rows;
  emit(o);
  return 0;
}

int cmd_bell(const std::string& family, const std::string& seq_spec, long nmax) {
  PsiSequence seq = PsiSequence::parse(seq_spec);
  std::vector<Scalar> values;
  if (family == "nwc") {
    for (long n = 0; n <= nmax; ++n) values.push_back(bell_nwc(seq, n));
  } else if (family == "carlitz") {
    Table t;
    if (seq.kind() == PsiKind::QGaussSymbolic)
      t = carlitz_q_table(nmax);
    else if (seq.kind() == PsiKind::QGaussNumeric)
      t = carlitz_q_table_at(seq.q0(), nmax);
    else
      raise(ErrorKind::InvalidParameter, "carlitz family needs --seq q or --seq q=<value>");
    for (long n = 0; n <= nmax; ++n) {
      Scalar s = t.at(n, 0);
      for (long k = 1; k <= n; ++k) s = s + t.at(n, k);
      values.push_back(s);
    }
  } else if (family == "umbral") {
    values = bell_umbral_binomial(seq, nmax);
  } else {
    values = prefab_bell(seq, nmax);
  }
  njson o;
  o["family"] = family;
  o["seq"] = seq.spec_string();
  o["n_max"] = nmax;
  njson vals = njson::array();
  for (const Scalar& v : values) vals.push_back(scalar_json(v));
  o["values"] = vals;
  emit(o);
  return 0;
}

int cmd_dobinski(const std::string& variant_str, const std::string& seq_spec,
                 const std::string& q_str, long n, long terms, const std::string& tol_str) {
  DobinskiVariant v;
  if (variant_str == "classical")
    v = DobinskiVariant::Classical;
  else if (variant_str == "q")
    v = DobinskiVariant::CarlitzQ;
  else if (variant_str == "milne")
    v = DobinskiVariant::Milne;
  else if (variant_str == "psi")
    v = DobinskiVariant::Psi;
  else
    v = DobinskiVariant::Cigl;

  PsiSequence seq = [&] {
    if (!seq_spec.empty()) return PsiSequence::parse(seq_spec);
    switch (v) {
      case DobinskiVariant::Classical: return PsiSequence::classical();
      case DobinskiVariant::Psi: return PsiSequence::fibonomial();
      default: return PsiSequence::q_numeric(Rat::parse_decimal(q_str));
    }
  }();

  CheckReport rep = dobinski_numeric(v, seq, n, terms, Rat::parse_decimal(tol_str));
  bool asserted = v != DobinskiVariant::Psi;
  njson o = report_json(rep);
  o["asserted"] = asserted;
  emit(o);
  return exit_for(asserted, rep);
}

int cmd_partitions(long n, long k, bool has_k, const std::string& stat_str) {
  Statistic stat = stat_str == "inv" ? Statistic::Inv : Statistic::Cigl;
  njson o;
  o["n"] = n;
  o["stat"] = statistic_name(stat);
  if (has_k) {
    o["k"] = k;
    o["coefficients"] = poly_json(statistic_stirling(static_cast<int>(n), static_cast<int>(k), stat));
  } else {
    njson per_k = njson::array();
    for (long kk = 0; kk <= n; ++kk)
      per_k.push_back(poly_json(statistic_stirling(static_cast<int>(n), static_cast<int>(kk), stat)));
    o["coefficients"] = per_k;
    o["bell"] = poly_json(statistic_bell(static_cast<int>(n), stat));
  }
  emit(o);
  return 0;
}

int cmd_normal_order(const std::string& seq_spec, long n, long probe, bool has_probe) {
  PsiSequence seq = PsiSequence::parse(seq_spec);
  long N_max = has_probe ? probe : default_probe(n);
  NormalOrderOutcome out = normal_order_solve(seq, n, N_max);
  njson o;
  o["seq"] = seq.spec_string();
  o["n"] = n;
  o["checked_range"] = out.checked_range;
  o["status"] = out.status == SolveStatus::UniqueSolution ? "unique-solution" : "inconsistent";
  njson cs = njson::array();
  for (const Scalar& c : out.coeffs) cs.push_back(scalar_json(c));
  o["coefficients"] = cs;
  if (out.status == SolveStatus::Inconsistent) {
    njson w;
    w["N"] = out.witness_N;
    w["lhs"] = out.witness_lhs;
    w["rhs"] = out.witness_rhs;
    o["witness"] = w;
  }
  emit(o);
  return 0;
}

int cmd_newton_stirling(const std::string& b_str, long k, bool has_k) {
  Poly<Rat> b = parse_x_poly(b_str);
  njson o;
  o["b"] = poly_json(b);
  if (has_k) {
    o["k"] = k;
    o["value"] = newton_stirling(b, k).str();
  } else {
    njson vals = njson::array();
    for (long kk = 0; kk <= b.degree(); ++kk) vals.push_back(newton_stirling(b, kk).str());
    o["values"] = vals;
    o["bell"] = ns_bell(b).str();
  }
  emit(o);
  return 0;
}

int cmd_check(const std::string& id, const std::string& seq_spec, long nmax,
              const std::string& b_str, const std::string& x_str, long terms) {
  std::vector<std::pair<bool, CheckReport>> reports;
  if (id == "rescal") {
    reports.emplace_back(true, check_rescal(nmax));
  } else if (id == "explicit14") {
    PsiSequence seq = PsiSequence::parse(seq_spec);
    reports.emplace_back(seq.kind() == PsiKind::Classical, check_explicit14(seq, nmax));
  } else if (id == "orthogonality") {
    reports.emplace_back(true, check_orthogonality(PsiSequence::parse(seq_spec), nmax));
  } else if (id == "conv-recurrences") {
    for (CheckReport& r : check_convolution_recurrences(nmax)) reports.emplace_back(false, std::move(r));
  } else if (id == "milne") {
    reports.emplace_back(true, check_milne(nmax));
  } else {
    reports.emplace_back(true, ns_dobinski_numeric(parse_x_poly(b_str), Rat::parse_decimal(x_str), terms));
  }

  int code = 0;
  njson out = njson::array();
  for (const auto& [asserted, rep] : reports) {
    njson o = report_json(rep);
    o["asserted"] = asserted;
    out.push_back(o);
    code = std::max(code, exit_for(asserted, rep));
  }
  emit(reports.size() == 1 ? out[0] : out);
  return code;
}

int cmd_suite(bool quick) {
  SuiteResult res = run_suite(quick);
  njson o;
  o["quick"] = quick;
  o["ok"] = res.ok;
  njson reports = njson::array();
  for (const SuiteItem& item : res.items) {
    njson r = report_json(item.report);
    r["asserted"] = item.asserted;
    reports.push_back(r);
  }
  o["reports"] = reports;
  emit(o);
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact psi-extended Stirling and Bell number toolkit"};
  app.require_subcommand(1);

  auto* tab = app.add_subcommand("table", "triangular tables of the four number families");
  std::string tab_family = "nwc2", tab_seq = "classical", tab_format = "json";
  long tab_nmax = 8;
  tab->add_option("--family", tab_family, "nwc2|carlitz2|nwc1|c1")
      ->check(CLI::IsMember({"nwc2", "carlitz2", "nwc1", "c1"}));
  tab->add_option("--seq", tab_seq, "admissible sequence spec");
  tab->add_option("--nmax", tab_nmax, "largest row");
  tab->add_option("--format", tab_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* bell = app.add_subcommand("bell", "Bell value sequences");
  std::string bell_family = "nwc", bell_seq = "classical";
  long bell_nmax = 8;
  bell->add_option("--family", bell_family, "nwc|carlitz|umbral|prefab")
      ->check(CLI::IsMember({"nwc", "carlitz", "umbral", "prefab"}));
  bell->add_option("--seq", bell_seq, "admissible sequence spec");
  bell->add_option("--nmax", bell_nmax, "largest index");

  auto* dob = app.add_subcommand("dobinski", "certified infinite-series Bell evaluation");
  std::string dob_variant = "classical", dob_seq, dob_q = "1/2", dob_tol = "1e-9";
  long dob_n = 5, dob_terms = 60;
  dob->add_option("--variant", dob_variant, "classical|q|milne|psi|cigl")
      ->check(CLI::IsMember({"classical", "q", "milne", "psi", "cigl"}));
  dob->add_option("--seq", dob_seq, "override the sequence implied by the variant");
  dob->add_option("--q", dob_q, "q value for the q-weighted variants");
  dob->add_option("--n", dob_n, "Bell index");
  dob->add_option("--terms", dob_terms, "partial-sum length");
  dob->add_option("--tol", dob_tol, "certification tolerance");

  auto* part = app.add_subcommand("partitions", "set-partition statistic distributions");
  std::string part_stat = "inv", part_format = "json";
  long part_n = 6, part_k = 0;
  part->add_option("--n", part_n, "ground-set size");
  auto* part_k_opt = part->add_option("--k", part_k, "block count (omit for all)");
  part->add_option("--stat", part_stat, "inv|cigl")->check(CLI::IsMember({"inv", "cigl"}));
  part->add_option("--format", part_format, "json")->check(CLI::IsMember({"json"}));

  auto* nord = app.add_subcommand("normal-order", "operator-power coefficient systems");
  std::string nord_seq = "q";
  long nord_n = 2, nord_probe = 0;
  nord->add_option("--seq", nord_seq, "admissible sequence spec");
  nord->add_option("--n", nord_n, "operator power");
  auto* nord_probe_opt = nord->add_option("--nmax-probe", nord_probe, "probe range (default 2n+4)");
  std::string nord_format = "json";
  nord->add_option("--format", nord_format, "json")->check(CLI::IsMember({"json"}));

  auto* ns = app.add_subcommand("newton-stirling", "Newton coefficients of a polynomial");
  std::string ns_b = "x^3";
  long ns_k = 0;
  ns->add_option("--b", ns_b, "polynomial in x");
  auto* ns_k_opt = ns->add_option("--k", ns_k, "node count (omit for all up to deg b)");

  auto* chk = app.add_subcommand("check", "run one identity check");
  std::string chk_id, chk_seq = "classical", chk_b = "x^3", chk_x = "1";
  long chk_nmax = 8, chk_terms = 60;
  chk->add_option("--id", chk_id, "rescal|explicit14|orthogonality|conv-recurrences|milne|ns-dob")
      ->required()
      ->check(CLI::IsMember({"rescal", "explicit14", "orthogonality", "conv-recurrences", "milne",
                             "ns-dob"}));
  chk->add_option("--seq", chk_seq, "admissible sequence spec");
  chk->add_option("--nmax", chk_nmax, "sweep bound");
  chk->add_option("--b", chk_b, "polynomial for ns-dob");
  chk->add_option("--x", chk_x, "evaluation point for ns-dob");
  chk->add_option("--terms", chk_terms, "partial-sum length for ns-dob");

  auto* suite = app.add_subcommand("suite", "run the full check-set");
  bool suite_quick = false;
  suite->add_flag("--quick", suite_quick, "shrink sweep ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(tab)) return cmd_table(tab_family, tab_seq, tab_nmax, tab_format);
    if (app.got_subcommand(bell)) return cmd_bell(bell_family, bell_seq, bell_nmax);
    if (app.got_subcommand(dob))
      return cmd_dobinski(dob_variant, dob_seq, dob_q, dob_n, dob_terms, dob_tol);
    if (app.got_subcommand(part))
      return cmd_partitions(part_n, part_k, part_k_opt->count() > 0, part_stat);
    if (app.got_subcommand(nord))
      return cmd_normal_order(nord_seq, nord_n, nord_probe, nord_probe_opt->count() > 0);
    if (app.got_subcommand(ns)) return cmd_newton_stirling(ns_b, ns_k, ns_k_opt->count() > 0);
    if (app.got_subcommand(chk))
      return cmd_check(chk_id, chk_seq, chk_nmax, chk_b, chk_x, chk_terms);
    if (app.got_subcommand(suite)) return cmd_suite(suite_quick);
  } catch (const Error& e) {
    njson err;
    err["error"] = njson{{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    emit(err);
    return 1;
  } catch (const std::exception& e) {
    njson err;
    err["error"] = njson{{"kind", "internal"}, {"message", e.what()}};
    emit(err);
    return 1;
  }
  return 2;
}
