#include "umbra/suite.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "umbra/bell_dobinski.hpp"
#include "umbra/newton_stirling.hpp"
#include "umbra/normal_order.hpp"
#include "umbra/partition_stats.hpp"
#include "umbra/stirling.hpp"
#include "umbra/threads.hpp"

namespace umbra {

namespace {

using Producer = std::function<std::vector<SuiteItem>(void)>;

SuiteItem assert_one(CheckReport r) { return {true, std::move(r)}; }
SuiteItem inform_one(CheckReport r) { return {false, std::move(r)}; }

CheckReport family_match_as_report(Statistic s, long n_max) {
  FamilyMatchReport fm = family_match_report(s, n_max);
  CheckReport rep;
  rep.id = "family-match";
  rep.params = std::string("stat=") + statistic_name(s) + " n_max=" + std::to_string(n_max);
  rep.status = CheckStatus::NotApplicable;
  rep.note = "records which named q-family the statistic distribution matches cell by cell";
  const char* names[3] = {"tilde", "carlitz", "carlitz-rescaled"};
  bool alls[3] = {fm.all_tilde, fm.all_carlitz, fm.all_carlitz_rescaled};
  for (long f = 0; f < 3; ++f) {
    long matched = 0;
    for (const FamilyMatchCell& c : fm.cells) {
      bool hit = f == 0 ? c.tilde : (f == 1 ? c.carlitz : c.carlitz_rescaled);
      if (hit) ++matched;
    }
    rep.cells.push_back({{{"family", f}},
                         alls[f],
                         std::string(names[f]) + " matches " + std::to_string(matched) + "/" +
                             std::to_string(fm.cells.size()) + " cells",
                         "all cells"});
  }
  return rep;
}

std::vector<Producer> registry(bool quick) {
  const long sweep = quick ? 6 : 10;    // table sweeps
  const long deep = quick ? 8 : 12;     // rescaling bridge
  const long mid = quick ? 5 : 8;       // operator and series sweeps
  const Rat tol(1, 1000000000);

  std::vector<PsiSequence> four = {PsiSequence::classical(), PsiSequence::q_symbolic(),
                                   PsiSequence::fibonomial(), PsiSequence::hyper_l(2)};

  std::vector<Producer> reg;

  reg.push_back([four, sweep] {
    std::vector<SuiteItem> out;
    for (const PsiSequence& s : four) out.push_back(assert_one(check_route_agreement(s, sweep)));
    return out;
  });
  reg.push_back([four, sweep] {
    std::vector<SuiteItem> out;
    for (const PsiSequence& s : four) out.push_back(assert_one(check_basis_change(s, sweep)));
    return out;
  });
  reg.push_back([sweep, quick] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(check_explicit14(PsiSequence::classical(), sweep)));
    out.push_back(inform_one(check_explicit14(PsiSequence::q_symbolic(), quick ? 4 : 6)));
    out.push_back(inform_one(check_explicit14(PsiSequence::fibonomial(), quick ? 4 : 6)));
    return out;
  });
  reg.push_back([sweep] { return std::vector<SuiteItem>{assert_one(check_carlitz_defining(sweep))}; });
  reg.push_back([deep] { return std::vector<SuiteItem>{assert_one(check_rescal(deep))}; });
  reg.push_back([mid] { return std::vector<SuiteItem>{assert_one(check_milne(mid))}; });
  reg.push_back([mid] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(exp_poly_nwc(PsiSequence::classical(), mid).report));
    out.push_back(assert_one(exp_poly_nwc(PsiSequence::q_symbolic(), mid).report));
    out.push_back(assert_one(exp_poly_carlitz(mid).report));
    return out;
  });
  reg.push_back([four, sweep] {
    std::vector<SuiteItem> out;
    for (const PsiSequence& s : four) out.push_back(assert_one(check_orthogonality(s, sweep)));
    return out;
  });
  reg.push_back([mid] {
    std::vector<SuiteItem> out;
    for (CheckReport& r : check_convolution_recurrences(mid)) out.push_back(inform_one(std::move(r)));
    return out;
  });
  reg.push_back([quick] {
    return std::vector<SuiteItem>{assert_one(check_inv_recurrence(quick ? 6 : 8))};
  });
  reg.push_back([quick] {
    std::vector<CheckReport> rs = check_cigl(quick ? 6 : 8);
    std::vector<SuiteItem> out;
    out.push_back(assert_one(std::move(rs[0])));
    out.push_back(inform_one(std::move(rs[1])));
    return out;
  });
  reg.push_back([quick] {
    return std::vector<SuiteItem>{assert_one(check_partition_specialization(quick ? 8 : 10))};
  });
  reg.push_back([quick] {
    std::vector<SuiteItem> out;
    out.push_back(inform_one(family_match_as_report(Statistic::Inv, quick ? 6 : 8)));
    out.push_back(inform_one(family_match_as_report(Statistic::Cigl, quick ? 4 : 6)));
    return out;
  });
  reg.push_back([] {
    Poly<Rat> cube = Poly<Rat>::monomial(Rat(1), 3);
    std::vector<SuiteItem> out;
    for (const Rat& x : {Rat(1, 2), Rat(1), Rat(2)})
      out.push_back(assert_one(ns_dobinski_numeric(cube, x, 60)));
    return out;
  });
  reg.push_back([quick] {
    std::vector<SuiteItem> out;
    long n = quick ? 6 : 8;
    out.push_back(assert_one(check_dobinski_rearrangement(PsiSequence::classical(), n, n)));
    long nq = quick ? 5 : 8;
    out.push_back(assert_one(check_dobinski_rearrangement(PsiSequence::q_symbolic(), nq, nq)));
    out.push_back(assert_one(check_dobinski_rearrangement(PsiSequence::hyper_l(2), nq, nq)));
    return out;
  });
  reg.push_back([quick] {
    std::vector<SuiteItem> out;
    long n = quick ? 5 : 8;
    out.push_back(assert_one(check_egf18(PsiSequence::classical(), n, n)));
    long nq = quick ? 4 : 6;
    out.push_back(assert_one(check_egf18(PsiSequence::q_symbolic(), nq, nq)));
    out.push_back(assert_one(check_egf18(PsiSequence::hyper_l(2), nq, nq)));
    return out;
  });
  reg.push_back([quick] {
    std::vector<CheckReport> rs = check_epsilon_literal(quick ? 4 : 6);
    std::vector<SuiteItem> out;
    out.push_back(assert_one(std::move(rs[0])));
    out.push_back(inform_one(std::move(rs[1])));
    return out;
  });
  reg.push_back([quick] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(check_exp_pol_II(PsiSequence::classical(), 4, Rat(1), quick ? 6 : 8)));
    out.push_back(assert_one(check_exp_pol_II(PsiSequence::q_symbolic(), 3, Rat(1), 6)));
    out.push_back(inform_one(check_exp_pol_II(PsiSequence::classical(), 3, Rat(2), quick ? 8 : 10)));
    return out;
  });
  reg.push_back([quick] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(compare_umbral_vs_nwc(PsiSequence::classical(), quick ? 6 : 8)));
    out.push_back(inform_one(compare_umbral_vs_nwc(PsiSequence::q_symbolic(), quick ? 4 : 6)));
    return out;
  });
  reg.push_back([quick] {
    std::vector<SuiteItem> out;
    for (CheckReport& r : check_q_bell_recurrences(quick ? 4 : 6))
      out.push_back(inform_one(std::move(r)));
    return out;
  });
  reg.push_back([] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(gordian_S_psi(PsiSequence::classical(), 3, 14).report));
    out.push_back(assert_one(gordian_S_psi(PsiSequence::q_symbolic(), 3, 14).report));
    out.push_back(inform_one(gordian_S_psi(PsiSequence::fibonomial(), 2, 12).report));
    return out;
  });
  reg.push_back([] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(ghw_exp_poly_series(PsiSequence::classical(), 3, 12)));
    out.push_back(assert_one(ghw_exp_poly_series(PsiSequence::q_symbolic(), 2, 10)));
    out.push_back(assert_one(ghw_exp_poly_series(PsiSequence::fibonomial(), 2, 10)));
    return out;
  });
  reg.push_back([quick, tol] {
    std::vector<SuiteItem> out;
    out.push_back(assert_one(dobinski_numeric(DobinskiVariant::Classical, PsiSequence::classical(),
                                              quick ? 6 : 8, 60, tol)));
    PsiSequence half = PsiSequence::q_numeric(Rat(1, 2));
    out.push_back(assert_one(dobinski_numeric(DobinskiVariant::CarlitzQ, half, quick ? 6 : 8, 80, tol)));
    out.push_back(assert_one(dobinski_numeric(DobinskiVariant::Milne, half, quick ? 4 : 6, 80, tol)));
    out.push_back(assert_one(dobinski_numeric(DobinskiVariant::Cigl, half, 2, 60, tol)));
    out.push_back(inform_one(dobinski_numeric(DobinskiVariant::Psi, PsiSequence::fibonomial(), 3, 40, tol)));
    return out;
  });
  reg.push_back([quick, tol] {
    std::vector<SuiteItem> out;
    long n = quick ? 4 : 6;
    out.push_back(assert_one(psi_poisson_moment_check(PsiSequence::classical(), n, 60, tol)));
    out.push_back(assert_one(psi_poisson_moment_check(PsiSequence::q_numeric(Rat(1, 2)), n, 60, tol)));
    out.push_back(assert_one(psi_poisson_moment_check(PsiSequence::fibonomial(), n, 40, tol)));
    return out;
  });
  reg.push_back([quick, tol] {
    return std::vector<SuiteItem>{assert_one(
        psi_poisson_pmf_check(PsiSequence::classical(), Rat(2), quick ? 4 : 5, 60, tol))};
  });
  reg.push_back([quick] {
    return std::vector<SuiteItem>{assert_one(check_observation_21(quick ? 4 : 6, quick ? 6 : 8))};
  });
  reg.push_back([quick] {
    return std::vector<SuiteItem>{assert_one(check_observation_22(
        {PsiSequence::fibonomial(), PsiSequence::hyper_l(2)}, quick ? 4 : 6, quick ? 6 : 8))};
  });

  return reg;
}

}  // namespace

SuiteResult run_suite(bool quick) {
  std::vector<Producer> reg = registry(quick);
  std::vector<std::vector<SuiteItem>> chunks(reg.size());
  std::vector<std::exception_ptr> errs(reg.size());

  int nt = effective_threads();
  long total = static_cast<long>(reg.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
  for (long i = 0; i < total; ++i) {
    try {
      chunks[static_cast<size_t>(i)] = reg[static_cast<size_t>(i)]();
    } catch (...) {
      errs[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  (void)nt;
  for (const std::exception_ptr& e : errs)
    if (e) std::rethrow_exception(e);

  SuiteResult res;
  for (std::vector<SuiteItem>& c : chunks)
    for (SuiteItem& item : c) res.items.push_back(std::move(item));
  std::stable_sort(res.items.begin(), res.items.end(), [](const SuiteItem& a, const SuiteItem& b) {
    if (a.report.id != b.report.id) return a.report.id < b.report.id;
    return a.report.params < b.report.params;
  });
  for (const SuiteItem& item : res.items)
    if (item.asserted && item.report.status == CheckStatus::Fails) res.ok = false;
  return res;
}

}  // namespace umbra
