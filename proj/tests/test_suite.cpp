#include <cstdlib>
#include <set>
#include <string>

#include "doctest.h"
#include "umbra/suite.hpp"

using namespace umbra;

namespace {

const std::set<std::string> kExpectedIds = {
    "basis-change", "carlitz-defining", "cigl-product-identity", "cigl-recurrence",
    "conv-recurrence-carlitz", "conv-recurrence-nwc", "dobinski-numeric", "egf18",
    "epsilon-literal-classical", "epsilon-literal-q", "exp-pol-II", "exp-poly-carlitz-dd",
    "exp-poly-recurrence", "explicit14", "family-match", "ghw-exp-poly", "gordian-series",
    "inv-recurrence", "milne", "ns-dob", "observation-21", "observation-22", "orthogonality",
    "partition-q1-specialization", "poisson-moment", "poisson-pmf", "q-bell-recurrence-carlitz",
    "q-bell-recurrence-nwc", "rearrangement", "rescal", "route-agreement", "umbral-vs-nwc"};

}  // namespace

TEST_CASE("quick suite covers every check id, sorted, with a clean gate") {
  SuiteResult res = run_suite(true);
  CHECK(res.ok);

  std::set<std::string> seen;
  for (const SuiteItem& item : res.items) seen.insert(item.report.id);
  CHECK(seen == kExpectedIds);

  for (size_t i = 1; i < res.items.size(); ++i) {
    const CheckReport& a = res.items[i - 1].report;
    const CheckReport& b = res.items[i].report;
    CHECK((a.id < b.id || (a.id == b.id && a.params <= b.params)));
  }

  for (const SuiteItem& item : res.items)
    if (item.asserted) CHECK(item.report.status == CheckStatus::Holds);

  // The erratum detectors really do record counterexamples without
  // poisoning the gate.
  bool informational_failure = false;
  for (const SuiteItem& item : res.items)
    if (!item.asserted && item.report.status == CheckStatus::Fails) {
      informational_failure = true;
      CHECK(item.report.witness.has_value());
    }
  CHECK(informational_failure);
}

TEST_CASE("suite output does not depend on the worker count") {
  SuiteResult wide = run_suite(true);
  setenv("UMBRA_STIRLING_THREADS", "1", 1);
  SuiteResult serial = run_suite(true);
  unsetenv("UMBRA_STIRLING_THREADS");

  REQUIRE(wide.items.size() == serial.items.size());
  CHECK(wide.ok == serial.ok);
  for (size_t i = 0; i < wide.items.size(); ++i) {
    const CheckReport& a = wide.items[i].report;
    const CheckReport& b = serial.items[i].report;
    CHECK(a.id == b.id);
    CHECK(a.params == b.params);
    CHECK(a.status == b.status);
    CHECK(wide.items[i].asserted == serial.items[i].asserted);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) {
      CHECK(a.witness->lhs == b.witness->lhs);
      CHECK(a.witness->rhs == b.witness->rhs);
    }
  }
}
