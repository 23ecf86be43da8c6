#pragma once

#include <vector>

#include "umbra/check_report.hpp"

namespace umbra {

// One executed entry of the acceptance check-set.  Erratum detectors run
// with asserted = false: their reports are emitted but never gate `ok`.
struct SuiteItem {
  bool asserted = true;
  CheckReport report;
};

struct SuiteResult {
  std::vector<SuiteItem> items;  // sorted by (id, params)
  bool ok = true;                // no asserted report has status Fails
};

// Runs every registered check.  `quick` shrinks the sweep ranges while still
// exercising each check id once.  Independent producers may execute
// concurrently; the assembled result is order-deterministic.
SuiteResult run_suite(bool quick);

}  // namespace umbra
