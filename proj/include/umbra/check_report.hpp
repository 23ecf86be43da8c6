#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umbra {

enum class CheckStatus { Holds, Fails, NotApplicable };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

using IndexList = std::vector<std::pair<std::string, long>>;

struct CheckWitness {
  IndexList indices;
  std::string lhs;
  std::string rhs;
};

struct CellVerdict {
  IndexList indices;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

// Outcome of one machine-checked identity. `witness` is present exactly when
// status is Fails (first failing cell) or when the check only reports a value.
struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<CheckWitness> witness;
  std::string params;
  std::vector<CellVerdict> cells;  // per-cell verdicts where informative
  std::string note;
};

class CheckBuilder {
 public:
  CheckBuilder(std::string id, std::string params) {
    r_.id = std::move(id);
    r_.params = std::move(params);
    r_.status = CheckStatus::Holds;
  }

  void cell(IndexList idx, bool holds, std::string lhs, std::string rhs, bool keep_cell = true) {
    if (keep_cell || !holds) r_.cells.push_back({idx, holds, lhs, rhs});
    if (!holds && r_.status == CheckStatus::Holds) {
      r_.status = CheckStatus::Fails;
      r_.witness = CheckWitness{std::move(idx), std::move(lhs), std::move(rhs)};
    }
  }

  void require(IndexList idx, bool holds, std::string lhs, std::string rhs) {
    cell(std::move(idx), holds, std::move(lhs), std::move(rhs), false);
  }

  void note(const std::string& n) { r_.note = n; }

  CheckReport done() { return std::move(r_); }

 private:
  CheckReport r_;
};

inline long witness_index(const CheckReport& r, const std::string& name) {
  if (!r.witness) return -1;
  for (const auto& [k, v] : r.witness->indices)
    if (k == name) return v;
  return -1;
}

}  // namespace umbra
