#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chorediv/efficiency.hpp"
#include "chorediv/envy.hpp"
#include "chorediv/model.hpp"
#include "chorediv/oracle.hpp"

namespace chorediv {

/// Fairness and efficiency summary of one allocation. All agent indices are in
/// the caller's (original) order.
struct PropertyReport {
  bool complete = false;
  EnvyReport envy;
  // Present only when every valuation is strictly negative.
  std::optional<bool> fpoStructure;
  std::vector<std::size_t> pivotAgents;  // every valid pivot when structured
  std::optional<ViolatingPair> structureViolation;
  std::optional<FractionalTransfer> improvement;
  // Present only when requested and within the enumeration budget.
  std::optional<bool> poIntegral;
};

struct ReportOptions {
  bool integralPo = false;
  EnumerationBudget budget;
};

/// Throws ValidationError if X does not fit the instance, BudgetExceeded if
/// integralPo is requested beyond the budget.
PropertyReport analyze(const Instance& instance, const Allocation& X,
                       const ReportOptions& options = {});

}  // namespace chorediv
