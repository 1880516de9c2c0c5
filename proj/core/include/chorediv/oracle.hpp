#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chorediv/envy.hpp"
#include "chorediv/model.hpp"

namespace chorediv {

// Brute-force ground truth over every complete integral allocation.

struct EnumerationBudget {
  std::size_t maxStates = 10'000'000;
};

/// C(countA + n - 1, n - 1) * C(countB + n - 1, n - 1), saturating at
/// SIZE_MAX.
std::size_t allocation_count(std::size_t agents, Count countA, Count countB);

/// Calls `visit` on every complete allocation exactly once: type A
/// compositions outer, type B inner, each with earlier agents taking the most
/// first. Stops early when `visit` returns false. Throws BudgetExceeded before
/// visiting anything if the count exceeds the budget.
void for_each_allocation(std::size_t agents, Count countA, Count countB,
                         EnumerationBudget budget,
                         const std::function<bool(const Allocation&)>& visit);
void for_each_allocation(const CanonicalInstance& ci, EnumerationBudget budget,
                         const std::function<bool(const Allocation&)>& visit);

std::vector<Allocation> enumerate_allocations(const CanonicalInstance& ci,
                                              EnumerationBudget budget = {});

/// First allocation in enumeration order satisfying `predicate`.
std::optional<Allocation> exists_with(
    const CanonicalInstance& ci,
    const std::function<bool(const Allocation&)>& predicate,
    EnumerationBudget budget = {});

/// True iff no complete integral allocation Pareto-dominates X.
bool is_po_integral(const CanonicalInstance& ci, const Allocation& X,
                    EnumerationBudget budget = {});

/// Named existence queries used by the CLI: "ef", "ef1", "efx",
/// "efx-and-fpo".
std::optional<Allocation> exists_named(const CanonicalInstance& ci,
                                       const std::string& property,
                                       EnumerationBudget budget = {});

// Known-hard instances with fixed, previously published outcomes.

struct FixtureCheck {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::string name;
  Instance instance;
  std::vector<FixtureCheck> checks;

  bool passed() const;
};

std::vector<std::string> fixture_names();

/// Throws ValidationError for an unknown name.
Instance fixture_instance(const std::string& name);

/// Throws ValidationError for an unknown name.
FixtureReport run_fixture(const std::string& name,
                          EnumerationBudget budget = {});

}  // namespace chorediv
