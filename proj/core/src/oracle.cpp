#include "chorediv/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "chorediv/efficiency.hpp"
#include "chorediv/errors.hpp"

namespace chorediv {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t x, std::size_t y) {
  std::size_t out = 0;
  return __builtin_mul_overflow(x, y, &out) ? kSaturated : out;
}

// C(count + parts - 1, parts - 1), saturating.
std::size_t compositions(std::size_t parts, Count count) {
  if (parts == 0) return count == 0 ? 1 : 0;
  const auto total = static_cast<std::size_t>(count) + parts - 1;
  const std::size_t choose = std::min(parts - 1, static_cast<std::size_t>(count));
  Wide result = 1;
  for (std::size_t i = 1; i <= choose; ++i) {
    result = result * static_cast<Wide>(total - choose + i) / static_cast<Wide>(i);
    if (result > static_cast<Wide>(kSaturated)) return kSaturated;
  }
  return static_cast<std::size_t>(result);
}

// Advances to the next composition in reverse-lexicographic order.
bool next_composition(std::vector<Count>& parts) {
  if (parts.size() < 2) return false;
  Count tail = parts.back();
  for (std::size_t p = parts.size() - 1; p-- > 0;) {
    if (parts[p] > 0) {
      --parts[p];
      parts[p + 1] = tail + 1;
      for (std::size_t q = p + 2; q < parts.size(); ++q) parts[q] = 0;
      return true;
    }
    tail += parts[p];
  }
  return false;
}

std::string bundles_str(const Allocation& X) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (i > 0) out << ',';
    out << '(' << X.bundles[i].alpha << ',' << X.bundles[i].beta << ')';
  }
  out << ']';
  return out.str();
}

Allocation make(std::initializer_list<Bundle> bundles) {
  return Allocation{std::vector<Bundle>(bundles)};
}

FixtureCheck check(std::string claim, bool passed, std::string detail = {}) {
  return {std::move(claim), passed, std::move(detail)};
}

FixtureCheck check_groups(const Instance& instance,
                          std::vector<std::size_t> expectA,
                          std::vector<std::size_t> expectB) {
  std::vector<std::size_t> gotA;
  std::vector<std::size_t> gotB;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& v = instance.agents[i];
    (v.a >= v.b ? gotA : gotB).push_back(i);
  }
  return check("agent groups N_A / N_B as published",
               gotA == expectA && gotB == expectB);
}

FixtureCheck check_efx_witness(const Instance& instance, const Allocation& X,
                               std::size_t envier, std::size_t envied) {
  std::span<const Valuation> agents(instance.agents);
  const bool named = efx_envies(agents[envier], X.bundles[envier],
                                X.bundles[envied]);
  const auto first = find_violation(agents, X, EnvyLevel::EFX);
  std::ostringstream detail;
  if (first) {
    detail << "first EFX violation: agent " << first->envier << " -> agent "
           << first->envied;
  } else {
    detail << "allocation is EFX";
  }
  return check("allocation " + bundles_str(X) + " is not EFX: agent " +
                   std::to_string(envier) + " EFX-envies agent " +
                   std::to_string(envied),
               named && first.has_value(), detail.str());
}

const std::map<std::string, Instance>& fixtures() {
  // Published epsilon-style values scaled by 300 with epsilon = 1/100.
  static const std::map<std::string, Instance> table = {
      {"goods-adaptation",
       {{{-47, -53}, {-53, -47}, {-53, -47}, {-53, -47}}, 3, 3}},
      {"propx-top-trading", {{{-9, -91}, {-94, -6}, {-97, -3}}, 3, 3}},
      {"propx-bid-and-take", {{{-9, -91}, {-94, -6}, {-97, -3}}, 3, 3}},
      {"efx-fpo-impossible", {{{-10, -1}, {-11, -1}, {-12, -1}}, 3, 2}},
  };
  return table;
}

}  // namespace

std::size_t allocation_count(std::size_t agents, Count countA, Count countB) {
  return saturating_mul(compositions(agents, countA),
                        compositions(agents, countB));
}

void for_each_allocation(std::size_t agents, Count countA, Count countB,
                         EnumerationBudget budget,
                         const std::function<bool(const Allocation&)>& visit) {
  if (agents == 0) throw ContractError("enumeration needs at least one agent");
  const std::size_t total = allocation_count(agents, countA, countB);
  if (total > budget.maxStates) {
    throw BudgetExceeded("enumeration needs " +
                         (total == kSaturated ? std::string("more than 2^64")
                                              : std::to_string(total)) +
                         " allocations, budget is " +
                         std::to_string(budget.maxStates));
  }
  std::vector<Count> partsA(agents, 0);
  partsA[0] = countA;
  Allocation X;
  X.bundles.resize(agents);
  do {
    std::vector<Count> partsB(agents, 0);
    partsB[0] = countB;
    do {
      for (std::size_t i = 0; i < agents; ++i) {
        X.bundles[i] = {partsA[i], partsB[i]};
      }
      if (!visit(X)) return;
    } while (next_composition(partsB));
  } while (next_composition(partsA));
}

void for_each_allocation(const CanonicalInstance& ci, EnumerationBudget budget,
                         const std::function<bool(const Allocation&)>& visit) {
  for_each_allocation(ci.size(), ci.base.countA, ci.base.countB, budget,
                      visit);
}

std::vector<Allocation> enumerate_allocations(const CanonicalInstance& ci,
                                              EnumerationBudget budget) {
  std::vector<Allocation> out;
  for_each_allocation(ci, budget, [&](const Allocation& X) {
    out.push_back(X);
    return true;
  });
  return out;
}

std::optional<Allocation> exists_with(
    const CanonicalInstance& ci,
    const std::function<bool(const Allocation&)>& predicate,
    EnumerationBudget budget) {
  std::optional<Allocation> found;
  for_each_allocation(ci, budget, [&](const Allocation& X) {
    if (predicate(X)) found = X;
    return !found;
  });
  return found;
}

bool is_po_integral(const CanonicalInstance& ci, const Allocation& X,
                    EnumerationBudget budget) {
  validate_allocation(ci.base, X);
  if (!X.complete_for(ci.base)) {
    throw ContractError("is_po_integral needs a complete allocation");
  }
  const std::size_t n = ci.size();
  std::vector<Value> current(n);
  for (std::size_t i = 0; i < n; ++i) {
    current[i] = bundle_value(ci.agent(i), X.bundles[i]);
  }
  bool dominated = false;
  for_each_allocation(ci, budget, [&](const Allocation& Y) {
    bool strict = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Value value = bundle_value(ci.agent(i), Y.bundles[i]);
      if (value < current[i]) return true;
      strict = strict || value > current[i];
    }
    dominated = strict;
    return !dominated;
  });
  return !dominated;
}

std::optional<Allocation> exists_named(const CanonicalInstance& ci,
                                       const std::string& property,
                                       EnumerationBudget budget) {
  std::span<const Valuation> agents(ci.base.agents);
  if (property == "ef") {
    return exists_with(
        ci, [&](const Allocation& X) { return is_ef(agents, X); }, budget);
  }
  if (property == "ef1") {
    return exists_with(
        ci, [&](const Allocation& X) { return is_ef1(agents, X); }, budget);
  }
  if (property == "efx") {
    return exists_with(
        ci, [&](const Allocation& X) { return is_efx(agents, X); }, budget);
  }
  if (property == "efx-and-fpo") {
    if (!all_strictly_negative(ci.base)) {
      throw ValidationError(
          "efx-and-fpo needs strictly negative valuations");
    }
    return exists_with(
        ci,
        [&](const Allocation& X) {
          return is_efx(agents, X) && check_structure(ci, X).satisfied;
        },
        budget);
  }
  throw ValidationError("unknown property '" + property +
                        "' (expected ef, ef1, efx or efx-and-fpo)");
}

bool FixtureReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const FixtureCheck& c) { return c.passed; });
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, instance] : fixtures()) names.push_back(name);
  return names;
}

Instance fixture_instance(const std::string& name) {
  const auto it = fixtures().find(name);
  if (it == fixtures().end()) {
    throw ValidationError("unknown fixture '" + name + "'");
  }
  return it->second;
}

FixtureReport run_fixture(const std::string& name, EnumerationBudget budget) {
  FixtureReport report;
  report.name = name;
  report.instance = fixture_instance(name);
  const Instance& instance = report.instance;
  std::span<const Valuation> agents(instance.agents);

  if (name == "goods-adaptation") {
    report.checks.push_back(check_groups(instance, {0}, {1, 2, 3}));
    // Most-preferred round-robin leaves two type A chores over.
    const Allocation partial = make({{1, 0}, {0, 1}, {0, 1}, {0, 1}});
    std::size_t completions = 0;
    std::optional<Allocation> efx_completion;
    for_each_allocation(instance.size(), 2, 0, budget,
                        [&](const Allocation& extra) {
                          Allocation X = partial;
                          for (std::size_t i = 0; i < X.size(); ++i) {
                            X.bundles[i] = X.bundles[i] + extra.bundles[i];
                          }
                          ++completions;
                          if (is_efx(agents, X)) efx_completion = X;
                          return !efx_completion;
                        });
    report.checks.push_back(check(
        "partial " + bundles_str(partial) +
            " has no EFX completion of the 2 remaining type A chores",
        !efx_completion,
        efx_completion ? "EFX completion " + bundles_str(*efx_completion)
                       : std::to_string(completions) +
                             " completions checked, none EFX"));
    const auto any_efx = exists_named(canonicalize(instance), "efx", budget);
    report.checks.push_back(check("the instance itself admits an EFX allocation",
                                  any_efx.has_value()));
  } else if (name == "propx-top-trading") {
    report.checks.push_back(check_groups(instance, {0}, {1, 2}));
    report.checks.push_back(
        check_efx_witness(instance, make({{2, 0}, {1, 1}, {0, 2}}), 1, 2));
    report.checks.push_back(
        check_efx_witness(instance, make({{2, 0}, {0, 2}, {1, 1}}), 2, 1));
  } else if (name == "propx-bid-and-take") {
    report.checks.push_back(check_groups(instance, {0}, {1, 2}));
    report.checks.push_back(
        check_efx_witness(instance, make({{2, 0}, {1, 1}, {0, 2}}), 1, 2));
  } else if (name == "efx-fpo-impossible") {
    const CanonicalInstance ci = canonicalize(instance);
    const auto both = exists_named(ci, "efx-and-fpo", budget);
    const auto efx = exists_named(ci, "efx", budget);
    const auto structured = exists_with(
        ci, [&](const Allocation& X) { return check_structure(ci, X).satisfied; },
        budget);
    report.checks.push_back(
        check("no allocation is both EFX and fPO", !both,
              both ? "found " + bundles_str(to_original(ci, *both)) : ""));
    report.checks.push_back(
        check("an EFX allocation exists", efx.has_value(),
              efx ? bundles_str(to_original(ci, *efx)) : ""));
    report.checks.push_back(
        check("an fPO-structured allocation exists", structured.has_value(),
              structured ? bundles_str(to_original(ci, *structured)) : ""));
  }
  return report;
}

}  // namespace chorediv
