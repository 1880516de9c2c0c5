#include "chorediv/ef_exist.hpp"

#include <algorithm>

#include "chorediv/envy.hpp"
#include "chorediv/errors.hpp"

namespace chorediv {

EfPreprocessed preprocess_ef(const Instance& instance) {
  validate(instance);
  const auto has_zero = [&](auto field) {
    return std::any_of(instance.agents.begin(), instance.agents.end(),
                       [&](const Valuation& v) { return v.*field == 0; });
  };
  const bool zeroA = has_zero(&Valuation::a);
  const bool zeroB = has_zero(&Valuation::b);
  if (zeroA && zeroB) {
    return TrivialEf{*zero_valuation_allocation(instance)};
  }
  if (zeroB) {
    CanonicalInstance ci = canonicalize(swap_types(instance));
    ci.swappedTypes = true;
    return ReducedEf{std::move(ci)};
  }
  return ReducedEf{canonicalize(instance)};
}

bool local_ef_pair(const CanonicalInstance& ci, std::size_t i,
                   const Bundle& bundle_i, const Bundle& bundle_next) {
  if (i + 1 >= ci.size()) {
    throw ContractError("local_ef_pair: agent has no successor");
  }
  if (bundle_i.alpha < bundle_next.alpha) {
    throw ContractError(
        "local_ef_pair: type A counts must be non-increasing");
  }
  return !envies(ci.agent(i), bundle_i, bundle_next) &&
         !envies(ci.agent(i + 1), bundle_next, bundle_i);
}

std::size_t DPStateHash::operator()(const DPState& s) const {
  std::size_t h = std::hash<Count>{}(s.a);
  const auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(std::hash<Count>{}(s.b));
  mix(s.assigned);
  mix(std::hash<Count>{}(s.last.alpha));
  mix(std::hash<Count>{}(s.last.beta));
  return h;
}

DPTable::DPTable(const CanonicalInstance& ci) : ci_(ci) {}

bool DPTable::solve(const DPState& state) {
  if (state.assigned == ci_.size()) return state.a + state.b == 0;
  if (const auto it = memo_.find(state); it != memo_.end()) {
    return it->second.feasible;
  }
  DPEntry entry;
  const std::size_t current = state.assigned - 1;
  const Count alpha_cap = std::min(state.a, state.last.alpha);
  for (Count alpha = 0; alpha <= alpha_cap && !entry.feasible; ++alpha) {
    for (Count beta = 0; beta <= state.b; ++beta) {
      ++transitions_;
      const Bundle candidate{alpha, beta};
      if (!local_ef_pair(ci_, current, state.last, candidate)) continue;
      if (solve({state.a - alpha, state.b - beta, state.assigned + 1,
                 candidate})) {
        entry.feasible = true;
        entry.next = candidate;
        break;
      }
    }
  }
  memo_.emplace(state, entry);
  return entry.feasible;
}

Allocation DPTable::reconstruct(const Bundle& first) const {
  Allocation X;
  X.bundles.push_back(first);
  DPState state{ci_.base.countA - first.alpha, ci_.base.countB - first.beta, 1,
                first};
  while (state.assigned < ci_.size()) {
    const auto it = memo_.find(state);
    if (it == memo_.end() || !it->second.feasible) {
      throw ContractError("reconstruct: state was not solved as feasible");
    }
    const Bundle next = it->second.next;
    X.bundles.push_back(next);
    state = {state.a - next.alpha, state.b - next.beta, state.assigned + 1,
             next};
  }
  return X;
}

EfSearchResult ef_search(const Instance& instance) {
  EfSearchResult result;
  auto prepared = preprocess_ef(instance);
  if (auto* trivial = std::get_if<TrivialEf>(&prepared)) {
    result.allocation = std::move(trivial->allocation);
    result.trivial = true;
    return result;
  }
  const CanonicalInstance& ci = std::get<ReducedEf>(prepared).ci;
  const Count countA = ci.base.countA;
  const Count countB = ci.base.countB;
  DPTable table(ci);
  for (Count alpha = 0; alpha <= countA && !result.allocation; ++alpha) {
    for (Count beta = 0; beta <= countB; ++beta) {
      const Bundle first{alpha, beta};
      if (table.solve({countA - alpha, countB - beta, 1, first})) {
        result.allocation = to_original(ci, table.reconstruct(first));
        break;
      }
    }
  }
  result.states = table.states();
  result.transitions = table.transitions();
  if (result.allocation &&
      !is_ef(std::span<const Valuation>(instance.agents), *result.allocation)) {
    throw InvariantError("envy-free search returned an allocation with envy");
  }
  return result;
}

std::optional<Allocation> ef_exists(const Instance& instance) {
  return ef_search(instance).allocation;
}

}  // namespace chorediv
