#include "chorediv/ef1fpo.hpp"

#include <string>
#include <vector>

#include "chorediv/efficiency.hpp"
#include "chorediv/envy.hpp"
#include "chorediv/errors.hpp"

namespace chorediv {

namespace {

void require_split(const CanonicalInstance& ci, std::size_t split) {
  if (split < 1 || split >= ci.size()) {
    throw ContractError("split index " + std::to_string(split) +
                        " outside [1, n)");
  }
}

std::span<const Valuation> agents_of(const CanonicalInstance& ci) {
  return ci.base.agents;
}

}  // namespace

Allocation split_round_robin(const CanonicalInstance& ci, std::size_t split) {
  require_split(ci, split);
  const std::size_t n = ci.size();
  const auto a_shares = round_robin_counts(ci.base.countA, split);
  const auto b_shares = round_robin_counts(ci.base.countB, n - split);
  Allocation X;
  X.bundles.resize(n);
  for (std::size_t i = 0; i < split; ++i) X.bundles[i].alpha = a_shares[i];
  for (std::size_t i = split; i < n; ++i) {
    X.bundles[i].beta = b_shares[i - split];
  }
  return X;
}

SplitDiagnostics split_diagnostics(const CanonicalInstance& ci,
                                   std::size_t split) {
  const Allocation X = split_round_robin(ci, split);
  SplitDiagnostics d;
  d.split = split;
  for (std::size_t j = 0; j < ci.size(); ++j) {
    for (std::size_t k = 0; k < ci.size(); ++k) {
      if (j == k) continue;
      if (!ef1_envies(ci.agent(j), X.bundles[j], X.bundles[k])) continue;
      const bool j_left = j < split;
      const bool k_left = k < split;
      if (j_left == k_left) {
        throw InvariantError("EF1-envy within one side of split-round-robin");
      }
      (j_left ? d.hasAEnvy : d.hasBEnvy) = true;
    }
  }
  return d;
}

std::size_t find_split_agent(const CanonicalInstance& ci) {
  const std::size_t n = ci.size();
  // diag[s] describes split s (1-based); index 0 is unused.
  std::vector<SplitDiagnostics> diag(n);
  for (std::size_t s = 1; s < n; ++s) {
    diag[s] = split_diagnostics(ci, s);
    if (!diag[s].hasAEnvy && !diag[s].hasBEnvy) {
      throw ContractError("split-round-robin(" + std::to_string(s) +
                          ") is already EF1");
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const bool left_ok = i == 1 || diag[i - 1].hasAEnvy;
    const bool right_ok = i == n || diag[i].hasBEnvy;
    if (left_ok && right_ok) return i - 1;
  }
  throw InvariantError("no split agent exists");
}

Ef1FpoResult solve_ef1_fpo_traced(const Instance& instance) {
  validate(instance);
  Ef1FpoResult result;
  const std::size_t n = instance.size();
  if (instance.items() == 0) {
    result.allocation.bundles.assign(n, Bundle{});
    return result;
  }
  if (auto zero = zero_valuation_allocation(instance)) {
    result.allocation = std::move(*zero);
    result.trace.path = Ef1FpoTrace::Path::ZeroValuation;
    return result;
  }
  if (n == 1) {
    result.allocation.bundles = {Bundle{instance.countA, instance.countB}};
    result.trace.path = Ef1FpoTrace::Path::SingleAgent;
    return result;
  }

  const CanonicalInstance ci = canonicalize(instance);
  for (std::size_t s = 1; s < n; ++s) {
    Allocation X = split_round_robin(ci, s);
    if (is_ef1(agents_of(ci), X)) {
      result.allocation = to_original(ci, X);
      result.trace.path = Ef1FpoTrace::Path::SplitRoundRobin;
      result.trace.split = s;
      return result;
    }
  }

  const std::size_t pivot = find_split_agent(ci);
  Allocation X;
  X.bundles.assign(n, Bundle{});
  X.bundles[pivot] = {ci.base.countA, ci.base.countB};
  const Valuation& judge = ci.agent(pivot);
  const auto modified = EnvyProfile::uniform(pivot);

  std::size_t transfers = 0;
  while (find_violation(agents_of(ci), X, EnvyLevel::EF1, modified)) {
    if (transfers++ == static_cast<std::size_t>(ci.base.items())) {
      throw InvariantError("EF1 transfer loop exceeded m iterations");
    }
    std::size_t target = n;
    Value best = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot) continue;
      const Value value = bundle_value(judge, X.bundles[j]);
      if (target == n || value > best) {
        target = j;
        best = value;
      }
    }
    Bundle& source = X.bundles[pivot];
    Bundle& sink = X.bundles[target];
    if (target < pivot) {
      if (source.alpha == 0) {
        throw InvariantError("split agent ran out of type A chores");
      }
      --source.alpha;
      ++sink.alpha;
    } else {
      if (source.beta == 0) {
        throw InvariantError("split agent ran out of type B chores");
      }
      --source.beta;
      ++sink.beta;
    }
    if (!is_ordered_wrt(X, pivot)) {
      throw InvariantError("transfer loop broke the ordered structure");
    }
  }

  if (!is_ef1(agents_of(ci), X)) {
    throw InvariantError("EF1 under the split agent's valuation did not carry "
                         "over to the original valuations");
  }
  if (!check_structure(ci, X).satisfied) {
    throw InvariantError("transfer loop output is not fPO-structured");
  }
  result.allocation = to_original(ci, X);
  result.trace.path = Ef1FpoTrace::Path::TransferLoop;
  result.trace.splitAgent = pivot;
  result.trace.transfers = transfers;
  return result;
}

Allocation solve_ef1_fpo(const Instance& instance) {
  return solve_ef1_fpo_traced(instance).allocation;
}

}  // namespace chorediv
