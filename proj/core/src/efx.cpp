#include "chorediv/efx.hpp"

#include <algorithm>

#include "chorediv/envy.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/oracle.hpp"

namespace chorediv {

namespace {

std::span<const Valuation> agents_of(const CanonicalInstance& ci) {
  return ci.base.agents;
}

void require_strictly_negative(const Instance& instance) {
  if (!all_strictly_negative(instance)) {
    throw ContractError("EFX construction requires strictly negative values");
  }
}

Allocation filled(std::size_t n, Bundle b) {
  Allocation X;
  X.bundles.assign(n, b);
  return X;
}

// Small case with type A scarce: countA <= |N_A|.
Allocation small_case_a_scarce(const CanonicalInstance& ci) {
  const auto groups = agent_groups(ci);
  const auto& nA = groups.preferA;
  const auto& nB = groups.preferB;
  const std::size_t n = ci.size();
  const Count countA = ci.base.countA;
  const Count k = ci.base.countB / static_cast<Count>(n);
  const auto b = static_cast<std::size_t>(ci.base.countB % static_cast<Count>(n));
  if (countA > static_cast<Count>(nA.size())) {
    throw ContractError("small case requires countA <= |N_A|");
  }

  Allocation X = filled(n, {0, k});
  if (b <= nB.size()) {
    for (std::size_t t = 0; t < b; ++t) ++X.bundles[nB[t]].beta;
    for (Count t = 0; t < countA; ++t) ++X.bundles[nA[t]].alpha;
    return X;
  }

  for (std::size_t j : nB) ++X.bundles[j].beta;
  const std::size_t extra = b - nB.size();
  const std::vector<std::size_t> rest(nA.begin(), nA.end() - extra);
  const std::vector<std::size_t> prime(nA.end() - extra, nA.end());
  for (std::size_t i : prime) ++X.bundles[i].beta;

  // Largest l with l * vA >= vB for every agent in rest.
  Count l = kMaxMagnitude;
  for (std::size_t i : rest) {
    const auto& v = ci.agent(i);
    l = std::min(l, v.b / v.a);
  }
  const Wide capacity = Wide{l + 1} * static_cast<Wide>(rest.size());
  const Count given = static_cast<Count>(std::min<Wide>(countA, capacity));
  const auto shares = round_robin_counts(given, rest.size());
  for (std::size_t t = 0; t < rest.size(); ++t) {
    X.bundles[rest[t]].alpha = shares[t];
  }
  const Count left = countA - given;
  if (left > static_cast<Count>(prime.size())) {
    throw InvariantError("small case left more type A than |N_A'|");
  }
  for (Count t = 0; t < left; ++t) ++X.bundles[prime[t]].alpha;
  return X;
}

bool rule1_condition(const CanonicalInstance& ci, const Allocation& X,
                     const std::vector<std::size_t>& nB) {
  Allocation next = X;
  for (std::size_t j : nB) ++next.bundles[j].alpha;
  return is_efx(agents_of(ci), next);
}

}  // namespace

std::string to_string(XStarTag tag) {
  switch (tag) {
    case XStarTag::SmallCase:
      return "small-case";
    case XStarTag::Case1:
      return "case-1";
    case XStarTag::Case2Complete:
      return "case-2-complete";
    case XStarTag::Case2_1:
      return "case-2.1";
    case XStarTag::Case2_2:
      return "case-2.2";
    case XStarTag::Case2_3:
      return "case-2.3";
  }
  return "unknown";
}

CanonicalInstance normalize_for_efx(const Instance& instance) {
  validate(instance);
  require_strictly_negative(instance);
  CanonicalInstance ci = canonicalize(instance);
  const auto groups = agent_groups(ci);
  if (groups.preferA.size() >= groups.preferB.size()) return ci;
  CanonicalInstance swapped = canonicalize(swap_types(instance));
  swapped.swappedTypes = true;
  return swapped;
}

Allocation allocate_small_case(const CanonicalInstance& ci) {
  require_strictly_negative(ci.base);
  const auto groups = agent_groups(ci);
  if (ci.base.countA <= static_cast<Count>(groups.preferA.size())) {
    return small_case_a_scarce(ci);
  }
  if (ci.base.countB > static_cast<Count>(groups.preferB.size())) {
    throw ContractError(
        "small case requires countA <= |N_A| or countB <= |N_B|");
  }
  // Relabel types so that the scarce type is A, solve, then map back.
  const CanonicalInstance relabeled = canonicalize(swap_types(ci.base));
  const Allocation inner = small_case_a_scarce(relabeled);
  Allocation X;
  X.bundles.resize(ci.size());
  for (std::size_t t = 0; t < inner.size(); ++t) {
    const auto& b = inner.bundles[t];
    X.bundles[relabeled.perm[t]] = {b.beta, b.alpha};
  }
  return X;
}

std::pair<Allocation, XStarCase> compute_initial_xstar(
    const CanonicalInstance& ci) {
  require_strictly_negative(ci.base);
  const auto groups = agent_groups(ci);
  const auto& nA = groups.preferA;
  const auto& nB = groups.preferB;
  const auto sizeA = static_cast<Count>(nA.size());
  const auto sizeB = static_cast<Count>(nB.size());
  const Count countA = ci.base.countA;
  const Count countB = ci.base.countB;
  if (countA <= sizeA || countB <= sizeB || sizeA < sizeB) {
    throw ContractError(
        "X* requires countA > |N_A|, countB > |N_B| and |N_A| >= |N_B|");
  }

  const std::size_t n = ci.size();
  XStarCase xcase;
  const Count k = (countB - sizeB) / static_cast<Count>(n);
  xcase.k = k;
  Allocation X = filled(n, {0, k});
  for (std::size_t j : nB) X.bundles[j].beta = k + 1;
  const Count b = countB - k * static_cast<Count>(n) - sizeB;

  if (b >= sizeB) {
    // Case 1: N_A' are the b - |N_B| highest-ratio agents of N_A.
    xcase.tag = XStarTag::Case1;
    const auto extra = static_cast<std::size_t>(b - sizeB);
    xcase.nAPrime.assign(nA.end() - extra, nA.end());
    for (std::size_t j : nB) X.bundles[j] = {0, k + 2};
    for (std::size_t t = 0; t < nA.size(); ++t) {
      X.bundles[nA[t]] = t + extra < nA.size() ? Bundle{1, k} : Bundle{0, k + 1};
    }
    return {X, xcase};
  }

  // Case 2: N_B' are the b agents of N_B with the greatest vB.
  std::vector<std::size_t> byB = nB;
  std::stable_sort(byB.begin(), byB.end(), [&](std::size_t x, std::size_t y) {
    return ci.agent(x).b > ci.agent(y).b;
  });
  xcase.nBPrime.assign(byB.begin(), byB.begin() + b);
  std::sort(xcase.nBPrime.begin(), xcase.nBPrime.end());
  const auto in_prime = [&](std::size_t j) {
    return std::binary_search(xcase.nBPrime.begin(), xcase.nBPrime.end(), j);
  };
  for (std::size_t j : xcase.nBPrime) X.bundles[j].beta = k + 2;

  if (countA <= 2 * sizeA) {
    xcase.tag = XStarTag::Case2Complete;
    const auto shares = round_robin_counts(countA, nA.size());
    for (std::size_t t = 0; t < nA.size(); ++t) {
      X.bundles[nA[t]].alpha = shares[t];
      if (shares[t] == 1) xcase.nAPrime.push_back(nA[t]);
    }
    return {X, xcase};
  }

  const bool case21 = std::all_of(nB.begin(), nB.end(), [&](std::size_t j) {
    return in_prime(j) ||
           strongly_prefers(ci, j) != StrongPreference::StronglyB;
  });
  if (case21) {
    xcase.tag = XStarTag::Case2_1;
    for (std::size_t i : nA) X.bundles[i].alpha = 1;
    for (std::size_t j : nB) {
      if (!in_prime(j)) X.bundles[j].alpha = 1;
    }
    return {X, xcase};
  }

  const auto strongly_a = std::count_if(nA.begin(), nA.end(), [&](std::size_t i) {
    return strongly_prefers(ci, i) == StrongPreference::StronglyA;
  });
  if (strongly_a >= sizeB) {
    xcase.tag = XStarTag::Case2_2;
    for (std::size_t i : nA) X.bundles[i].alpha = 1;
    return {X, xcase};
  }

  // Case 2.3: the |N_B| lowest-ratio agents of N_A give up one B each.
  xcase.tag = XStarTag::Case2_3;
  if (k == 0) {
    throw CannotConstruct(
        "case 2.3 with k = 0 would assign a negative number of type B chores");
  }
  xcase.nAPrime.assign(nA.begin(), nA.begin() + sizeB);
  for (std::size_t t = 0; t < nA.size(); ++t) {
    X.bundles[nA[t]] = t < nB.size() ? Bundle{2, k - 1} : Bundle{1, k};
  }
  for (std::size_t j : nB) X.bundles[j] = {0, in_prime(j) ? k + 3 : k + 2};
  return {X, xcase};
}

std::optional<Allocation> rule1_step(const CanonicalInstance& ci,
                                     const Allocation& X,
                                     Count unallocatedA) {
  const auto nB = agent_groups(ci).preferB;
  if (nB.empty() || unallocatedA < static_cast<Count>(nB.size())) {
    return std::nullopt;
  }
  Allocation next = X;
  for (std::size_t j : nB) ++next.bundles[j].alpha;
  if (!is_efx(agents_of(ci), next)) return std::nullopt;
  return next;
}

Allocation rule2_step(const CanonicalInstance& ci, const Allocation& X) {
  if (X.total().alpha >= ci.base.countA) {
    throw ContractError("rule 2 needs an unallocated type A chore");
  }
  const auto nA = agent_groups(ci).preferA;
  std::optional<std::size_t> chosen;
  for (std::size_t i : nA) {
    bool envy_free = true;
    for (std::size_t j = 0; j < ci.size() && envy_free; ++j) {
      envy_free = j == i || !envies(ci.agent(i), X.bundles[i], X.bundles[j]);
    }
    if (!envy_free) continue;
    if (!chosen || X.bundles[i].size() < X.bundles[*chosen].size()) {
      chosen = i;
    }
  }
  if (!chosen) throw InvariantError("rule 2 found no envy-free N_A agent");
  Allocation next = X;
  ++next.bundles[*chosen].alpha;
  return next;
}

EfxResult solve_efx_traced(const Instance& instance,
                           const EfxOptions& options) {
  validate(instance);
  EfxResult result;
  auto& trace = result.trace;
  const std::size_t n = instance.size();
  if (instance.items() == 0) {
    result.allocation.bundles.assign(n, Bundle{});
    return result;
  }
  if (auto zero = zero_valuation_allocation(instance)) {
    result.allocation = std::move(*zero);
    trace.path = EfxTrace::Path::ZeroValuation;
    return result;
  }
  if (n == 1) {
    result.allocation.bundles = {Bundle{instance.countA, instance.countB}};
    trace.path = EfxTrace::Path::SingleAgent;
    return result;
  }

  const CanonicalInstance ci = normalize_for_efx(instance);
  trace.swappedTypes = ci.swappedTypes;
  const auto groups = agent_groups(ci);
  const auto sizeA = static_cast<Count>(groups.preferA.size());
  const auto sizeB = static_cast<Count>(groups.preferB.size());

  Allocation X;
  if (ci.base.countA <= sizeA || ci.base.countB <= sizeB) {
    trace.path = EfxTrace::Path::SmallCase;
    X = allocate_small_case(ci);
  } else {
    const auto search = [&](std::string reason) {
      trace.path = EfxTrace::Path::OracleFallback;
      trace.fallbackReason = std::move(reason);
      const auto found = exists_with(
          ci, [&](const Allocation& Y) { return is_efx(agents_of(ci), Y); },
          EnumerationBudget{options.fallbackBudget});
      if (!found) throw InvariantError("no EFX allocation found by search");
      return *found;
    };
    std::optional<std::pair<Allocation, XStarCase>> start;
    try {
      start = compute_initial_xstar(ci);
    } catch (const CannotConstruct& refused) {
      X = search(refused.what());
    }
    if (start && start->second.tag == XStarTag::Case2_3) {
      for (std::size_t j : start->second.nBPrime) {
        if (strongly_prefers(ci, j) != StrongPreference::StronglyB) {
          trace.findings.push_back(
              "case-2.3: N_B' agent does not strongly prefer B");
        }
      }
      // Without that preference the case 2.3 start need not be EFX.
      if (!trace.findings.empty() && !is_efx(agents_of(ci), start->first)) {
        trace.xstar = std::move(start->second);
        start.reset();
        X = search("case 2.3 start is not EFX because an N_B' agent does "
                   "not strongly prefer B");
      }
    }
    if (start) {
      trace.path = EfxTrace::Path::Rules;
      X = std::move(start->first);
      trace.xstar = std::move(start->second);
      const auto tag = trace.xstar->tag;
      if (!is_efx(agents_of(ci), X)) {
        throw InvariantError("initial allocation " + to_string(tag) +
                             " is not EFX");
      }
      if (!groups.preferB.empty() && X.total().alpha < ci.base.countA &&
          rule1_condition(ci, X, groups.preferB)) {
        trace.findings.push_back(to_string(tag) +
                                 ": Rule 1 EFX condition holds at X*");
      }
      if (tag == XStarTag::Case1 || tag == XStarTag::Case2_1) {
        for (std::size_t j : groups.preferB) {
          if (X.bundles[j].size() != X.bundles[groups.preferB[0]].size()) {
            trace.findings.push_back(to_string(tag) +
                                     ": N_B bundles differ in size");
          }
          for (std::size_t i : groups.preferA) {
            if (X.bundles[j].beta <= X.bundles[i].beta) {
              trace.findings.push_back(to_string(tag) +
                                       ": N_B agent lacks extra type B");
            }
          }
        }
      }
      Count remaining = ci.base.countA - X.total().alpha;
      while (remaining > 0) {
        if (auto next = rule1_step(ci, X, remaining)) {
          X = std::move(*next);
          remaining -= sizeB;
          ++trace.rule1Steps;
          if (rule1_condition(ci, X, groups.preferB)) {
            trace.findings.push_back(
                "Rule 1 EFX condition still holds right after Rule 1");
          }
        } else {
          X = rule2_step(ci, X);
          --remaining;
          ++trace.rule2Steps;
        }
        if (!is_efx(agents_of(ci), X)) {
          throw InvariantError("update rule broke EFX");
        }
      }
    }
  }

  if (!X.complete_for(ci.base) || !is_efx(agents_of(ci), X)) {
    throw InvariantError("EFX solver produced an incomplete or non-EFX "
                         "allocation");
  }
  result.allocation = to_original(ci, X);
  return result;
}

Allocation solve_efx(const Instance& instance, const EfxOptions& options) {
  return solve_efx_traced(instance, options).allocation;
}

}  // namespace chorediv
