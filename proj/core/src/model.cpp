#include "chorediv/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chorediv/errors.hpp"

namespace chorediv {

Bundle Allocation::total() const {
  Bundle sum;
  for (const auto& b : bundles) sum = sum + b;
  return sum;
}

bool Allocation::complete_for(const Instance& instance) const {
  const Bundle sum = total();
  return sum.alpha == instance.countA && sum.beta == instance.countB;
}

void validate(const Instance& instance) {
  if (instance.agents.empty()) throw ValidationError("instance has no agents");
  if (instance.countA < 0 || instance.countB < 0) {
    throw ValidationError("item counts must be non-negative");
  }
  if (instance.countA > kMaxMagnitude || instance.countB > kMaxMagnitude) {
    throw ArithmeticError("item count exceeds 2^31-1");
  }
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    const auto& v = instance.agents[i];
    const std::string where = "agents[" + std::to_string(i) + "]";
    if (v.a > 0 || v.b > 0) {
      throw ValidationError(where + ": chore valuations must be <= 0");
    }
    if (v.a < -kMaxMagnitude || v.b < -kMaxMagnitude) {
      throw ArithmeticError(where + ": valuation magnitude exceeds 2^31-1");
    }
    if (v.a == 0 && v.b == 0 && instance.items() > 0) {
      throw ValidationError(where + ": agent values both chore types at 0");
    }
  }
}

void validate_allocation(const Instance& instance, const Allocation& X) {
  if (X.size() != instance.size()) {
    throw ValidationError("allocation has " + std::to_string(X.size()) +
                          " bundles for " + std::to_string(instance.size()) +
                          " agents");
  }
  Count alpha = 0;
  Count beta = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto& b = X.bundles[i];
    if (b.alpha < 0 || b.beta < 0) {
      throw ValidationError("bundles[" + std::to_string(i) +
                            "]: counts must be non-negative");
    }
    alpha += b.alpha;
    beta += b.beta;
    if (alpha > instance.countA || beta > instance.countB) {
      throw ValidationError("allocation hands out more chores than exist");
    }
  }
}

bool ratio_less(const Valuation& x, const Valuation& y) {
  if (x.b == 0) return false;
  if (y.b == 0) return true;
  return Wide{x.a} * y.b < Wide{y.a} * x.b;
}

bool ratio_equal(const Valuation& x, const Valuation& y) {
  return !ratio_less(x, y) && !ratio_less(y, x);
}

CanonicalInstance canonicalize(const Instance& instance) {
  validate(instance);
  CanonicalInstance ci;
  ci.perm.resize(instance.size());
  std::iota(ci.perm.begin(), ci.perm.end(), std::size_t{0});
  std::stable_sort(ci.perm.begin(), ci.perm.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return ratio_less(instance.agents[lhs],
                                       instance.agents[rhs]);
                   });
  ci.base.countA = instance.countA;
  ci.base.countB = instance.countB;
  ci.base.agents.reserve(instance.size());
  for (std::size_t original : ci.perm) {
    ci.base.agents.push_back(instance.agents[original]);
  }
  return ci;
}

AgentGroups agent_groups(const CanonicalInstance& ci) {
  AgentGroups groups;
  for (std::size_t i = 0; i < ci.size(); ++i) {
    const auto& v = ci.agent(i);
    (v.a >= v.b ? groups.preferA : groups.preferB).push_back(i);
  }
  return groups;
}

StrongPreference strongly_prefers(const CanonicalInstance& ci, std::size_t i) {
  const auto& v = ci.agent(i);
  if (v.a >= v.b) {
    return 2 * v.a >= v.b ? StrongPreference::StronglyA
                          : StrongPreference::Neither;
  }
  return 2 * v.b >= v.a ? StrongPreference::StronglyB
                        : StrongPreference::Neither;
}

Value bundle_value(const Valuation& v, const Bundle& b) {
  Value lhs = 0;
  Value rhs = 0;
  Value sum = 0;
  if (__builtin_mul_overflow(b.alpha, v.a, &lhs) ||
      __builtin_mul_overflow(b.beta, v.b, &rhs) ||
      __builtin_add_overflow(lhs, rhs, &sum)) {
    throw ArithmeticError("bundle value overflows int64");
  }
  return sum;
}

Value bundle_value(const CanonicalInstance& ci, std::size_t i,
                   const Bundle& b) {
  return bundle_value(ci.agent(i), b);
}

Instance swap_types(const Instance& instance) {
  Instance swapped;
  swapped.countA = instance.countB;
  swapped.countB = instance.countA;
  swapped.agents.reserve(instance.size());
  for (const auto& v : instance.agents) swapped.agents.push_back({v.b, v.a});
  return swapped;
}

Allocation swap_types(const Allocation& X) {
  Allocation swapped;
  swapped.bundles.reserve(X.size());
  for (const auto& b : X.bundles) swapped.bundles.push_back({b.beta, b.alpha});
  return swapped;
}

Allocation to_original(const CanonicalInstance& ci, const Allocation& X) {
  if (X.size() != ci.size()) {
    throw ContractError("to_original: allocation size mismatch");
  }
  Allocation out;
  out.bundles.resize(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto& b = X.bundles[i];
    out.bundles[ci.perm[i]] = ci.swappedTypes ? Bundle{b.beta, b.alpha} : b;
  }
  return out;
}

Allocation to_canonical(const CanonicalInstance& ci, const Allocation& X) {
  if (X.size() != ci.size()) {
    throw ContractError("to_canonical: allocation size mismatch");
  }
  Allocation out;
  out.bundles.resize(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto& b = X.bundles[ci.perm[i]];
    out.bundles[i] = ci.swappedTypes ? Bundle{b.beta, b.alpha} : b;
  }
  return out;
}

bool all_strictly_negative(const Instance& instance) {
  return std::all_of(instance.agents.begin(), instance.agents.end(),
                     [](const Valuation& v) { return v.a < 0 && v.b < 0; });
}

std::vector<Count> round_robin_counts(Count count, std::size_t recipients) {
  std::vector<Count> counts(recipients, 0);
  if (recipients == 0) return counts;
  const auto n = static_cast<Count>(recipients);
  for (std::size_t t = 0; t < recipients; ++t) {
    counts[t] = count / n + (static_cast<Count>(t) < count % n ? 1 : 0);
  }
  return counts;
}

std::optional<Allocation> zero_valuation_allocation(const Instance& instance) {
  validate(instance);
  const auto first_zero = [&](auto field) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      if (instance.agents[i].*field == 0) return i;
    }
    return std::nullopt;
  };
  const auto zeroA = first_zero(&Valuation::a);
  const auto zeroB = first_zero(&Valuation::b);
  if (!zeroA && !zeroB) return std::nullopt;

  Allocation X;
  X.bundles.assign(instance.size(), Bundle{});
  if (zeroA && zeroB) {
    std::size_t j = *zeroB;
    for (std::size_t i = 0; i < instance.size(); ++i) {
      if (instance.agents[i].b == 0 && i != *zeroA) {
        j = i;
        break;
      }
    }
    X.bundles[*zeroA].alpha = instance.countA;
    X.bundles[j].beta += instance.countB;
    return X;
  }
  const auto shares =
      round_robin_counts(zeroA ? instance.countB : instance.countA,
                         instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (zeroA) {
      X.bundles[i].beta = shares[i];
    } else {
      X.bundles[i].alpha = shares[i];
    }
  }
  if (zeroA) {
    X.bundles[*zeroA].alpha = instance.countA;
  } else {
    X.bundles[*zeroB].beta = instance.countB;
  }
  return X;
}

}  // namespace chorediv
