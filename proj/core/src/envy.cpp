#include "chorediv/envy.hpp"

#include <algorithm>

#include "chorediv/errors.hpp"

namespace chorediv {

namespace {

// Two chore types means at most two distinct single-chore removals.
template <typename Pick>
std::optional<Value> removal_value(const Valuation& v, const Bundle& own,
                                   bool negative_only, Pick pick) {
  std::optional<Value> chosen;
  const auto consider = [&](Bundle reduced, Value item) {
    if (negative_only && item >= 0) return;
    const Value value = bundle_value(v, reduced);
    chosen = chosen ? pick(*chosen, value) : value;
  };
  if (own.alpha > 0) consider({own.alpha - 1, own.beta}, v.a);
  if (own.beta > 0) consider({own.alpha, own.beta - 1}, v.b);
  return chosen;
}

const Valuation& judge(std::span<const Valuation> agents, std::size_t i,
                       EnvyProfile profile) {
  return agents[profile.uniformAs.value_or(i)];
}

}  // namespace

bool envies(const Valuation& v, const Bundle& own, const Bundle& other) {
  return bundle_value(v, own) < bundle_value(v, other);
}

bool ef1_envies(const Valuation& v, const Bundle& own, const Bundle& other) {
  if (own.empty()) return false;
  const auto best = removal_value(v, own, false, [](Value x, Value y) {
    return std::max(x, y);
  });
  return *best < bundle_value(v, other);
}

bool efx_envies(const Valuation& v, const Bundle& own, const Bundle& other) {
  const auto worst = removal_value(v, own, true, [](Value x, Value y) {
    return std::min(x, y);
  });
  return worst && *worst < bundle_value(v, other);
}

bool violates(EnvyLevel level, const Valuation& v, const Bundle& own,
              const Bundle& other) {
  switch (level) {
    case EnvyLevel::EF:
      return envies(v, own, other);
    case EnvyLevel::EF1:
      return ef1_envies(v, own, other);
    case EnvyLevel::EFX:
      return efx_envies(v, own, other);
  }
  return false;
}

std::optional<EnvyWitness> find_violation(std::span<const Valuation> agents,
                                          const Allocation& X,
                                          EnvyLevel level,
                                          EnvyProfile profile) {
  if (X.size() != agents.size()) {
    throw ContractError("allocation size does not match agent count");
  }
  if (profile.uniformAs && *profile.uniformAs >= agents.size()) {
    throw ContractError("uniform profile agent out of range");
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const auto& v = judge(agents, i, profile);
    for (std::size_t j = 0; j < agents.size(); ++j) {
      if (i != j && violates(level, v, X.bundles[i], X.bundles[j])) {
        return EnvyWitness{i, j, level};
      }
    }
  }
  return std::nullopt;
}

EnvyReport report(std::span<const Valuation> agents, const Allocation& X,
                  EnvyProfile profile) {
  EnvyReport r;
  r.efWitness = find_violation(agents, X, EnvyLevel::EF, profile);
  r.ef1Witness = find_violation(agents, X, EnvyLevel::EF1, profile);
  r.efxWitness = find_violation(agents, X, EnvyLevel::EFX, profile);
  r.ef = !r.efWitness;
  r.ef1 = !r.ef1Witness;
  r.efx = !r.efxWitness;
  return r;
}

EnvyReport report(const CanonicalInstance& ci, const Allocation& X,
                  EnvyProfile profile) {
  return report(std::span<const Valuation>(ci.base.agents), X, profile);
}

bool is_ef(std::span<const Valuation> agents, const Allocation& X) {
  return !find_violation(agents, X, EnvyLevel::EF);
}

bool is_ef1(std::span<const Valuation> agents, const Allocation& X) {
  return !find_violation(agents, X, EnvyLevel::EF1);
}

bool is_efx(std::span<const Valuation> agents, const Allocation& X) {
  return !find_violation(agents, X, EnvyLevel::EFX);
}

}  // namespace chorediv
