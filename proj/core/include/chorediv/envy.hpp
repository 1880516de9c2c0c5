#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "chorediv/model.hpp"

namespace chorediv {

enum class EnvyLevel { EF, EF1, EFX };

struct EnvyWitness {
  std::size_t envier = 0;
  std::size_t envied = 0;
  EnvyLevel level = EnvyLevel::EF;

  friend bool operator==(const EnvyWitness&, const EnvyWitness&) = default;
};

// Pairwise predicates under one valuation. Each returns true when the
// corresponding fairness notion is violated for (own -> other).
bool envies(const Valuation& v, const Bundle& own, const Bundle& other);
bool ef1_envies(const Valuation& v, const Bundle& own, const Bundle& other);
bool efx_envies(const Valuation& v, const Bundle& own, const Bundle& other);

bool violates(EnvyLevel level, const Valuation& v, const Bundle& own,
              const Bundle& other);

/// Which valuation every agent judges bundles by: their own, or (for the
/// modified profile of the EF1 transfer loop) that of a single fixed agent.
struct EnvyProfile {
  std::optional<std::size_t> uniformAs;

  static EnvyProfile original() { return {}; }
  static EnvyProfile uniform(std::size_t agent) { return {agent}; }
};

struct EnvyReport {
  bool ef = true;
  bool ef1 = true;
  bool efx = true;
  std::optional<EnvyWitness> efWitness;
  std::optional<EnvyWitness> ef1Witness;
  std::optional<EnvyWitness> efxWitness;
};

/// Evaluates EF / EF1 / EFX over all ordered pairs (envier-major order).
/// Agent indices refer to positions in `agents`; X must match its length.
EnvyReport report(std::span<const Valuation> agents, const Allocation& X,
                  EnvyProfile profile = EnvyProfile::original());
EnvyReport report(const CanonicalInstance& ci, const Allocation& X,
                  EnvyProfile profile = EnvyProfile::original());

/// First violating pair at the given level, or nullopt when X satisfies it.
std::optional<EnvyWitness> find_violation(
    std::span<const Valuation> agents, const Allocation& X, EnvyLevel level,
    EnvyProfile profile = EnvyProfile::original());

bool is_ef(std::span<const Valuation> agents, const Allocation& X);
bool is_ef1(std::span<const Valuation> agents, const Allocation& X);
bool is_efx(std::span<const Valuation> agents, const Allocation& X);

}  // namespace chorediv
