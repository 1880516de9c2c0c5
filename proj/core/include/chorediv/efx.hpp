#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorediv/model.hpp"

namespace chorediv {

// EFX allocation for two chore types.
//
// After normalization at least as many agents weakly prefer type A as
// strictly prefer type B. When either type is scarce (countA <= |N_A| or
// countB <= |N_B|) a direct construction applies. Otherwise an initial partial
// allocation X* hands out every type B chore (and some type A), and the
// remaining type A chores are added one rule at a time while keeping EFX:
//   Rule 1: one A to every N_B agent, if enough remain and the result is EFX;
//   Rule 2: one A to an N_A agent who envies nobody.
// Agent indices are canonical.

enum class XStarTag { SmallCase, Case1, Case2Complete, Case2_1, Case2_2,
                      Case2_3 };

struct XStarCase {
  XStarTag tag = XStarTag::SmallCase;
  std::vector<std::size_t> nAPrime;
  std::vector<std::size_t> nBPrime;
  Count k = 0;
};

std::string to_string(XStarTag tag);

/// Canonicalizes and, if fewer agents weakly prefer A than strictly prefer B,
/// swaps the type labels so that |N_A| >= |N_B|. Requires strictly negative
/// valuations.
CanonicalInstance normalize_for_efx(const Instance& instance);

/// Complete EFX allocation for countA <= |N_A| or countB <= |N_B|.
Allocation allocate_small_case(const CanonicalInstance& ci);

/// Initial partial EFX allocation when countA > |N_A|, countB > |N_B| and
/// |N_A| >= |N_B|. Throws CannotConstruct when the displayed bundles would
/// need a negative type B count (k = 0 in the final subcase).
std::pair<Allocation, XStarCase> compute_initial_xstar(
    const CanonicalInstance& ci);

/// Rule 1: returns X with one more A for every N_B agent when at least
/// |N_B| type A chores remain and that allocation is EFX. Never fires for
/// empty N_B.
std::optional<Allocation> rule1_step(const CanonicalInstance& ci,
                                     const Allocation& X,
                                     Count unallocatedA);

/// Rule 2: one A to an N_A agent who envies nobody (fewest chores first, then
/// lowest index). Throws InvariantError when no such agent exists.
Allocation rule2_step(const CanonicalInstance& ci, const Allocation& X);

struct EfxTrace {
  enum class Path { NoItems, SingleAgent, ZeroValuation, SmallCase, Rules,
                    OracleFallback };
  Path path = Path::NoItems;
  bool swappedTypes = false;
  std::optional<XStarCase> xstar;
  std::size_t rule1Steps = 0;
  std::size_t rule2Steps = 0;
  // Structural properties the correctness argument relies on that did not
  // hold at runtime (the allocation was still verified EFX).
  std::vector<std::string> findings;
  std::string fallbackReason;
};

struct EfxResult {
  Allocation allocation;  // original agent order and type labels
  EfxTrace trace;
};

struct EfxOptions {
  // Largest brute-force search accepted when the construction is refused.
  std::size_t fallbackBudget = 10'000'000;
};

EfxResult solve_efx_traced(const Instance& instance,
                           const EfxOptions& options = {});

Allocation solve_efx(const Instance& instance, const EfxOptions& options = {});

}  // namespace chorediv
