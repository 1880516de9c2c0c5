#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chorediv {

using Count = std::int64_t;
using Value = std::int64_t;
using Wide = __int128;

/// Largest accepted magnitude for a per-item valuation and for an item count.
/// With both below 2^31 every bundle value fits in an int64 and every
/// cross-multiplied comparison fits in a 128-bit product.
inline constexpr std::int64_t kMaxMagnitude = (std::int64_t{1} << 31) - 1;

/// Per-item value an agent assigns to type A and type B chores (both <= 0).
struct Valuation {
  Value a = 0;
  Value b = 0;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Succinct bundle: number of type A and type B chores held.
struct Bundle {
  Count alpha = 0;
  Count beta = 0;

  Count size() const { return alpha + beta; }
  bool empty() const { return alpha == 0 && beta == 0; }

  friend Bundle operator+(Bundle lhs, Bundle rhs) {
    return {lhs.alpha + rhs.alpha, lhs.beta + rhs.beta};
  }
  friend bool operator==(const Bundle&, const Bundle&) = default;
};

struct Instance {
  std::vector<Valuation> agents;
  Count countA = 0;
  Count countB = 0;

  std::size_t size() const { return agents.size(); }
  Count items() const { return countA + countB; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// One bundle per agent. Agent order is whatever the owning context uses
/// (canonical inside the solvers, original at the API boundary).
struct Allocation {
  std::vector<Bundle> bundles;

  std::size_t size() const { return bundles.size(); }
  Bundle total() const;
  bool complete_for(const Instance& instance) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Agents sorted by vA/vB ascending (vB = 0 sorts last), stable on input index.
struct CanonicalInstance {
  Instance base;
  std::vector<std::size_t> perm;  // canonical index -> original index
  bool swappedTypes = false;

  std::size_t size() const { return base.size(); }
  const Valuation& agent(std::size_t i) const { return base.agents.at(i); }
};

struct AgentGroups {
  std::vector<std::size_t> preferA;  // N_A: vA >= vB
  std::vector<std::size_t> preferB;  // N_B: vA < vB
};

enum class StrongPreference { StronglyA, StronglyB, Neither };

/// Throws ValidationError on an empty agent list, positive values, negative
/// counts or an agent valuing both types at zero while chores exist; throws
/// ArithmeticError when a magnitude exceeds kMaxMagnitude.
void validate(const Instance& instance);

/// Throws ValidationError unless X has one bundle per agent and its totals
/// do not exceed the instance's item counts.
void validate_allocation(const Instance& instance, const Allocation& X);

/// Ratio order: true iff vA_x / vB_x < vA_y / vB_y, compared by cross
/// multiplication; vB = 0 counts as +infinity.
bool ratio_less(const Valuation& x, const Valuation& y);
bool ratio_equal(const Valuation& x, const Valuation& y);

CanonicalInstance canonicalize(const Instance& instance);

AgentGroups agent_groups(const CanonicalInstance& ci);

StrongPreference strongly_prefers(const CanonicalInstance& ci, std::size_t i);

Value bundle_value(const Valuation& v, const Bundle& b);
Value bundle_value(const CanonicalInstance& ci, std::size_t i, const Bundle& b);

/// Exchanges the roles of type A and type B everywhere.
Instance swap_types(const Instance& instance);
Allocation swap_types(const Allocation& X);

/// Re-expresses an allocation indexed by canonical agents in original order
/// (and original type labels when ci.swappedTypes), and the reverse.
Allocation to_original(const CanonicalInstance& ci, const Allocation& X);
Allocation to_canonical(const CanonicalInstance& ci, const Allocation& X);

bool all_strictly_negative(const Instance& instance);

/// Allocation for instances where some agent values a whole chore type at
/// zero: that type goes to such an agent; the other type goes to a zero-valuer
/// too when one exists, else round-robin over all agents. The result is EFX and
/// fPO. Returns nullopt when every valuation is strictly negative.
std::optional<Allocation> zero_valuation_allocation(const Instance& instance);

/// Equal split of `count` items over `recipients` in order: earlier recipients
/// receive the remainder.
std::vector<Count> round_robin_counts(Count count, std::size_t recipients);

}  // namespace chorediv
