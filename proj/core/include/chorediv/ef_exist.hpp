#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <variant>

#include "chorediv/model.hpp"

namespace chorediv {

// Envy-free existence for two chore types.
//
// With every vB < 0 and agents in ratio order, some envy-free allocation (if
// any exists) gives non-increasing type A counts along the order, and then
// mutual non-envy between neighbours implies global envy-freeness. A memoized
// search over (remaining A, remaining B, agents assigned, last bundle) decides
// existence and rebuilds a witness.

struct TrivialEf {
  Allocation allocation;  // original agent order
};

struct ReducedEf {
  CanonicalInstance ci;  // all vB < 0, vA <= 0; swappedTypes when relabeled
};

using EfPreprocessed = std::variant<TrivialEf, ReducedEf>;

/// Trivial when one agent zero-values type A and one zero-values type B;
/// otherwise relabels types so that any zero valuation is on type A and
/// canonicalizes.
EfPreprocessed preprocess_ef(const Instance& instance);

/// Mutual non-envy of canonical neighbours `i` and `i + 1`. Requires
/// bundle_i.alpha >= bundle_next.alpha (ContractError otherwise).
bool local_ef_pair(const CanonicalInstance& ci, std::size_t i,
                   const Bundle& bundle_i, const Bundle& bundle_next);

struct DPState {
  Count a = 0;
  Count b = 0;
  std::size_t assigned = 0;  // agents 1..assigned hold bundles
  Bundle last;               // bundle of agent `assigned`

  friend bool operator==(const DPState&, const DPState&) = default;
};

struct DPStateHash {
  std::size_t operator()(const DPState& s) const;
};

struct DPEntry {
  bool feasible = false;
  Bundle next;  // first successful successor bundle when feasible
};

class DPTable {
 public:
  explicit DPTable(const CanonicalInstance& ci);

  /// YES iff the remaining chores can go to agents assigned+1..n with every
  /// neighbouring pair mutually non-envious and type A counts non-increasing.
  bool solve(const DPState& state);

  /// Complete allocation (canonical order) starting with `first` for agent 1.
  /// Requires solve() to have returned true for the corresponding root.
  Allocation reconstruct(const Bundle& first) const;

  std::size_t states() const { return memo_.size(); }
  std::uint64_t transitions() const { return transitions_; }

 private:
  const CanonicalInstance& ci_;
  std::unordered_map<DPState, DPEntry, DPStateHash> memo_;
  std::uint64_t transitions_ = 0;
};

struct EfSearchResult {
  std::optional<Allocation> allocation;  // original order and labels
  bool trivial = false;
  std::size_t states = 0;
  std::uint64_t transitions = 0;
};

EfSearchResult ef_search(const Instance& instance);

/// Envy-free allocation in original agent order, or nullopt if none exists.
std::optional<Allocation> ef_exists(const Instance& instance);

}  // namespace chorediv
