#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chorediv/model.hpp"
#include "chorediv/rational.hpp"

namespace chorediv {

// Efficiency for two chore types with strictly negative valuations.
//
// An allocation is fractionally Pareto optimal exactly when some pivot agent
// splits the ratio order: every agent with a strictly smaller vA/vB holds only
// type A chores and every agent with a strictly larger ratio holds only type B.
// All agent indices here are canonical.

struct AgentRange {
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const AgentRange&, const AgentRange&) = default;
};

/// j has the strictly smaller ratio yet holds type B; k holds type A.
struct ViolatingPair {
  std::size_t j = 0;
  std::size_t k = 0;

  friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct StructureVerdict {
  bool satisfied = false;
  std::optional<AgentRange> witnessRange;  // every valid pivot, maximal
  std::optional<ViolatingPair> violation;
};

/// Moves `epsilon` type A from k to j and `bRate` type B from j to k.
struct FractionalTransfer {
  std::size_t from_j = 0;
  std::size_t to_k = 0;
  Rational epsilon;
  Rational bRate;
};

struct FractionalBundle {
  Rational alpha;
  Rational beta;
};

/// Throws ContractError if any valuation is zero.
StructureVerdict check_structure(const CanonicalInstance& ci,
                                 const Allocation& X);

/// Largest transfer allowed for the violating pair: epsilon =
/// min(alpha_k, beta_j * vB_j / vA_j), bRate = epsilon * vA_j / vB_j.
/// Agent j's value is unchanged and agent k's strictly improves.
FractionalTransfer build_improvement(const CanonicalInstance& ci,
                                     const Allocation& X,
                                     const ViolatingPair& violation);

std::vector<FractionalBundle> apply_transfer(const Allocation& X,
                                             const FractionalTransfer& t);

Rational fractional_value(const Valuation& v, const FractionalBundle& b);

/// Exact check that applying t to X is feasible (no negative amounts, item
/// totals conserved) and is a strict fractional Pareto improvement.
bool is_strict_improvement(const CanonicalInstance& ci, const Allocation& X,
                           const FractionalTransfer& t);

/// Weak improvement for every agent, strict for at least one.
bool pareto_dominates(const CanonicalInstance& ci, const Allocation& Y,
                      const Allocation& X);
bool pareto_dominates(std::span<const Valuation> agents, const Allocation& Y,
                      const Allocation& X);

/// Agents before `pivot` hold only type A, agents after it only type B.
bool is_ordered_wrt(const Allocation& X, std::size_t pivot);

}  // namespace chorediv
