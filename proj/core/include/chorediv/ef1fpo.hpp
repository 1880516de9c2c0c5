#pragma once

#include <cstddef>

#include "chorediv/model.hpp"

namespace chorediv {

// EF1 + fPO allocation for two chore types.
//
// Split indices are 1-based counts: split_round_robin(ci, i) gives type A to
// the first i canonical agents and type B to the remaining n - i. Returned
// agent indices are 0-based canonical positions.

struct SplitDiagnostics {
  std::size_t split = 0;
  bool hasAEnvy = false;  // an A-side agent EF1-envies a B-side agent
  bool hasBEnvy = false;  // a B-side agent EF1-envies an A-side agent
};

/// Requires 1 <= split < n; throws ContractError otherwise.
Allocation split_round_robin(const CanonicalInstance& ci, std::size_t split);

SplitDiagnostics split_diagnostics(const CanonicalInstance& ci,
                                   std::size_t split);

/// Smallest agent i (0-based) such that either i is first or the split just
/// before i has A-envy, and either i is last or the split just after i has
/// B-envy. Requires that no split-round-robin allocation is EF1.
std::size_t find_split_agent(const CanonicalInstance& ci);

struct Ef1FpoTrace {
  enum class Path { NoItems, SingleAgent, ZeroValuation, SplitRoundRobin,
                    TransferLoop };
  Path path = Path::NoItems;
  std::size_t split = 0;         // SplitRoundRobin: the EF1 split used
  std::size_t splitAgent = 0;    // TransferLoop: canonical split agent
  std::size_t transfers = 0;     // TransferLoop: loop iterations
};

struct Ef1FpoResult {
  Allocation allocation;  // original agent order
  Ef1FpoTrace trace;
};

Ef1FpoResult solve_ef1_fpo_traced(const Instance& instance);

/// Complete allocation in original agent order that is EF1 and fPO.
Allocation solve_ef1_fpo(const Instance& instance);

}  // namespace chorediv
