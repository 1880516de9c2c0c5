#include "chorediv/report.hpp"

namespace chorediv {

PropertyReport analyze(const Instance& instance, const Allocation& X,
                       const ReportOptions& options) {
  validate(instance);
  validate_allocation(instance, X);
  PropertyReport r;
  r.complete = X.complete_for(instance);
  r.envy = report(std::span<const Valuation>(instance.agents), X);

  if (!all_strictly_negative(instance)) return r;
  const CanonicalInstance ci = canonicalize(instance);
  const Allocation canonical = to_canonical(ci, X);
  const StructureVerdict verdict = check_structure(ci, canonical);
  r.fpoStructure = verdict.satisfied;
  if (verdict.witnessRange) {
    for (std::size_t i = verdict.witnessRange->first;
         i <= verdict.witnessRange->last; ++i) {
      r.pivotAgents.push_back(ci.perm[i]);
    }
  }
  if (verdict.violation) {
    FractionalTransfer t = build_improvement(ci, canonical, *verdict.violation);
    r.structureViolation =
        ViolatingPair{ci.perm[verdict.violation->j], ci.perm[verdict.violation->k]};
    t.from_j = ci.perm[t.from_j];
    t.to_k = ci.perm[t.to_k];
    r.improvement = t;
  }
  if (options.integralPo && r.complete) {
    r.poIntegral = is_po_integral(ci, canonical, options.budget);
  }
  return r;
}

}  // namespace chorediv
