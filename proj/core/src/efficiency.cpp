#include "chorediv/efficiency.hpp"

#include "chorediv/errors.hpp"

namespace chorediv {

namespace {

void require_strictly_negative(const CanonicalInstance& ci) {
  if (!all_strictly_negative(ci.base)) {
    throw ContractError(
        "fPO structure is only characterized for strictly negative "
        "valuations");
  }
}

// Maximal runs of equal-ratio agents, as [first, last] canonical ranges.
std::vector<AgentRange> ratio_classes(const CanonicalInstance& ci) {
  std::vector<AgentRange> classes;
  for (std::size_t i = 0; i < ci.size(); ++i) {
    if (!classes.empty() && ratio_equal(ci.agent(classes.back().last),
                                        ci.agent(i))) {
      classes.back().last = i;
    } else {
      classes.push_back({i, i});
    }
  }
  return classes;
}

}  // namespace

StructureVerdict check_structure(const CanonicalInstance& ci,
                                 const Allocation& X) {
  require_strictly_negative(ci);
  if (X.size() != ci.size()) {
    throw ContractError("check_structure: allocation size mismatch");
  }
  const auto classes = ratio_classes(ci);
  const auto count = static_cast<std::ptrdiff_t>(classes.size());

  // A pivot class c is valid iff no class before c holds B and no class
  // after c holds A.
  std::ptrdiff_t first_b = count;
  std::ptrdiff_t last_a = -1;
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    for (std::size_t i = classes[c].first; i <= classes[c].last; ++i) {
      if (X.bundles[i].beta > 0 && first_b == count) first_b = c;
      if (X.bundles[i].alpha > 0) last_a = c;
    }
  }

  StructureVerdict verdict;
  const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(last_a, 0);
  const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(first_b, count - 1);
  if (lo <= hi) {
    verdict.satisfied = true;
    verdict.witnessRange = AgentRange{classes[lo].first, classes[hi].last};
    return verdict;
  }

  ViolatingPair pair;
  for (std::size_t i = classes[first_b].first; i <= classes[first_b].last;
       ++i) {
    if (X.bundles[i].beta > 0) {
      pair.j = i;
      break;
    }
  }
  for (std::size_t i = classes[last_a].last + 1; i-- > classes[last_a].first;) {
    if (X.bundles[i].alpha > 0) {
      pair.k = i;
      break;
    }
  }
  verdict.violation = pair;
  return verdict;
}

FractionalTransfer build_improvement(const CanonicalInstance& ci,
                                     const Allocation& X,
                                     const ViolatingPair& violation) {
  require_strictly_negative(ci);
  const auto [j, k] = violation;
  if (j >= ci.size() || k >= ci.size() || X.size() != ci.size()) {
    throw ContractError("build_improvement: index out of range");
  }
  const auto& vj = ci.agent(j);
  if (!ratio_less(vj, ci.agent(k)) || X.bundles[j].beta <= 0 ||
      X.bundles[k].alpha <= 0) {
    throw ContractError("build_improvement: pair does not violate structure");
  }
  // B items per A item that keep j indifferent.
  const Rational rate(vj.a, vj.b);
  FractionalTransfer t;
  t.from_j = j;
  t.to_k = k;
  t.epsilon = min(Rational(X.bundles[k].alpha),
                  Rational(X.bundles[j].beta) / rate);
  t.bRate = t.epsilon * rate;
  return t;
}

std::vector<FractionalBundle> apply_transfer(const Allocation& X,
                                             const FractionalTransfer& t) {
  std::vector<FractionalBundle> out;
  out.reserve(X.size());
  for (const auto& b : X.bundles) out.push_back({b.alpha, b.beta});
  out.at(t.from_j).alpha = out[t.from_j].alpha + t.epsilon;
  out[t.from_j].beta = out[t.from_j].beta - t.bRate;
  out.at(t.to_k).alpha = out[t.to_k].alpha - t.epsilon;
  out[t.to_k].beta = out[t.to_k].beta + t.bRate;
  return out;
}

Rational fractional_value(const Valuation& v, const FractionalBundle& b) {
  return b.alpha * Rational(v.a) + b.beta * Rational(v.b);
}

bool is_strict_improvement(const CanonicalInstance& ci, const Allocation& X,
                           const FractionalTransfer& t) {
  if (t.from_j == t.to_k || !(t.epsilon > Rational(0)) ||
      !(t.bRate > Rational(0))) {
    return false;
  }
  const auto after = apply_transfer(X, t);
  Rational alpha_total;
  Rational beta_total;
  bool strict = false;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (after[i].alpha < Rational(0) || after[i].beta < Rational(0)) {
      return false;
    }
    alpha_total = alpha_total + after[i].alpha;
    beta_total = beta_total + after[i].beta;
    const Rational before(bundle_value(ci.agent(i), X.bundles[i]));
    const Rational now = fractional_value(ci.agent(i), after[i]);
    if (now < before) return false;
    strict = strict || now > before;
  }
  const Bundle total = X.total();
  return strict && alpha_total == Rational(total.alpha) &&
         beta_total == Rational(total.beta);
}

bool pareto_dominates(std::span<const Valuation> agents, const Allocation& Y,
                      const Allocation& X) {
  if (Y.size() != agents.size() || X.size() != agents.size()) {
    throw ContractError("pareto_dominates: allocation size mismatch");
  }
  bool strict = false;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const Value y = bundle_value(agents[i], Y.bundles[i]);
    const Value x = bundle_value(agents[i], X.bundles[i]);
    if (y < x) return false;
    strict = strict || y > x;
  }
  return strict;
}

bool pareto_dominates(const CanonicalInstance& ci, const Allocation& Y,
                      const Allocation& X) {
  return pareto_dominates(std::span<const Valuation>(ci.base.agents), Y, X);
}

bool is_ordered_wrt(const Allocation& X, std::size_t pivot) {
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (i < pivot && X.bundles[i].beta > 0) return false;
    if (i > pivot && X.bundles[i].alpha > 0) return false;
  }
  return true;
}

}  // namespace chorediv
