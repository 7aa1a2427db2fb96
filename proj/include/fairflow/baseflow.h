#ifndef FAIRFLOW_BASEFLOW_H_
#define FAIRFLOW_BASEFLOW_H_

#include <optional>
#include <utility>

#include "fairflow/core.h"
#include "fairflow/setfn.h"

namespace fairflow {

// Q(f, g; B) on a digraph, with a focus arc set F and an optional cost.
struct Instance {
  Digraph digraph;
  Bounds bounds;
  BaseOracle base;
  ArcSet F;
  std::optional<ArcVec> cost;

  int n() const { return digraph.node_count(); }
  int m() const { return digraph.arc_count(); }
  // Throws InputError on inconsistent sizes or bounds.
  void Validate() const;
};

struct FeasCert {
  bool feasible = false;
  ArcVec witness;          // when feasible
  Subset violator = 0;     // when infeasible
  ExtInt deficit;          // rho_g - delta_f - p on the violator, < 0
};

// rho_g(Z) - delta_f(Z) - p(Z); may be +inf, never -inf.
ExtInt FeasibilitySlack(const Instance& inst, Subset z);

FeasCert CheckFeasible(const Instance& inst);

// First set (by mask) with negative slack, without building a witness.
std::optional<std::pair<Subset, ExtInt>> FirstViolator(const Instance& inst);

// An integral element of Q. Throws InfeasibleError with the violator.
ArcVec FindFeasible(const Instance& inst);

bool IsFeasibleFlow(const Instance& inst, const ArcVec& x);

// Largest a with y - a*chi_s + a*chi_t in B; +inf if unconstrained.
ExtInt ExchangeCapacity(const BaseOracle& b, const NodeVec& y, int s, int t);

struct MinCostResult {
  ArcVec x;
  NodeVec potential;  // nonnegative, min 0
  std::int64_t cost = 0;
  std::int64_t steps = 0;  // ascent moves taken
};

// The Lagrangian dual value at node potentials pi; -inf when unbounded.
ExtInt DualValue(const Instance& inst, const ArcVec& cost, const NodeVec& pi);

// Upper level sets of pi as a chain, smallest member first.
Chain LevelChain(const NodeVec& pi);

// Cost-minimal integral element of Q with optimal integer potentials.
// Throws InfeasibleError if Q is empty and InputError if the dual is
// unbounded at the origin (a nonzero cost on an infinite bound side).
MinCostResult MinCostFlow(const Instance& inst, const ArcVec& cost);

}  // namespace fairflow

#endif  // FAIRFLOW_BASEFLOW_H_
