#ifndef FAIRFLOW_LUPMIN_H_
#define FAIRFLOW_LUPMIN_H_

#include "fairflow/baseflow.h"

namespace fairflow {

// The parallel-copy instance: every e in L gets a copy e' with bounds [0, 1]
// and cost 1, while e itself gets [f, g - 1] and cost 0.
struct AugmentedInstance {
  Instance instance;
  ArcVec cost;
  ArcSet L;
  std::vector<ArcId> copy_of;  // copy_of[i] is the copy of L[i]
  int original_arc_count = 0;

  // x(e) = x1(e) + x1(e') on L, x1(e) elsewhere.
  ArcVec Decode(const ArcVec& x1) const;
};

// Throws InputError unless -inf < f < g < +inf on L.
AugmentedInstance AugmentInstance(const Instance& inst, const ArcSet& L);

// Distinct upper level sets of pi. Throws InputError on negative entries.
Chain ExtractChain(const NodeVec& pi);

// rho_L(C) - sum over members of [rho_g - delta_f - p]; -inf if the chain
// is not feasible.
ExtInt ChainValue(const Instance& inst, const ArcSet& L, const Chain& chain);

// The case tables for arcs in L and arcs outside L.
Bounds DeriveBounds(const Instance& inst, const ArcSet& L, const Chain& chain);

struct LupminResult {
  std::int64_t min_saturated = 0;
  Chain chain;
  Bounds bounds;  // (f_L, g_L)
  ArcVec witness;
  ArcSet solved_L;  // L without its tight arcs
};

// Tight arcs of L are set aside, counted as saturated, and handled by the
// non-L case table.
LupminResult LupminSolve(const Instance& inst, const ArcSet& L);

struct CriteriaReport {
  bool ok = true;
  int failing = 0;           // first failing criterion 1..6, or 0
  bool in_face_box = false;  // x in Q(f_C, g_C; B_C), computed separately
};

// Throws CertificateMismatch if the criteria and the membership test
// disagree.
CriteriaReport CheckOptimalityCriteria(const Instance& inst, const ArcSet& L,
                                       const Chain& chain, const ArcVec& x);

}  // namespace fairflow

#endif  // FAIRFLOW_LUPMIN_H_
