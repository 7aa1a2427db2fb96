#ifndef FAIRFLOW_DECMIN_H_
#define FAIRFLOW_DECMIN_H_

#include <optional>
#include <utility>

#include "fairflow/lupmin.h"

namespace fairflow {

ArcSet StripTight(const ArcSet& F, const Bounds& bounds);

struct NdStep {
  std::int64_t mu;
  Subset argmax;     // maximizer of h - mu * b
  ExtInt excess;     // h(argmax) - mu * b(argmax)
};

struct NdResult {
  std::int64_t mu_min = 0;
  std::vector<NdStep> log;  // log[0] is mu = 0; the last entry is good
  std::int64_t max_finite_b = 0;
  int iterations() const { return static_cast<int>(log.size()) - 1; }
};

// Smallest mu >= 0 with mu * b(X) >= h(X) for all X. Needs b >= 0, a good mu
// to exist, and mu = 0 to be bad; throws InputError otherwise.
NdResult NewtonDinkelbach(const SetFn& h, const SetFn& b);

struct BetaResult {
  std::optional<std::int64_t> beta;  // empty when F ran out of non-tight arcs
  std::optional<std::int64_t> beta_F;  // min max on the non-tight input F
  Bounds bounds;                     // g lowered on F, max g on F = beta
  ArcSet F;                          // tight arcs stripped
  std::vector<NdResult> nd_runs;
  int lowerings = 0;
};

// Needs a feasible instance with f, g finite on the non-tight arcs of F.
BetaResult ComputeBeta(const Instance& inst);

struct PhaseTrace {
  std::int64_t beta = 0;
  ArcSet L_beta;
  Chain chain;
  ArcSet L_prime;
  Bounds bounds_after;
};

struct PhaseResult {
  PhaseTrace trace;
  Instance narrowed;
};

// One reduction step. Needs the assumptions block: F nonempty without tight
// arcs, beta = max g on F, and Q(f, g - chi of L_beta; B) empty.
PhaseResult PredecminPhase(const Instance& inst);

struct SolveResult {
  Bounds bounds_star;              // (f*, g*)
  std::vector<Chain> face_chains;  // applied to B in order
  ArcVec witness;
  std::vector<PhaseTrace> traces;
  Instance final_instance;         // Q(f*, g*; B-face), F empty
};

// Throws InfeasibleError on an empty Q and InputError if f or g is infinite
// on a non-tight arc of F.
SolveResult SolveDecmin(const Instance& inst);

ArcVec SolveMinCostDecmin(const SolveResult& solved, const ArcVec& cost);
ArcVec SolveMinCostDecmin(const Instance& inst, const ArcVec& cost);

}  // namespace fairflow

#endif  // FAIRFLOW_DECMIN_H_
