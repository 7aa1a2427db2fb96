#ifndef FAIRFLOW_EXISTENCE_H_
#define FAIRFLOW_EXISTENCE_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "fairflow/baseflow.h"

namespace fairflow {

enum class StarKind { kJump, kA1, kA2 };

// An arc of D*. For kA1 the origin is the arc itself; for kA2 it is the
// arc of D that this one reverses; kJump arcs have origin -1.
struct StarArc {
  int tail;
  int head;
  StarKind kind;
  ArcId origin;
};

struct JumpStructure {
  int n = 0;
  std::vector<Subset> principal;  // P(u)
  std::vector<StarArc> arcs;      // J, then A1, then A2
  ArcSet a1;
  ArcSet a2_origin;
};

JumpStructure BuildJumpStructure(const Instance& inst);

struct Dicircuit {
  std::vector<int> arcs;  // indices into JumpStructure::arcs, in cycle order
};

// A directed cycle of D* through an A1 arc whose origin is in F.
std::optional<Dicircuit> HasBlockingDicircuit(const JumpStructure& js,
                                              const ArcSet& F);

// Lowers z by step on the A1 arcs of the circuit and raises it on the
// origins of its A2 arcs. Throws InputError if the circuit is not blocking.
template <typename T>
std::vector<T> ImproveAlongCircuit(const JumpStructure& js, const Dicircuit& c,
                                   const ArcSet& F, std::vector<T> z, T step) {
  bool blocking = false;
  for (int i : c.arcs) {
    const StarArc& a = js.arcs.at(i);
    blocking |= a.kind == StarKind::kA1 && ArcSetContains(F, a.origin);
  }
  if (!blocking) throw InputError("circuit does not meet F");
  for (int i : c.arcs) {
    const StarArc& a = js.arcs[i];
    if (a.kind == StarKind::kA1) z.at(a.origin) -= step;
    if (a.kind == StarKind::kA2) z.at(a.origin) += step;
  }
  return z;
}

inline ArcVec ImproveAlongCircuit(const JumpStructure& js, const Dicircuit& c,
                                  const ArcSet& F, const ArcVec& z) {
  return ImproveAlongCircuit<std::int64_t>(js, c, F, z, 1);
}

// Nodes reachable from s in D*.
Subset ReachableInStar(const JumpStructure& js, int s);

// Truncates g on F at the largest F-value of a feasible point, then replaces
// each -inf lower bound on F by the reachable-set bound. Throws InputError
// if a blocking circuit exists and InfeasibleError on an empty Q.
Instance FinitizeBounds(const Instance& inst);

}  // namespace fairflow

#endif  // FAIRFLOW_EXISTENCE_H_
