#ifndef FAIRFLOW_ORIENT_H_
#define FAIRFLOW_ORIENT_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairflow/baseflow.h"

namespace fairflow {

struct MixedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> directed;    // fixed arcs (tail, head)
  std::vector<std::pair<int, int>> undirected;  // reference direction u -> v
  int k = 1;

  void Validate() const;
};

// Per-node in-degree interval.
struct DegreeBounds {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
};

// Node v is node v of D; node n + v is its auxiliary node. Arc i < |E| is
// undirected edge i in reference direction with a flip variable in [0, 1];
// arc |E| + v runs from aux(v) to v and carries the in-degree of v.
struct Encoding {
  MixedGraph graph;
  Instance instance;  // F = auxiliary arcs
  bool empty = false;  // no admissible in-degree vector; instance unusable
  std::vector<NodeVec> degree_points;  // admissible in-degree vectors
};

Encoding Encode(const MixedGraph& mg,
                const std::optional<DegreeBounds>& bounds = std::nullopt,
                std::uint64_t budget = 10'000'000);

struct Orientation {
  std::vector<std::pair<int, int>> arcs;  // each undirected edge as (tail, head)
  std::vector<std::int64_t> indegree;     // counts directed arcs as well
};

Orientation Decode(const Encoding& enc, const ArcVec& x);

// Minimum over nonempty proper Z of arcs entering Z.
std::int64_t MinEnteringCut(int n, const std::vector<std::pair<int, int>>& arcs);

struct OrientationRecord {
  Orientation orientation;
  bool k_connected = false;
};

// All 2^|E| orientations. Throws BudgetExceeded if |E| > 20.
std::vector<OrientationRecord> BruteOrientations(const MixedGraph& mg);

struct OrientResult {
  bool feasible = false;
  Orientation orientation;
  std::optional<Subset> violator;  // node set certifying infeasibility
  std::string reason;
};

// cost[i] is charged when undirected edge i is flipped against its
// reference direction.
OrientResult DecminOrientation(const MixedGraph& mg,
                               const std::optional<DegreeBounds>& bounds =
                                   std::nullopt,
                               const std::optional<ArcVec>& cost = std::nullopt);

}  // namespace fairflow

#endif  // FAIRFLOW_ORIENT_H_
