#ifndef FAIRFLOW_CORE_H_
#define FAIRFLOW_CORE_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "fairflow/errors.h"
#include "fairflow/ext_int.h"

namespace fairflow {

// Node subsets are bitmasks; bit v is node v.
using Subset = std::uint32_t;
inline constexpr int kMaxNodes = 20;

using ArcId = int;
// Sorted, duplicate-free list of arc ids.
using ArcSet = std::vector<ArcId>;
// Finite integer value per arc (flows, costs).
using ArcVec = std::vector<std::int64_t>;
// Finite integer value per node (net in-flows, potentials).
using NodeVec = std::vector<std::int64_t>;
// C_1 strictly inside C_2 strictly inside ... ; all nonempty proper.
using Chain = std::vector<Subset>;

inline bool Contains(Subset z, int v) { return (z >> v) & 1u; }
inline Subset Singleton(int v) { return Subset{1} << v; }
inline Subset FullSet(int n) {
  return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1);
}
inline bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }

struct Arc {
  int tail;
  int head;
};

// Loopless digraph; parallel arcs allowed, arcs identified by position.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int node_count, std::vector<Arc> arcs = {});

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId e) const { return arcs_.at(e); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Subset all() const { return FullSet(node_count_); }

  ArcId AddArc(int tail, int head);

  bool Enters(ArcId e, Subset z) const {
    const Arc& a = arcs_[e];
    return Contains(z, a.head) && !Contains(z, a.tail);
  }
  bool Leaves(ArcId e, Subset z) const {
    const Arc& a = arcs_[e];
    return Contains(z, a.tail) && !Contains(z, a.head);
  }

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
};

// Lower and upper bounds per arc. f may be -inf, g may be +inf.
struct Bounds {
  std::vector<ExtInt> f;
  std::vector<ExtInt> g;

  // Throws InputError unless sizes match and f <= g with allowed infinities.
  void Validate(int arc_count) const;
  bool IsTight(ArcId e) const { return f[e] == g[e]; }
};

// Throws InputError if not strictly nested, or a member is empty or V.
void ValidateChain(const Chain& chain, int node_count);

ArcSet AllArcs(const Digraph& d);
ArcSet Difference(const ArcSet& a, const ArcSet& b);
bool ArcSetContains(const ArcSet& a, ArcId e);
// Throws InputError on out-of-range or repeated ids; returns sorted copy.
ArcSet NormalizeArcSet(ArcSet a, int arc_count);

int CutInCount(const Digraph& d, const ArcSet& arcs, Subset z);
int CutOutCount(const Digraph& d, const ArcSet& arcs, Subset z);

std::int64_t CutInFlow(const Digraph& d, const ArcVec& x, Subset z);
std::int64_t CutOutFlow(const Digraph& d, const ArcVec& x, Subset z);
// Psi_x(Z) = in-flow minus out-flow.
std::int64_t NetFlow(const Digraph& d, const ArcVec& x, Subset z);
// psi_x(v) for every node v.
NodeVec NodeNetFlow(const Digraph& d, const ArcVec& x);

// Sums over a bound side; infinite entries absorb.
ExtInt CutInSum(const Digraph& d, const std::vector<ExtInt>& side, Subset z);
ExtInt CutOutSum(const Digraph& d, const std::vector<ExtInt>& side, Subset z);
// Throws std::domain_error when both sums are infinite of the same sign.
ExtInt NetSum(const Digraph& d, const std::vector<ExtInt>& side, Subset z);

struct ChainClass {
  enum class Kind { kEntering, kLeaving, kNeutral, kMixed };
  Kind kind = Kind::kNeutral;
  // Number of members entered (kEntering) or left (kLeaving).
  int multiplicity = 0;

  friend bool operator==(const ChainClass&, const ChainClass&) = default;
};

// Classifies against an arbitrary family; kMixed is possible here.
ChainClass ClassifyAgainstFamily(const Digraph& d,
                                 const std::vector<Subset>& family, ArcId e);
// Validates the chain; never returns kMixed.
ChainClass ChainClassify(const Digraph& d, const Chain& chain, ArcId e);
// Arcs of `arcs` entering at least one member, each counted once.
int ChainEnteringCount(const Digraph& d, const Chain& chain,
                       const ArcSet& arcs);

// Compares the multisets sorted non-increasingly, lexicographically.
std::strong_ordering DecminCompare(std::vector<std::int64_t> u,
                                   std::vector<std::int64_t> v);
std::vector<std::int64_t> RestrictTo(const ArcVec& x, const ArcSet& arcs);

}  // namespace fairflow

#endif  // FAIRFLOW_CORE_H_
