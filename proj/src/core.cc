#include "fairflow/core.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace fairflow {

Digraph::Digraph(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count) {
  if (node_count < 1 || node_count > kMaxNodes) {
    throw InputError("node count must be in [1, " + std::to_string(kMaxNodes) +
                     "], got " + std::to_string(node_count));
  }
  for (const Arc& a : arcs) AddArc(a.tail, a.head);
}

ArcId Digraph::AddArc(int tail, int head) {
  if (tail < 0 || tail >= node_count_ || head < 0 || head >= node_count_) {
    throw InputError("arc endpoint out of range");
  }
  if (tail == head) throw InputError("loops are not allowed");
  arcs_.push_back({tail, head});
  return arc_count() - 1;
}

void Bounds::Validate(int arc_count) const {
  if (static_cast<int>(f.size()) != arc_count ||
      static_cast<int>(g.size()) != arc_count) {
    throw InputError("bounds size does not match arc count");
  }
  for (int e = 0; e < arc_count; ++e) {
    if (f[e].is_pos_inf()) throw InputError("f(e) = +inf on arc " + std::to_string(e));
    if (g[e].is_neg_inf()) throw InputError("g(e) = -inf on arc " + std::to_string(e));
    if (g[e] < f[e]) throw InputError("f > g on arc " + std::to_string(e));
  }
}

void ValidateChain(const Chain& chain, int node_count) {
  const Subset all = FullSet(node_count);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Subset c = chain[i];
    if (c == 0 || c == all || !IsSubsetOf(c, all)) {
      throw InputError("chain member must be a nonempty proper subset");
    }
    if (i > 0 && (chain[i - 1] == c || !IsSubsetOf(chain[i - 1], c))) {
      throw InputError("chain is not strictly nested");
    }
  }
}

ArcSet AllArcs(const Digraph& d) {
  ArcSet out(d.arc_count());
  for (int e = 0; e < d.arc_count(); ++e) out[e] = e;
  return out;
}

ArcSet Difference(const ArcSet& a, const ArcSet& b) {
  ArcSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool ArcSetContains(const ArcSet& a, ArcId e) {
  return std::binary_search(a.begin(), a.end(), e);
}

ArcSet NormalizeArcSet(ArcSet a, int arc_count) {
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= arc_count) throw InputError("arc id out of range");
    if (i > 0 && a[i] == a[i - 1]) throw InputError("repeated arc id");
  }
  return a;
}

int CutInCount(const Digraph& d, const ArcSet& arcs, Subset z) {
  int count = 0;
  for (ArcId e : arcs) count += d.Enters(e, z);
  return count;
}

int CutOutCount(const Digraph& d, const ArcSet& arcs, Subset z) {
  int count = 0;
  for (ArcId e : arcs) count += d.Leaves(e, z);
  return count;
}

std::int64_t CutInFlow(const Digraph& d, const ArcVec& x, Subset z) {
  std::int64_t s = 0;
  for (int e = 0; e < d.arc_count(); ++e) {
    if (d.Enters(e, z)) s += x[e];
  }
  return s;
}

std::int64_t CutOutFlow(const Digraph& d, const ArcVec& x, Subset z) {
  std::int64_t s = 0;
  for (int e = 0; e < d.arc_count(); ++e) {
    if (d.Leaves(e, z)) s += x[e];
  }
  return s;
}

std::int64_t NetFlow(const Digraph& d, const ArcVec& x, Subset z) {
  return CutInFlow(d, x, z) - CutOutFlow(d, x, z);
}

NodeVec NodeNetFlow(const Digraph& d, const ArcVec& x) {
  NodeVec psi(d.node_count(), 0);
  for (int e = 0; e < d.arc_count(); ++e) {
    psi[d.arc(e).head] += x[e];
    psi[d.arc(e).tail] -= x[e];
  }
  return psi;
}

ExtInt CutInSum(const Digraph& d, const std::vector<ExtInt>& side, Subset z) {
  ExtInt s = 0;
  for (int e = 0; e < d.arc_count(); ++e) {
    if (d.Enters(e, z)) s += side[e];
  }
  return s;
}

ExtInt CutOutSum(const Digraph& d, const std::vector<ExtInt>& side, Subset z) {
  ExtInt s = 0;
  for (int e = 0; e < d.arc_count(); ++e) {
    if (d.Leaves(e, z)) s += side[e];
  }
  return s;
}

ExtInt NetSum(const Digraph& d, const std::vector<ExtInt>& side, Subset z) {
  return CutInSum(d, side, z) - CutOutSum(d, side, z);
}

ChainClass ClassifyAgainstFamily(const Digraph& d,
                                 const std::vector<Subset>& family, ArcId e) {
  int entered = 0;
  int left = 0;
  for (Subset c : family) {
    entered += d.Enters(e, c);
    left += d.Leaves(e, c);
  }
  if (entered > 0 && left > 0) return {ChainClass::Kind::kMixed, 0};
  if (entered > 0) return {ChainClass::Kind::kEntering, entered};
  if (left > 0) return {ChainClass::Kind::kLeaving, left};
  return {ChainClass::Kind::kNeutral, 0};
}

ChainClass ChainClassify(const Digraph& d, const Chain& chain, ArcId e) {
  ValidateChain(chain, d.node_count());
  ChainClass c = ClassifyAgainstFamily(d, chain, e);
  if (c.kind == ChainClass::Kind::kMixed) {
    throw std::logic_error("arc both enters and leaves members of a chain");
  }
  return c;
}

int ChainEnteringCount(const Digraph& d, const Chain& chain,
                       const ArcSet& arcs) {
  int count = 0;
  for (ArcId e : arcs) {
    for (Subset c : chain) {
      if (d.Enters(e, c)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::strong_ordering DecminCompare(std::vector<std::int64_t> u,
                                   std::vector<std::int64_t> v) {
  if (u.size() != v.size()) throw InputError("decmin_compare: size mismatch");
  std::sort(u.begin(), u.end(), std::greater<>());
  std::sort(v.begin(), v.end(), std::greater<>());
  return u <=> v;
}

std::vector<std::int64_t> RestrictTo(const ArcVec& x, const ArcSet& arcs) {
  std::vector<std::int64_t> out;
  out.reserve(arcs.size());
  for (ArcId e : arcs) out.push_back(x[e]);
  return out;
}

}  // namespace fairflow
