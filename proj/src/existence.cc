#include "fairflow/existence.h"

#include <algorithm>
#include <deque>

namespace fairflow {
namespace {

// BFS over D* from s; parent[v] is the index of the arc used to reach v.
std::vector<int> BfsParents(const JumpStructure& js, int s, Subset* reached) {
  std::vector<int> parent(js.n, -1);
  Subset seen = Singleton(s);
  std::deque<int> queue{s};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int i = 0; i < static_cast<int>(js.arcs.size()); ++i) {
      const StarArc& a = js.arcs[i];
      if (a.tail != u || Contains(seen, a.head)) continue;
      seen |= Singleton(a.head);
      parent[a.head] = i;
      queue.push_back(a.head);
    }
  }
  *reached = seen;
  return parent;
}

}  // namespace

JumpStructure BuildJumpStructure(const Instance& inst) {
  inst.Validate();
  const int n = inst.n();
  const Subset all = FullSet(n);
  JumpStructure js;
  js.n = n;
  js.principal.assign(n, all);
  for (Subset z = 0; z <= all; ++z) {
    if (!inst.base(z).is_finite()) continue;
    for (int u = 0; u < n; ++u) {
      if (Contains(z, u)) js.principal[u] &= z;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v != u && Contains(js.principal[u], v)) {
        js.arcs.push_back({u, v, StarKind::kJump, -1});
      }
    }
  }
  for (ArcId e = 0; e < inst.m(); ++e) {
    if (inst.bounds.f[e].is_neg_inf()) {
      js.a1.push_back(e);
      const Arc& a = inst.digraph.arc(e);
      js.arcs.push_back({a.tail, a.head, StarKind::kA1, e});
    }
  }
  for (ArcId e = 0; e < inst.m(); ++e) {
    if (inst.bounds.g[e].is_pos_inf() && !ArcSetContains(inst.F, e)) {
      js.a2_origin.push_back(e);
      const Arc& a = inst.digraph.arc(e);
      js.arcs.push_back({a.head, a.tail, StarKind::kA2, e});
    }
  }
  return js;
}

Subset ReachableInStar(const JumpStructure& js, int s) {
  Subset reached = 0;
  BfsParents(js, s, &reached);
  return reached;
}

std::optional<Dicircuit> HasBlockingDicircuit(const JumpStructure& js,
                                              const ArcSet& F) {
  for (int i = 0; i < static_cast<int>(js.arcs.size()); ++i) {
    const StarArc& a = js.arcs[i];
    if (a.kind != StarKind::kA1 || !ArcSetContains(F, a.origin)) continue;
    // a = ts; look for an s-t path.
    Subset reached = 0;
    std::vector<int> parent = BfsParents(js, a.head, &reached);
    if (!Contains(reached, a.tail)) continue;
    Dicircuit c;
    for (int v = a.tail; v != a.head; v = js.arcs[parent[v]].tail) {
      c.arcs.push_back(parent[v]);
    }
    std::reverse(c.arcs.begin(), c.arcs.end());
    c.arcs.push_back(i);
    return c;
  }
  return std::nullopt;
}

Instance FinitizeBounds(const Instance& inst) {
  inst.Validate();
  Instance out = inst;
  if (inst.F.empty()) return out;
  ArcVec z1 = FindFeasible(inst);
  std::int64_t beta = z1[inst.F[0]];
  for (ArcId e : inst.F) beta = std::max(beta, z1[e]);
  for (ArcId e : inst.F) out.bounds.g[e] = Min(out.bounds.g[e], ExtInt(beta));

  JumpStructure js = BuildJumpStructure(out);
  if (HasBlockingDicircuit(js, out.F)) {
    throw InputError("no dec-min element: D* has a circuit through F");
  }
  const Digraph& d = out.digraph;
  std::vector<ExtInt> lower(out.m());
  for (ArcId e : out.F) {
    if (!out.bounds.f[e].is_neg_inf()) continue;
    const Subset s_e = ReachableInStar(js, d.arc(e).head);
    lower[e] = out.base(s_e) -
               (CutInSum(d, out.bounds.g, s_e) - out.bounds.g[e]) +
               CutOutSum(d, out.bounds.f, s_e);
    if (!lower[e].is_finite()) {
      throw CertificateMismatch("finitize_bounds: reachable-set bound is infinite");
    }
  }
  for (ArcId e : out.F) {
    if (out.bounds.f[e].is_neg_inf()) out.bounds.f[e] = lower[e];
  }
  return out;
}

}  // namespace fairflow
