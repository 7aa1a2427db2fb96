#include "fairflow/orient.h"

#include <algorithm>
#include <limits>

#include "fairflow/decmin.h"

namespace fairflow {
namespace {

// Edges (directed or undirected) with both ends in z.
std::int64_t Inside(const MixedGraph& mg, Subset z) {
  std::int64_t c = 0;
  for (auto [u, v] : mg.directed) c += Contains(z, u) && Contains(z, v);
  for (auto [u, v] : mg.undirected) c += Contains(z, u) && Contains(z, v);
  return c;
}

std::int64_t Total(const MixedGraph& mg) {
  return static_cast<std::int64_t>(mg.directed.size() + mg.undirected.size());
}

DegreeBounds EffectiveBounds(const MixedGraph& mg,
                             const std::optional<DegreeBounds>& bounds) {
  DegreeBounds out;
  out.lo.assign(mg.n, 0);
  out.hi.assign(mg.n, 0);
  for (auto [u, v] : mg.directed) {
    ++out.hi[u];
    ++out.hi[v];
  }
  for (auto [u, v] : mg.undirected) {
    ++out.hi[u];
    ++out.hi[v];
  }
  if (bounds) {
    if (static_cast<int>(bounds->lo.size()) != mg.n ||
        static_cast<int>(bounds->hi.size()) != mg.n) {
      throw InputError("degree bounds need one interval per node");
    }
    for (int v = 0; v < mg.n; ++v) {
      out.lo[v] = std::max(out.lo[v], bounds->lo[v]);
      out.hi[v] = std::min(out.hi[v], bounds->hi[v]);
    }
  }
  return out;
}

std::optional<Subset> CutCertificate(const MixedGraph& mg,
                                     const DegreeBounds& db,
                                     std::string* reason) {
  const Subset all = FullSet(mg.n);
  for (Subset z = 1; z <= all; ++z) {
    std::int64_t fixed_in = 0;
    for (auto [u, v] : mg.directed) fixed_in += Contains(z, v) && !Contains(z, u);
    std::int64_t crossing = 0;
    for (auto [u, v] : mg.undirected) crossing += Contains(z, u) != Contains(z, v);
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (int v = 0; v < mg.n; ++v) {
      if (!Contains(z, v)) continue;
      lo += db.lo[v];
      hi += db.hi[v];
    }
    const std::int64_t inside = Inside(mg, z);
    const std::int64_t max_in = std::min(fixed_in + crossing, hi - inside);
    const std::int64_t min_in = std::max(fixed_in, lo - inside);
    if (z != all && max_in < mg.k) {
      *reason = "at most " + std::to_string(max_in) + " arcs can enter the set";
      return z;
    }
    if (min_in > max_in) {
      *reason = "in-degree bounds cannot be met on the set";
      return z;
    }
  }
  *reason = "no admissible in-degree vector";
  return std::nullopt;
}

}  // namespace

void MixedGraph::Validate() const {
  if (n < 1 || 2 * n > kMaxNodes) throw InputError("mixed graph size out of range");
  if (k < 1) throw InputError("k must be at least 1");
  auto check = [&](const std::vector<std::pair<int, int>>& list) {
    for (auto [u, v] : list) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
      if (u == v) throw InputError("loops are not allowed");
    }
  };
  check(directed);
  check(undirected);
}

Encoding Encode(const MixedGraph& mg, const std::optional<DegreeBounds>& bounds,
                std::uint64_t budget) {
  mg.Validate();
  const int n = mg.n;
  const DegreeBounds db = EffectiveBounds(mg, bounds);
  Encoding enc;
  enc.graph = mg;

  // Admissible in-degree vectors: box, total, and d(Z) >= k + i(Z).
  std::uint64_t size = 1;
  for (int v = 0; v < n; ++v) {
    if (db.hi[v] < db.lo[v]) {
      size = 0;
      break;
    }
    std::uint64_t width = static_cast<std::uint64_t>(db.hi[v] - db.lo[v] + 1);
    if (size > budget / width) throw BudgetExceeded("in-degree box too large");
    size *= width;
  }
  const Subset all = FullSet(n);
  std::vector<std::int64_t> need(std::size_t{1} << n);
  for (Subset z = 1; z < all; ++z) need[z] = mg.k + Inside(mg, z);
  if (size > 0) {
    NodeVec d(db.lo.begin(), db.lo.end());
    for (;;) {
      std::int64_t sum = 0;
      for (std::int64_t v : d) sum += v;
      bool ok = sum == Total(mg);
      for (Subset z = 1; ok && z < all; ++z) {
        std::int64_t dz = 0;
        for (int v = 0; v < n; ++v) {
          if (Contains(z, v)) dz += d[v];
        }
        ok = dz >= need[z];
      }
      if (ok) enc.degree_points.push_back(d);
      int v = n - 1;
      while (v >= 0 && d[v] == db.hi[v]) {
        d[v] = db.lo[v];
        --v;
      }
      if (v < 0) break;
      ++d[v];
    }
  }

  Digraph dg(2 * n);
  Bounds b;
  for (auto [u, v] : mg.undirected) {
    dg.AddArc(u, v);
    b.f.push_back(0);
    b.g.push_back(1);
  }
  // The in-degree box is carried by B; the aux arc keeps the plain range.
  ArcSet F;
  for (int v = 0; v < n; ++v) {
    std::int64_t degree = 0;
    for (auto [a, c] : mg.directed) degree += (a == v) + (c == v);
    for (auto [a, c] : mg.undirected) degree += (a == v) + (c == v);
    F.push_back(dg.AddArc(n + v, v));
    b.f.push_back(0);
    b.g.push_back(degree);
  }
  enc.instance.digraph = dg;
  enc.instance.bounds = b;
  enc.instance.F = F;
  if (enc.degree_points.empty()) {
    enc.empty = true;
    enc.instance.base = BaseOracle::Zero(2 * n);
    return enc;
  }
  // psi(v) is pinned to the reference in-degree; psi(aux v) = -d(v).
  NodeVec pinned(n, 0);
  for (auto [u, v] : mg.directed) ++pinned[v];
  for (auto [u, v] : mg.undirected) ++pinned[v];
  std::vector<NodeVec> points;
  for (const NodeVec& d : enc.degree_points) {
    NodeVec y(2 * n);
    for (int v = 0; v < n; ++v) {
      y[v] = pinned[v];
      y[n + v] = -d[v];
    }
    points.push_back(y);
  }
  enc.instance.base = BaseOracle(EnvelopeFromPoints(2 * n, points));
  return enc;
}

Orientation Decode(const Encoding& enc, const ArcVec& x) {
  const MixedGraph& mg = enc.graph;
  Orientation o;
  o.indegree.assign(mg.n, 0);
  for (auto [u, v] : mg.directed) ++o.indegree[v];
  for (std::size_t i = 0; i < mg.undirected.size(); ++i) {
    auto [u, v] = mg.undirected[i];
    if (x[i] == 1) std::swap(u, v);
    o.arcs.push_back({u, v});
    ++o.indegree[v];
  }
  for (int v = 0; v < mg.n; ++v) {
    if (x[mg.undirected.size() + v] != o.indegree[v]) {
      throw CertificateMismatch("decode: auxiliary arc differs from in-degree");
    }
  }
  return o;
}

std::int64_t MinEnteringCut(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const Subset all = FullSet(n);
  for (Subset z = 1; z < all; ++z) {
    std::int64_t c = 0;
    for (auto [u, v] : arcs) c += Contains(z, v) && !Contains(z, u);
    best = std::min(best, c);
  }
  return best;
}

std::vector<OrientationRecord> BruteOrientations(const MixedGraph& mg) {
  mg.Validate();
  if (mg.undirected.size() > 20) throw BudgetExceeded("too many undirected edges");
  std::vector<OrientationRecord> out;
  const std::uint32_t count = std::uint32_t{1} << mg.undirected.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    OrientationRecord r;
    r.orientation.indegree.assign(mg.n, 0);
    std::vector<std::pair<int, int>> arcs = mg.directed;
    for (std::size_t i = 0; i < mg.undirected.size(); ++i) {
      auto [u, v] = mg.undirected[i];
      if ((mask >> i) & 1u) std::swap(u, v);
      r.orientation.arcs.push_back({u, v});
      arcs.push_back({u, v});
    }
    for (auto [u, v] : arcs) ++r.orientation.indegree[v];
    r.k_connected = MinEnteringCut(mg.n, arcs) >= mg.k;
    out.push_back(std::move(r));
  }
  return out;
}

OrientResult DecminOrientation(const MixedGraph& mg,
                               const std::optional<DegreeBounds>& bounds,
                               const std::optional<ArcVec>& cost) {
  Encoding enc = Encode(mg, bounds);
  OrientResult result;
  if (enc.empty) {
    result.violator = CutCertificate(mg, EffectiveBounds(mg, bounds), &result.reason);
    return result;
  }
  if (auto v = FirstViolator(enc.instance)) {
    const Subset all = FullSet(mg.n);
    result.violator = (v->first & all) | ((v->first >> mg.n) & all);
    result.reason = "no admissible in-degree vector is realizable";
    return result;
  }
  SolveResult solved = SolveDecmin(enc.instance);
  ArcVec x = solved.witness;
  if (cost) {
    if (cost->size() != mg.undirected.size()) {
      throw InputError("orientation cost needs one entry per undirected edge");
    }
    ArcVec full(enc.instance.m(), 0);
    std::copy(cost->begin(), cost->end(), full.begin());
    x = SolveMinCostDecmin(solved, full);
  }
  result.feasible = true;
  result.orientation = Decode(enc, x);
  return result;
}

}  // namespace fairflow
