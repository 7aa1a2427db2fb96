#include "fairflow/oracle.h"

#include <algorithm>
#include <functional>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairflow::oracle {
namespace {

bool InSet(Subset z, int v) { return (z >> v) & 1u; }

bool BaseHolds(const Instance& inst, const ArcVec& x) {
  const int n = inst.digraph.node_count();
  std::vector<std::int64_t> psi(n, 0);
  for (int e = 0; e < inst.digraph.arc_count(); ++e) {
    psi[inst.digraph.arc(e).head] += x[e];
    psi[inst.digraph.arc(e).tail] -= x[e];
  }
  const Subset limit = Subset{1} << n;
  for (Subset z = 0; z < limit; ++z) {
    std::int64_t s = 0;
    for (int v = 0; v < n; ++v) {
      if (InSet(z, v)) s += psi[v];
    }
    if (z == limit - 1 && s != 0) return false;
    if (ExtInt(s) < inst.base(z)) return false;
  }
  return true;
}

void ExtendChains(int n, std::vector<Subset>& cur,
                  std::vector<std::vector<Subset>>& out) {
  out.push_back(cur);
  const Subset all = (Subset{1} << n) - 1;
  const Subset last = cur.empty() ? 0 : cur.back();
  for (Subset z = 1; z < all; ++z) {
    if (z == last || (last & ~z) != 0) continue;
    cur.push_back(z);
    ExtendChains(n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

EnumWindow WindowFromBounds(const Bounds& b, std::int64_t clip_lo,
                            std::int64_t clip_hi) {
  EnumWindow w;
  for (std::size_t e = 0; e < b.f.size(); ++e) {
    w.lo.push_back(b.f[e].is_finite() ? b.f[e].value() : clip_lo);
    w.hi.push_back(b.g[e].is_finite() ? b.g[e].value() : clip_hi);
  }
  return w;
}

EnumWindow WindowAround(const ArcVec& center, std::int64_t radius,
                        const Bounds& b) {
  EnumWindow w;
  for (std::size_t e = 0; e < center.size(); ++e) {
    std::int64_t lo = center[e] - radius;
    std::int64_t hi = center[e] + radius;
    if (b.f[e].is_finite()) lo = std::max(lo, b.f[e].value());
    if (b.g[e].is_finite()) hi = std::min(hi, b.g[e].value());
    w.lo.push_back(lo);
    w.hi.push_back(hi);
  }
  return w;
}

bool InQ(const Instance& inst, const ArcVec& x) {
  if (static_cast<int>(x.size()) != inst.digraph.arc_count()) return false;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (ExtInt(x[e]) < inst.bounds.f[e] || inst.bounds.g[e] < ExtInt(x[e])) {
      return false;
    }
  }
  return BaseHolds(inst, x);
}

std::vector<ArcVec> EnumerateQ(const Instance& inst, const EnumWindow& window,
                               std::uint64_t budget) {
  const int m = inst.digraph.arc_count();
  std::uint64_t size = 1;
  for (int e = 0; e < m; ++e) {
    if (window.hi[e] < window.lo[e]) return {};
    std::uint64_t width = static_cast<std::uint64_t>(window.hi[e] - window.lo[e]) + 1;
    if (size > budget / width) throw BudgetExceeded("enumeration window too large");
    size *= width;
  }
  std::vector<ArcVec> out;
  ArcVec x(window.lo);
  for (;;) {
    if (InQ(inst, x)) out.push_back(x);
    int e = m - 1;
    while (e >= 0 && x[e] == window.hi[e]) {
      x[e] = window.lo[e];
      --e;
    }
    if (e < 0) break;
    ++x[e];
  }
  return out;
}

std::vector<std::int64_t> Profile(const ArcVec& x, const ArcSet& F) {
  std::vector<std::int64_t> p;
  for (ArcId e : F) p.push_back(x[e]);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

std::vector<ArcVec> BruteDecmin(const std::vector<ArcVec>& points,
                                const ArcSet& F) {
  if (points.empty()) throw InputError("brute_decmin: no points");
  std::vector<std::int64_t> best = Profile(points[0], F);
  for (const ArcVec& x : points) best = std::min(best, Profile(x, F));
  std::vector<ArcVec> out;
  for (const ArcVec& x : points) {
    if (Profile(x, F) == best) out.push_back(x);
  }
  return out;
}

std::int64_t SaturatedCount(const ArcVec& x, const Bounds& b, const ArcSet& L) {
  std::int64_t c = 0;
  for (ArcId e : L) c += ExtInt(x[e]) == b.g[e];
  return c;
}

std::int64_t BruteLupmin(const std::vector<ArcVec>& points, const Bounds& b,
                         const ArcSet& L) {
  if (points.empty()) throw InputError("brute_lupmin: no points");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const ArcVec& x : points) best = std::min(best, SaturatedCount(x, b, L));
  return best;
}

std::vector<ArcVec> BruteLupminimizers(const std::vector<ArcVec>& points,
                                       const Bounds& b, const ArcSet& L) {
  const std::int64_t best = BruteLupmin(points, b, L);
  std::vector<ArcVec> out;
  for (const ArcVec& x : points) {
    if (SaturatedCount(x, b, L) == best) out.push_back(x);
  }
  return out;
}

ExtInt ChainObjective(const Instance& inst, const ArcSet& L,
                      const std::vector<Subset>& chain) {
  const Digraph& d = inst.digraph;
  auto enters = [&](int e, Subset z) {
    return InSet(z, d.arc(e).head) && !InSet(z, d.arc(e).tail);
  };
  std::int64_t entering = 0;
  for (ArcId e : L) {
    bool hit = false;
    for (Subset c : chain) hit |= enters(e, c);
    entering += hit;
  }
  ExtInt total = entering;
  for (Subset c : chain) {
    ExtInt in_g = 0;
    ExtInt out_f = 0;
    for (int e = 0; e < d.arc_count(); ++e) {
      if (enters(e, c)) in_g += inst.bounds.g[e];
      if (InSet(c, d.arc(e).tail) && !InSet(c, d.arc(e).head)) {
        out_f += inst.bounds.f[e];
      }
    }
    ExtInt bracket = in_g - out_f - inst.base(c);
    if (!bracket.is_finite()) return ExtInt::NegInf();
    total -= bracket;
  }
  return total;
}

std::vector<std::vector<Subset>> AllChains(int n) {
  if (n > 5) throw InputError("chain enumeration limited to 5 nodes");
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> cur;
  ExtendChains(n, cur, out);
  return out;
}

ChainMax BruteChainMax(const Instance& inst, const ArcSet& L) {
  ChainMax best{ExtInt::NegInf(), {}};
  for (const auto& chain : AllChains(inst.digraph.node_count())) {
    ExtInt v = ChainObjective(inst, L, chain);
    if (best.value < v) best = {v, chain};
  }
  return best;
}

std::int64_t BruteBeta(const std::vector<ArcVec>& points, const ArcSet& F) {
  if (points.empty() || F.empty()) throw InputError("brute_beta: empty input");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const ArcVec& x : points) {
    std::int64_t top = std::numeric_limits<std::int64_t>::min();
    for (ArcId e : F) top = std::max(top, x[e]);
    best = std::min(best, top);
  }
  return best;
}

std::vector<ArcVec> ConvexCostMin(const std::vector<ArcVec>& points,
                                  const ArcSet& F) {
  using boost::multiprecision::cpp_int;
  if (points.empty()) throw InputError("convex_cost_min: no points");
  std::int64_t minval = std::numeric_limits<std::int64_t>::max();
  for (const ArcVec& x : points) {
    for (ArcId e : F) minval = std::min(minval, x[e]);
  }
  const unsigned base = F.size() <= 1 ? 2 : static_cast<unsigned>(F.size());
  std::vector<cpp_int> costs;
  for (const ArcVec& x : points) {
    cpp_int c = 0;
    for (ArcId e : F) {
      c += boost::multiprecision::pow(cpp_int(base),
                                      static_cast<unsigned>(x[e] - minval));
    }
    costs.push_back(c);
  }
  const cpp_int best = *std::min_element(costs.begin(), costs.end());
  std::vector<ArcVec> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (costs[i] == best) out.push_back(points[i]);
  }
  return out;
}

std::int64_t Cost(const ArcVec& x, const ArcVec& cost) {
  std::int64_t c = 0;
  for (std::size_t e = 0; e < x.size(); ++e) c += cost[e] * x[e];
  return c;
}

std::int64_t BruteMinCost(const std::vector<ArcVec>& points,
                          const ArcVec& cost) {
  if (points.empty()) throw InputError("brute_min_cost: no points");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const ArcVec& x : points) best = std::min(best, Cost(x, cost));
  return best;
}

}  // namespace fairflow::oracle
