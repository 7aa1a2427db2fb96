#include "fairflow/baseflow.h"

#include <algorithm>
#include <string>

namespace fairflow {
namespace {

// Cut sums over one bound side, split into a finite part and a count of
// infinite terms, so single arcs can be taken out without inf - inf.
class CutSide {
 public:
  CutSide(const Digraph& d, const std::vector<ExtInt>& side, bool entering)
      : d_(d), entering_(entering) {
    std::size_t size = std::size_t{1} << d.node_count();
    fin_.assign(size, 0);
    inf_.assign(size, 0);
    for (int e = 0; e < d.arc_count(); ++e) Add(e, side[e], +1);
  }

  // Sum over the arcs crossing z in this side's direction, minus arc skip.
  ExtInt Sum(Subset z, ArcId skip, ExtInt skip_value) const {
    std::int64_t fin = fin_[z];
    int inf = inf_[z];
    if (skip >= 0 && Crosses(skip, z)) {
      if (skip_value.is_finite()) {
        fin -= skip_value.value();
      } else {
        --inf;
      }
    }
    if (inf > 0) return entering_ ? ExtInt::PosInf() : ExtInt::NegInf();
    return fin;
  }

  void Replace(ArcId e, ExtInt old_value, ExtInt new_value) {
    Add(e, old_value, -1);
    Add(e, new_value, +1);
  }

 private:
  bool Crosses(ArcId e, Subset z) const {
    return entering_ ? d_.Enters(e, z) : d_.Leaves(e, z);
  }

  void Add(ArcId e, ExtInt v, int sign) {
    for (Subset z = 0; z < fin_.size(); ++z) {
      if (!Crosses(e, z)) continue;
      if (v.is_finite()) {
        fin_[z] += sign * v.value();
      } else {
        inf_[z] += sign;
      }
    }
  }

  const Digraph& d_;
  bool entering_;
  std::vector<std::int64_t> fin_;
  std::vector<int> inf_;
};

// Reduced cost c(e) - (pi(head) - pi(tail)).
std::int64_t ReducedCost(const Digraph& d, const ArcVec& cost,
                         const NodeVec& pi, ArcId e) {
  return cost[e] - (pi[d.arc(e).head] - pi[d.arc(e).tail]);
}

}  // namespace

void Instance::Validate() const {
  bounds.Validate(m());
  if (base.n() != n()) throw InputError("base ground set differs from node set");
  for (ArcId e : F) {
    if (e < 0 || e >= m()) throw InputError("F contains an unknown arc");
  }
  if (!std::is_sorted(F.begin(), F.end()) ||
      std::adjacent_find(F.begin(), F.end()) != F.end()) {
    throw InputError("F must be sorted and duplicate-free");
  }
  if (cost && static_cast<int>(cost->size()) != m()) {
    throw InputError("cost size does not match arc count");
  }
}

ExtInt FeasibilitySlack(const Instance& inst, Subset z) {
  const Digraph& d = inst.digraph;
  return CutInSum(d, inst.bounds.g, z) - CutOutSum(d, inst.bounds.f, z) -
         inst.base(z);
}

std::optional<std::pair<Subset, ExtInt>> FirstViolator(const Instance& inst) {
  inst.Validate();
  const Subset all = inst.digraph.all();
  for (Subset z = 0; z <= all; ++z) {
    ExtInt slack = FeasibilitySlack(inst, z);
    if (slack < ExtInt(0)) return std::make_pair(z, slack);
  }
  return std::nullopt;
}

FeasCert CheckFeasible(const Instance& inst) {
  if (auto v = FirstViolator(inst)) {
    FeasCert cert;
    cert.violator = v->first;
    cert.deficit = v->second;
    return cert;
  }
  FeasCert cert;
  cert.feasible = true;
  cert.witness = FindFeasible(inst);
  return cert;
}

ArcVec FindFeasible(const Instance& inst) {
  if (auto v = FirstViolator(inst)) {
    throw InfeasibleError("base-flow polyhedron is empty", v->first, v->second);
  }
  const Digraph& d = inst.digraph;
  const Subset all = d.all();
  Bounds b = inst.bounds;
  CutSide in_g(d, b.g, true);
  CutSide out_f(d, b.f, false);
  ArcVec x(d.arc_count(), 0);
  // Fix arcs one at a time; the admissible values of arc e form the
  // projection of the current polyhedron onto e.
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    ExtInt lo = b.f[e];
    ExtInt hi = b.g[e];
    for (Subset z = 0; z <= all; ++z) {
      if (d.Enters(e, z)) {
        ExtInt need = inst.base(z) + out_f.Sum(z, -1, 0) - in_g.Sum(z, e, b.g[e]);
        lo = Max(lo, need);
      } else if (d.Leaves(e, z)) {
        ExtInt room = in_g.Sum(z, -1, 0) - out_f.Sum(z, e, b.f[e]) - inst.base(z);
        hi = Min(hi, room);
      }
    }
    if (hi < lo) {
      throw CertificateMismatch("find_feasible: empty projection on arc " +
                                std::to_string(e));
    }
    ExtInt v = Min(Max(ExtInt(0), lo), hi);
    in_g.Replace(e, b.g[e], v);
    out_f.Replace(e, b.f[e], v);
    b.f[e] = v;
    b.g[e] = v;
    x[e] = v.value();
  }
  return x;
}

bool IsFeasibleFlow(const Instance& inst, const ArcVec& x) {
  if (static_cast<int>(x.size()) != inst.m()) return false;
  for (int e = 0; e < inst.m(); ++e) {
    if (ExtInt(x[e]) < inst.bounds.f[e] || inst.bounds.g[e] < ExtInt(x[e])) {
      return false;
    }
  }
  return InBase(inst.base.effective(), NodeNetFlow(inst.digraph, x));
}

ExtInt ExchangeCapacity(const BaseOracle& b, const NodeVec& y, int s, int t) {
  if (s == t) throw InputError("exchange capacity needs s != t");
  if (s < 0 || t < 0 || s >= b.n() || t >= b.n()) {
    throw InputError("exchange capacity: node out of range");
  }
  if (!InBase(b.effective(), y)) throw InputError("exchange capacity: y not in B");
  SetFn slack(b.n(), [&](Subset z) {
    std::int64_t s_z = 0;
    for (int v = 0; v < b.n(); ++v) {
      if (Contains(z, v)) s_z += y[v];
    }
    return ExtInt(s_z) - b(z);
  });
  return BruteExtremize(slack, Sense::kMin, Family::Separating(s, t)).value;
}

ExtInt DualValue(const Instance& inst, const ArcVec& cost, const NodeVec& pi) {
  const Digraph& d = inst.digraph;
  const int n = d.node_count();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pi[a] > pi[b]; });
  ExtInt total = 0;
  Subset level = 0;
  for (int i = 0; i < n; ++i) {
    level |= Singleton(order[i]);
    if (i + 1 < n && pi[order[i]] != pi[order[i + 1]]) {
      total += Scale(pi[order[i]] - pi[order[i + 1]], inst.base(level));
    }
  }
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    std::int64_t r = ReducedCost(d, cost, pi, e);
    if (r > 0) {
      const ExtInt& f = inst.bounds.f[e];
      total += f.is_finite() ? ExtInt(r * f.value()) : ExtInt::NegInf();
    } else if (r < 0) {
      const ExtInt& g = inst.bounds.g[e];
      total += g.is_finite() ? ExtInt(r * g.value()) : ExtInt::NegInf();
    }
  }
  return total;
}

Chain LevelChain(const NodeVec& pi) {
  Chain chain;
  if (pi.empty()) return chain;
  std::int64_t lo = *std::min_element(pi.begin(), pi.end());
  std::vector<std::int64_t> values(pi.begin(), pi.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::int64_t threshold : values) {
    if (threshold == lo) break;
    Subset level = 0;
    for (std::size_t v = 0; v < pi.size(); ++v) {
      if (pi[v] >= threshold) level |= Singleton(static_cast<int>(v));
    }
    chain.push_back(level);
  }
  return chain;
}

MinCostResult MinCostFlow(const Instance& inst, const ArcVec& cost) {
  inst.Validate();
  const Digraph& d = inst.digraph;
  if (static_cast<int>(cost.size()) != d.arc_count()) {
    throw InputError("cost size does not match arc count");
  }
  // Also rejects an empty Q, where the dual would be unbounded above.
  FeasCert cert = CheckFeasible(inst);
  if (!cert.feasible) {
    throw InfeasibleError("base-flow polyhedron is empty", cert.violator,
                          cert.deficit);
  }
  MinCostResult result;
  const int n = d.node_count();
  bool all_tight = true;
  for (int e = 0; e < d.arc_count(); ++e) all_tight &= inst.bounds.IsTight(e);
  if (all_tight) {
    result.x = cert.witness;
    result.potential.assign(n, 0);
    for (int e = 0; e < d.arc_count(); ++e) result.cost += cost[e] * result.x[e];
    return result;
  }

  NodeVec pi(n, 0);
  ExtInt value = DualValue(inst, cost, pi);
  if (!value.is_finite()) {
    throw InputError("nonzero cost on an arc with an infinite bound");
  }
  const Subset all = d.all();
  for (;;) {
    ExtInt best = value;
    Subset best_move = 0;
    NodeVec trial = pi;
    for (Subset z = 1; z < all; ++z) {
      for (int v = 0; v < n; ++v) trial[v] = pi[v] + (Contains(z, v) ? 1 : 0);
      ExtInt v = DualValue(inst, cost, trial);
      if (best < v) {
        best = v;
        best_move = z;
      }
    }
    if (best_move == 0) break;
    for (int v = 0; v < n; ++v) pi[v] += Contains(best_move, v) ? 1 : 0;
    value = best;
    ++result.steps;
  }
  std::int64_t lo = *std::min_element(pi.begin(), pi.end());
  for (std::int64_t& v : pi) v -= lo;

  Instance primal = inst;
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    std::int64_t r = ReducedCost(d, cost, pi, e);
    if (r > 0) primal.bounds.g[e] = primal.bounds.f[e];
    if (r < 0) primal.bounds.f[e] = primal.bounds.g[e];
  }
  primal.base = FaceContract(inst.base, LevelChain(pi));
  try {
    result.x = FindFeasible(primal);
  } catch (const InfeasibleError&) {
    throw CertificateMismatch("min_cost_flow: complementary slackness system is empty");
  }
  for (int e = 0; e < d.arc_count(); ++e) result.cost += cost[e] * result.x[e];
  if (ExtInt(result.cost) != value) {
    throw CertificateMismatch("min_cost_flow: primal " + std::to_string(result.cost) +
                              " differs from dual " + value.ToString());
  }
  result.potential = pi;
  return result;
}

}  // namespace fairflow
