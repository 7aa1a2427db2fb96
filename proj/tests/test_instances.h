#ifndef FAIRFLOW_TESTS_TEST_INSTANCES_H_
#define FAIRFLOW_TESTS_TEST_INSTANCES_H_

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <vector>

#include "fairflow/baseflow.h"
#include "fairflow/orient.h"

namespace fairflow::testing {

constexpr int kA = 0;
constexpr int kB = 1;
constexpr Subset kSetA = 1;
constexpr Subset kSetB = 2;

inline Instance MakeInstance(int n, std::vector<Arc> arcs,
                             std::vector<ExtInt> f, std::vector<ExtInt> g,
                             BaseOracle base, ArcSet F = {}) {
  Instance inst;
  inst.digraph = Digraph(n, std::move(arcs));
  inst.bounds = {std::move(f), std::move(g)};
  inst.base = std::move(base);
  inst.F = std::move(F);
  inst.Validate();
  return inst;
}

inline BaseOracle TableBase(int n, std::vector<ExtInt> table) {
  return BaseOracle(SetFn::FromTable(n, std::move(table)));
}

// e1 = a->b, e2 = b->a, f = 0, g = 2, B = {0}.
inline Instance I1(ArcSet F = {}) {
  return MakeInstance(2, {{kA, kB}, {kB, kA}}, {0, 0}, {2, 2},
                      BaseOracle::Zero(2), std::move(F));
}

// I1 with f(e2) = 1.
inline Instance I2(ArcSet F = {}) {
  return MakeInstance(2, {{kA, kB}, {kB, kA}}, {0, 1}, {2, 2},
                      BaseOracle::Zero(2), std::move(F));
}

// I1 with p({a}) = -3, p({b}) = 3: rho_g({b}) = 2 < 3.
inline Instance I1Infeasible() {
  return MakeInstance(2, {{kA, kB}, {kB, kA}}, {0, 0}, {2, 2},
                      TableBase(2, {0, -3, 3, 0}));
}

// e1 = a->b in F with f = -inf, g = 0; e2 = b->a with f = 0, g = +inf.
inline Instance I4() {
  return MakeInstance(2, {{kA, kB}, {kB, kA}}, {ExtInt::NegInf(), 0},
                      {0, ExtInt::PosInf()}, BaseOracle::Zero(2), {0});
}

// I4 with f(e2) = -inf as well.
inline Instance I4Prime() {
  return MakeInstance(2, {{kA, kB}, {kB, kA}},
                      {ExtInt::NegInf(), ExtInt::NegInf()},
                      {0, ExtInt::PosInf()}, BaseOracle::Zero(2), {0});
}

// Two arcs a->b with [0, 1]; p({a}) = -2, p({b}) = 2 forces x = (1, 1).
inline Instance I6(ArcSet F = {0, 1}) {
  return MakeInstance(2, {{kA, kB}, {kA, kB}}, {0, 0}, {1, 1},
                      TableBase(2, {0, -2, 2, 0}), std::move(F));
}

// The three-point base polyhedron {(1,-1), (0,0), (-1,1)} on (a, b).
inline std::vector<NodeVec> ThreePoints() {
  return {{1, -1}, {0, 0}, {-1, 1}};
}

// p(Z) = m~(Z) - rho_w(Z) + sum_S c_S [S subset of Z], shifted to p(V) = 0,
// and optionally -inf outside a random ring family.
inline SetFn RandomSupermodular(int n, std::mt19937_64& rng,
                                bool allow_neg_inf) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> weight(0, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  const Subset all = FullSet(n);
  std::vector<std::int64_t> m(n);
  for (auto& v : m) v = small(rng);
  std::vector<std::int64_t> table(std::size_t{1} << n, 0);
  std::vector<std::pair<Subset, int>> bonus;
  for (Subset s = 1; s <= all; ++s) {
    if (std::popcount(s) >= 2 && coin(rng) == 0) bonus.push_back({s, weight(rng)});
  }
  std::vector<std::array<int, 3>> cuts;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng) == 0) cuts.push_back({u, v, weight(rng)});
    }
  }
  for (Subset z = 0; z <= all; ++z) {
    std::int64_t val = 0;
    for (int v = 0; v < n; ++v) {
      if (Contains(z, v)) val += m[v];
    }
    for (auto [u, v, w] : cuts) {
      if (Contains(z, v) && !Contains(z, u)) val -= w;
    }
    for (auto [s, c] : bonus) {
      if (IsSubsetOf(s, z)) val += c;
    }
    table[z] = val;
  }
  const std::int64_t top = table[all];
  for (Subset z = 0; z <= all; ++z) {
    if (Contains(z, 0)) table[z] -= top;
  }
  std::vector<ExtInt> ext(table.begin(), table.end());
  if (allow_neg_inf && coin(rng) == 0) {
    // Ring family: Z closed under a few random implications u in Z => v in Z.
    std::vector<std::pair<int, int>> imp;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && coin(rng) == 0) imp.push_back({u, v});
      }
    }
    for (Subset z = 0; z <= all; ++z) {
      for (auto [u, v] : imp) {
        if (Contains(z, u) && !Contains(z, v)) ext[z] = ExtInt::NegInf();
      }
    }
  }
  return SetFn::FromTable(n, std::move(ext));
}

struct CorpusOptions {
  int min_nodes = 1;
  int max_nodes = 3;
  int max_arcs = 4;
  std::int64_t lo = -2;
  std::int64_t hi = 3;
  bool allow_neg_inf = true;
};

// Random bounds and base on a fixed digraph.
inline Instance RandomData(std::mt19937_64& rng, const Digraph& d,
                           const CorpusOptions& o) {
  std::uniform_int_distribution<std::int64_t> val(o.lo, o.hi);
  Instance inst;
  inst.digraph = d;
  for (int i = 0; i < d.arc_count(); ++i) {
    std::int64_t a = val(rng);
    std::int64_t b = val(rng);
    if (a > b) std::swap(a, b);
    inst.bounds.f.push_back(a);
    inst.bounds.g.push_back(b);
  }
  inst.base = BaseOracle(RandomSupermodular(d.node_count(), rng, o.allow_neg_inf));
  inst.Validate();
  return inst;
}

inline Instance RandomInstance(std::mt19937_64& rng, const CorpusOptions& o) {
  std::uniform_int_distribution<int> nodes(o.min_nodes, o.max_nodes);
  const int n = nodes(rng);
  std::uniform_int_distribution<int> arcs(0, n >= 2 ? o.max_arcs : 0);
  const int m = arcs(rng);
  std::uniform_int_distribution<int> node(0, n - 1);
  Digraph d(n);
  for (int i = 0; i < m; ++i) {
    int u = node(rng);
    int v = node(rng);
    while (v == u) v = node(rng);
    d.AddArc(u, v);
  }
  return RandomData(rng, d, o);
}

// Every loopless digraph on n nodes with at most max_arcs arcs, up to the
// order of the arcs (arc multisets).
inline std::vector<Digraph> AllDigraphs(int n, int max_arcs) {
  std::vector<Arc> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  std::vector<Digraph> out;
  std::vector<Arc> cur;
  auto rec = [&](auto& self, std::size_t from) -> void {
    out.push_back(Digraph(n, cur));
    if (static_cast<int>(cur.size()) == max_arcs) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      cur.push_back(pairs[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Every subset of the arcs, as sorted arc-id sets.
inline std::vector<ArcSet> AllArcSubsets(int m) {
  std::vector<ArcSet> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ArcSet s;
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1u) s.push_back(e);
    }
    out.push_back(s);
  }
  return out;
}

inline MixedGraph Triangle(int k = 1) {
  return {3, {}, {{0, 1}, {1, 2}, {2, 0}}, k};
}

inline MixedGraph Path3() { return {3, {}, {{0, 1}, {1, 2}}, 1}; }

inline MixedGraph Cycle4() { return {4, {}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 1}; }

inline MixedGraph K4() {
  return {4, {}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 1};
}

}  // namespace fairflow::testing

#endif  // FAIRFLOW_TESTS_TEST_INSTANCES_H_
