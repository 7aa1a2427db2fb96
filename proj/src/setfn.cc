#include "fairflow/setfn.h"

#include <stdexcept>
#include <utility>

namespace fairflow {
namespace {

void CheckGround(int n) {
  if (n < 0 || n > kMaxNodes) throw InputError("ground set too large");
}

// a + b <= c + d for values without +inf on either side.
bool SupermodularPairHolds(ExtInt a, ExtInt b, ExtInt c, ExtInt d) {
  return a + b <= c + d;
}

PairCheck ScanPairs(const SetFn& p, bool submodular,
                    const std::function<bool(Subset, Subset)>& admit) {
  const std::vector<ExtInt>& t = p.table();
  for (ExtInt v : t) {
    if (submodular ? v.is_neg_inf() : v.is_pos_inf()) {
      throw InputError(submodular ? "submodular function takes -inf"
                                  : "supermodular function takes +inf");
    }
  }
  const Subset all = p.ground();
  for (Subset x = 0; x <= all; ++x) {
    for (Subset y = x + 1; y <= all; ++y) {
      if (!admit(x, y)) continue;
      bool holds = submodular
                       ? SupermodularPairHolds(-t[x], -t[y], -t[x & y], -t[x | y])
                       : SupermodularPairHolds(t[x], t[y], t[x & y], t[x | y]);
      if (!holds) return {false, x, y};
    }
  }
  return {};
}

}  // namespace

SetFn::SetFn(int n, Eval eval) : n_(n), eval_(std::move(eval)) {
  CheckGround(n);
}

SetFn SetFn::FromTable(int n, std::vector<ExtInt> table) {
  CheckGround(n);
  if (table.size() != (std::size_t{1} << n)) {
    throw InputError("set function table has wrong size");
  }
  SetFn fn;
  fn.n_ = n;
  fn.table_ = std::make_shared<const std::vector<ExtInt>>(std::move(table));
  return fn;
}

SetFn SetFn::Zero(int n) {
  return FromTable(n, std::vector<ExtInt>(std::size_t{1} << n, ExtInt(0)));
}

SetFn SetFn::Modular(const NodeVec& x) {
  int n = static_cast<int>(x.size());
  CheckGround(n);
  std::vector<ExtInt> t(std::size_t{1} << n);
  for (Subset z = 1; z < t.size(); ++z) {
    int v = __builtin_ctz(z);
    t[z] = t[z & (z - 1)] + x[v];
  }
  return FromTable(n, std::move(t));
}

const std::vector<ExtInt>& SetFn::table() const {
  if (!table_) throw InputError("set function has no dense table");
  return *table_;
}

SetFn SetFn::Tabulated() const {
  if (table_) return *this;
  std::vector<ExtInt> t(std::size_t{1} << n_);
  for (Subset z = 0; z < t.size(); ++z) t[z] = eval_(z);
  return FromTable(n_, std::move(t));
}

PairCheck CheckFullySupermodular(const SetFn& p) {
  return ScanPairs(p, false, [](Subset, Subset) { return true; });
}

PairCheck CheckIntersectingSupermodular(const SetFn& p) {
  return ScanPairs(p, false,
                   [](Subset x, Subset y) { return (x & y) != 0; });
}

PairCheck CheckCrossingSupermodular(const SetFn& p) {
  const Subset all = p.ground();
  return ScanPairs(p, false, [all](Subset x, Subset y) {
    return (x & y) != 0 && (x | y) != all;
  });
}

PairCheck CheckFullySubmodular(const SetFn& b) {
  return ScanPairs(b, true, [](Subset, Subset) { return true; });
}

SetFn Complement(const SetFn& p) {
  const Subset all = p.ground();
  ExtInt total = p(all);
  if (!total.is_finite()) throw InputError("complement needs finite p(V)");
  std::vector<ExtInt> t(std::size_t{1} << p.n());
  for (Subset z = 0; z <= all; ++z) t[z] = total - p(all & ~z);
  return SetFn::FromTable(p.n(), std::move(t));
}

SetFn CutDifference(const Digraph& d, const Bounds& bounds) {
  bounds.Validate(d.arc_count());
  std::vector<ExtInt> t(std::size_t{1} << d.node_count());
  for (Subset z = 0; z < t.size(); ++z) {
    t[z] = CutInSum(d, bounds.g, z) - CutOutSum(d, bounds.f, z);
  }
  return SetFn::FromTable(d.node_count(), std::move(t));
}

bool Family::Admits(Subset z, Subset all) const {
  switch (kind) {
    case Kind::kAll:
      return true;
    case Kind::kNonemptyProper:
      return z != 0 && z != all;
    case Kind::kSeparating:
      return Contains(z, s) && !Contains(z, t);
  }
  return false;
}

Extremum BruteExtremize(const SetFn& h, Sense sense, Family family) {
  if (family.kind == Family::Kind::kSeparating &&
      (family.s < 0 || family.t < 0 || family.s >= h.n() ||
       family.t >= h.n() || family.s == family.t)) {
    throw InputError("separating family needs distinct nodes s, t");
  }
  const Subset all = h.ground();
  Extremum best;
  for (Subset z = 0;; ++z) {
    if (family.Admits(z, all)) {
      ExtInt v = h(z);
      bool better = !best.found ||
                    (sense == Sense::kMax ? best.value < v : v < best.value);
      if (better) best = {v, z, true};
    }
    if (z == all) break;
  }
  return best;
}

ExtInt EnvelopeValue(const std::vector<NodeVec>& points, Subset z) {
  if (points.empty()) throw InputError("envelope of an empty point set");
  std::int64_t best = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < points[i].size(); ++v) {
      if (Contains(z, static_cast<int>(v))) s += points[i][v];
    }
    if (i == 0 || s < best) best = s;
  }
  return best;
}

SetFn EnvelopeFromPoints(int n, const std::vector<NodeVec>& points) {
  if (points.empty()) throw InputError("envelope of an empty point set");
  for (const NodeVec& x : points) {
    if (static_cast<int>(x.size()) != n) {
      throw InputError("point dimension does not match node count");
    }
  }
  std::vector<ExtInt> t(std::size_t{1} << n);
  std::vector<std::int64_t> best(t.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Subset sums by lowest-bit recursion.
    std::vector<std::int64_t> sums(t.size(), 0);
    for (Subset z = 1; z < t.size(); ++z) {
      sums[z] = sums[z & (z - 1)] + points[i][__builtin_ctz(z)];
    }
    for (Subset z = 0; z < t.size(); ++z) {
      if (i == 0 || sums[z] < best[z]) best[z] = sums[z];
    }
  }
  for (Subset z = 0; z < t.size(); ++z) t[z] = best[z];
  return SetFn::FromTable(n, std::move(t));
}

BaseOracle::BaseOracle(const SetFn& p) : original_(p.Tabulated()) {
  const Subset all = original_.ground();
  if (original_(0) != ExtInt(0)) throw InputError("p(empty) must be 0");
  if (original_(all) != ExtInt(0)) throw InputError("p(V) must be 0");
  for (ExtInt v : original_.table()) {
    if (v.is_pos_inf()) throw InputError("p takes +inf");
  }
  effective_ = original_;
}

BaseOracle BaseOracle::Zero(int n) { return BaseOracle(SetFn::Zero(n)); }

BaseOracle FaceContract(const BaseOracle& b, const Chain& chain) {
  const int n = b.n();
  ValidateChain(chain, n);
  BaseOracle out = b;
  if (chain.empty()) return out;
  const Subset all = FullSet(n);
  Chain levels;
  levels.push_back(0);
  for (Subset c : chain) {
    if (!b(c).is_finite()) throw InputError("face chain member has infinite p");
    levels.push_back(c);
  }
  levels.push_back(all);
  std::vector<ExtInt> t(std::size_t{1} << n);
  for (Subset z = 0; z <= all; ++z) {
    ExtInt s = 0;
    for (std::size_t i = 1; i < levels.size(); ++i) {
      Subset prev = levels[i - 1];
      Subset part = z & levels[i] & ~prev;
      s += b(prev | part) - b(prev);
    }
    t[z] = s;
  }
  out.effective_ = SetFn::FromTable(n, std::move(t));
  out.faces_.push_back(chain);
  return out;
}

bool InBase(const SetFn& p, const NodeVec& y) {
  if (static_cast<int>(y.size()) != p.n()) return false;
  const Subset all = p.ground();
  std::vector<std::int64_t> sums(std::size_t{1} << p.n(), 0);
  for (Subset z = 1; z <= all; ++z) {
    sums[z] = sums[z & (z - 1)] + y[__builtin_ctz(z)];
  }
  if (ExtInt(sums[all]) != p(all)) return false;
  for (Subset z = 0; z <= all; ++z) {
    if (ExtInt(sums[z]) < p(z)) return false;
  }
  return true;
}

}  // namespace fairflow
