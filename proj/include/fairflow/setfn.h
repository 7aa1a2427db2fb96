#ifndef FAIRFLOW_SETFN_H_
#define FAIRFLOW_SETFN_H_

#include <functional>
#include <memory>
#include <vector>

#include "fairflow/core.h"

namespace fairflow {

// A set function on the subsets of {0..n-1}, evaluated through an oracle and
// optionally backed by a dense table of 2^n values.
class SetFn {
 public:
  using Eval = std::function<ExtInt(Subset)>;

  SetFn() = default;
  SetFn(int n, Eval eval);

  static SetFn FromTable(int n, std::vector<ExtInt> table);
  static SetFn Zero(int n);
  // x~(Z) for a node vector x.
  static SetFn Modular(const NodeVec& x);

  int n() const { return n_; }
  Subset ground() const { return FullSet(n_); }
  ExtInt operator()(Subset z) const {
    return table_ ? (*table_)[z] : eval_(z);
  }
  bool has_table() const { return table_ != nullptr; }
  // Throws InputError if no table.
  const std::vector<ExtInt>& table() const;
  SetFn Tabulated() const;

 private:
  int n_ = 0;
  Eval eval_;
  std::shared_ptr<const std::vector<ExtInt>> table_;
};

struct PairCheck {
  bool ok = true;
  Subset x = 0;
  Subset y = 0;
};

// Exhaustive over all pairs (or restricted pair families). Need a table.
PairCheck CheckFullySupermodular(const SetFn& p);
PairCheck CheckIntersectingSupermodular(const SetFn& p);
PairCheck CheckCrossingSupermodular(const SetFn& p);
PairCheck CheckFullySubmodular(const SetFn& b);

// p-bar(X) = p(V) - p(V - X). Throws InputError if p(V) is infinite.
SetFn Complement(const SetFn& p);

// Z -> rho_g(Z) - delta_f(Z).
SetFn CutDifference(const Digraph& d, const Bounds& bounds);

enum class Sense { kMax, kMin };

struct Family {
  enum class Kind { kAll, kNonemptyProper, kSeparating };
  Kind kind = Kind::kAll;
  int s = -1;  // kSeparating: s in Z, t not in Z.
  int t = -1;

  static Family All() { return {}; }
  static Family NonemptyProper() { return {Kind::kNonemptyProper, -1, -1}; }
  static Family Separating(int s, int t) { return {Kind::kSeparating, s, t}; }
  bool Admits(Subset z, Subset all) const;
};

struct Extremum {
  ExtInt value;
  Subset arg = 0;
  bool found = false;  // false only if the family is empty.
};

// Exhaustive scan in increasing mask order; the smallest mask wins ties.
Extremum BruteExtremize(const SetFn& h, Sense sense,
                        Family family = Family::All());

// min over points of x~(Z). Throws InputError on an empty list.
ExtInt EnvelopeValue(const std::vector<NodeVec>& points, Subset z);
SetFn EnvelopeFromPoints(int n, const std::vector<NodeVec>& points);

// A 0-base-polyhedron B'(p) with a stack of face contractions applied.
class BaseOracle {
 public:
  BaseOracle() = default;
  // Tabulates p. Throws InputError unless p(empty) = 0 and p(V) = 0 and
  // p never takes +inf.
  explicit BaseOracle(const SetFn& p);

  static BaseOracle Zero(int n);

  int n() const { return effective_.n(); }
  ExtInt operator()(Subset z) const { return effective_(z); }
  const SetFn& original() const { return original_; }
  const SetFn& effective() const { return effective_; }
  const std::vector<Chain>& faces() const { return faces_; }

  friend BaseOracle FaceContract(const BaseOracle& b, const Chain& chain);

 private:
  SetFn original_;
  SetFn effective_;
  std::vector<Chain> faces_;
};

// The face of B tight on every chain member. Throws InputError if some p(C)
// is infinite.
BaseOracle FaceContract(const BaseOracle& b, const Chain& chain);

// y in B'(p): y~(Z) >= p(Z) for all Z and y~(V) = p(V).
bool InBase(const SetFn& p, const NodeVec& y);

}  // namespace fairflow

#endif  // FAIRFLOW_SETFN_H_
