#ifndef FAIRFLOW_ORACLE_H_
#define FAIRFLOW_ORACLE_H_

// Brute-force references. Nothing here calls into the engine modules.

#include <cstdint>
#include <vector>

#include "fairflow/baseflow.h"

namespace fairflow::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Per-arc finite integer interval.
struct EnumWindow {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
};

// Finite bounds are kept; an infinite side is replaced by clip_lo / clip_hi.
EnumWindow WindowFromBounds(const Bounds& b, std::int64_t clip_lo,
                            std::int64_t clip_hi);
// [c - r, c + r] intersected with the bounds.
EnumWindow WindowAround(const ArcVec& center, std::int64_t radius,
                        const Bounds& b);

// All integral points of Q inside the window, in lexicographic order.
// Throws BudgetExceeded if the window holds more than budget vectors.
std::vector<ArcVec> EnumerateQ(const Instance& inst, const EnumWindow& window,
                               std::uint64_t budget = kDefaultBudget);

// Direct membership test of Q, independent of the engine.
bool InQ(const Instance& inst, const ArcVec& x);

// Sorted non-increasing values of x on F.
std::vector<std::int64_t> Profile(const ArcVec& x, const ArcSet& F);

// The points whose F-profile is lexicographically smallest.
std::vector<ArcVec> BruteDecmin(const std::vector<ArcVec>& points,
                                const ArcSet& F);

std::int64_t SaturatedCount(const ArcVec& x, const Bounds& b, const ArcSet& L);
std::int64_t BruteLupmin(const std::vector<ArcVec>& points, const Bounds& b,
                         const ArcSet& L);
std::vector<ArcVec> BruteLupminimizers(const std::vector<ArcVec>& points,
                                       const Bounds& b, const ArcSet& L);

// The chain objective; -inf for chains that are not feasible.
ExtInt ChainObjective(const Instance& inst, const ArcSet& L,
                      const std::vector<Subset>& chain);
// Every strictly nested family of nonempty proper subsets (n <= 5).
std::vector<std::vector<Subset>> AllChains(int n);

struct ChainMax {
  ExtInt value;
  std::vector<Subset> chain;
};
ChainMax BruteChainMax(const Instance& inst, const ArcSet& L);

// min over points of max over F.
std::int64_t BruteBeta(const std::vector<ArcVec>& points, const ArcSet& F);

// Minimizers of sum over F of |F|^(z(e) - minval), base 2 when |F| <= 1.
std::vector<ArcVec> ConvexCostMin(const std::vector<ArcVec>& points,
                                  const ArcSet& F);

std::int64_t Cost(const ArcVec& x, const ArcVec& cost);
std::int64_t BruteMinCost(const std::vector<ArcVec>& points,
                          const ArcVec& cost);

}  // namespace fairflow::oracle

#endif  // FAIRFLOW_ORACLE_H_
