#include <gtest/gtest.h>

#include <random>

#include "fairflow/core.h"
#include "fairflow/oracle.h"
#include "fairflow/orient.h"
#include "test_instances.h"

namespace fairflow {
namespace {

namespace orc = oracle;

std::vector<std::int64_t> SortedDesc(std::vector<std::int64_t> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

std::optional<std::vector<std::int64_t>> BestProfile(const MixedGraph& mg) {
  std::optional<std::vector<std::int64_t>> best;
  for (const OrientationRecord& r : BruteOrientations(mg)) {
    if (!r.k_connected) continue;
    auto p = SortedDesc(r.orientation.indegree);
    if (!best || p < *best) best = p;
  }
  return best;
}

TEST(BruteOrientations, Triangle) {
  auto all = BruteOrientations(testing::Triangle());
  EXPECT_EQ(all.size(), 8u);
  int strong = 0;
  for (const auto& r : all) {
    if (!r.k_connected) continue;
    ++strong;
    EXPECT_EQ(r.orientation.indegree, (std::vector<std::int64_t>{1, 1, 1}));
  }
  EXPECT_EQ(strong, 2);
}

TEST(BruteOrientations, SingleEdgeAndFixedArcs) {
  for (const auto& r : BruteOrientations({2, {}, {{0, 1}}, 1})) EXPECT_FALSE(r.k_connected);
  auto fixed = BruteOrientations({2, {{0, 1}, {1, 0}}, {}, 1});
  ASSERT_EQ(fixed.size(), 1u);
  EXPECT_TRUE(fixed[0].k_connected);
  EXPECT_EQ(fixed[0].orientation.indegree, (std::vector<std::int64_t>{1, 1}));
}

TEST(MinEnteringCut, Examples) {
  EXPECT_EQ(MinEnteringCut(3, {{0, 1}, {1, 2}, {2, 0}}), 1);
  EXPECT_EQ(MinEnteringCut(3, {{0, 1}, {1, 2}}), 0);
}

TEST(Encode, TriangleBijection) {
  Encoding enc = Encode(testing::Triangle());
  ASSERT_FALSE(enc.empty);
  EXPECT_EQ(enc.instance.n(), 6);
  EXPECT_EQ(enc.instance.F, (ArcSet{3, 4, 5}));
  const auto pts = orc::EnumerateQ(enc.instance,
                                   orc::WindowFromBounds(enc.instance.bounds, 0, 0));
  EXPECT_EQ(pts.size(), 2u);
  for (const ArcVec& x : pts) {
    Orientation o = Decode(enc, x);
    EXPECT_EQ(MinEnteringCut(3, o.arcs), 1);
  }
}

TEST(DecminOrientation, Examples) {
  OrientResult t = DecminOrientation(testing::Triangle());
  ASSERT_TRUE(t.feasible);
  EXPECT_EQ(t.orientation.indegree, (std::vector<std::int64_t>{1, 1, 1}));

  EXPECT_FALSE(DecminOrientation(testing::Path3()).feasible);

  OrientResult c4 = DecminOrientation(testing::Cycle4());
  ASSERT_TRUE(c4.feasible);
  EXPECT_EQ(c4.orientation.indegree, (std::vector<std::int64_t>{1, 1, 1, 1}));

  OrientResult k4 = DecminOrientation(testing::K4());
  ASSERT_TRUE(k4.feasible);
  EXPECT_EQ(SortedDesc(k4.orientation.indegree), (std::vector<std::int64_t>{2, 2, 1, 1}));
  EXPECT_GE(MinEnteringCut(4, k4.orientation.arcs), 1);
}

TEST(DecminOrientation, DegreeBoundInfeasible) {
  DegreeBounds db{{0, 0, 0}, {0, 5, 5}};
  OrientResult r = DecminOrientation(testing::Triangle(), db);
  EXPECT_FALSE(r.feasible);
  ASSERT_TRUE(r.violator.has_value());
  EXPECT_EQ(*r.violator, Subset{1});
}

TEST(DecminOrientation, CostPicksCheaperOrientation) {
  // Both strong orientations of the triangle are dec-min; charging flips
  // makes the reference direction the only cheapest one.
  OrientResult r = DecminOrientation(testing::Triangle(), std::nullopt, ArcVec{1, 1, 1});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.orientation.arcs, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(MixedGraph, Validate) {
  EXPECT_THROW((MixedGraph{0, {}, {}, 1}).Validate(), InputError);
  EXPECT_THROW((MixedGraph{2, {}, {{0, 0}}, 1}).Validate(), InputError);
  EXPECT_THROW((MixedGraph{2, {}, {{0, 2}}, 1}).Validate(), InputError);
  EXPECT_THROW((MixedGraph{2, {}, {{0, 1}}, 0}).Validate(), InputError);
}

class OrientProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{29};
};

TEST_F(OrientProperties, MatchesBruteForce) {
  int feasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    MixedGraph mg;
    mg.n = 2 + static_cast<int>(rng() % 3);
    mg.k = 1 + static_cast<int>(rng() % 2);
    const int edges = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < edges; ++i) {
      int u = static_cast<int>(rng() % mg.n);
      int v = static_cast<int>(rng() % mg.n);
      if (u == v) v = (u + 1) % mg.n;
      if (rng() % 4 == 0) {
        mg.directed.push_back({u, v});
      } else {
        mg.undirected.push_back({u, v});
      }
    }
    auto want = BestProfile(mg);
    OrientResult r = DecminOrientation(mg);
    EXPECT_EQ(r.feasible, want.has_value());
    if (!r.feasible) continue;
    ++feasible;
    EXPECT_EQ(SortedDesc(r.orientation.indegree), *want);
    std::vector<std::pair<int, int>> arcs = mg.directed;
    arcs.insert(arcs.end(), r.orientation.arcs.begin(), r.orientation.arcs.end());
    EXPECT_GE(MinEnteringCut(mg.n, arcs), mg.k);
  }
  EXPECT_GT(feasible, 20);
}

}  // namespace
}  // namespace fairflow
