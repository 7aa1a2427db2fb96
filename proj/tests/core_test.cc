#include <gtest/gtest.h>

#include <random>

#include "fairflow/core.h"
#include "test_instances.h"

namespace fairflow {
namespace {

using testing::kA;
using testing::kB;

TEST(ExtInt, OrderAndAbsorption) {
  EXPECT_LT(ExtInt::NegInf(), ExtInt(-1000000));
  EXPECT_LT(ExtInt(1000000), ExtInt::PosInf());
  EXPECT_EQ(ExtInt(3) + ExtInt::PosInf(), ExtInt::PosInf());
  EXPECT_EQ(ExtInt(3) - ExtInt::PosInf(), ExtInt::NegInf());
  EXPECT_EQ(ExtInt(3) + ExtInt(-5), ExtInt(-2));
  EXPECT_EQ(Scale(0, ExtInt::PosInf()), ExtInt(0));
  EXPECT_EQ(Scale(3, ExtInt(4)), ExtInt(12));
  EXPECT_EQ(ExtInt::NegInf().ToString(), "-inf");
}

TEST(ExtInt, MixedInfinitiesRejected) {
  EXPECT_THROW(ExtInt::NegInf() + ExtInt::PosInf(), std::domain_error);
  EXPECT_THROW(ExtInt::PosInf() - ExtInt::PosInf(), std::domain_error);
  EXPECT_THROW(ExtInt::PosInf().value(), std::domain_error);
}

TEST(Digraph, RejectsLoopsKeepsParallelArcs) {
  EXPECT_THROW(Digraph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Digraph(0), InputError);
  Digraph d(2, {{kA, kB}, {kA, kB}});
  EXPECT_EQ(d.arc_count(), 2);
  EXPECT_TRUE(d.Enters(1, testing::kSetB));
}

TEST(CutCount, Examples) {
  Digraph single(2, {{kA, kB}});
  EXPECT_EQ(CutInCount(single, {0}, testing::kSetB), 1);
  EXPECT_EQ(CutInCount(single, {0}, 0), 0);
  EXPECT_EQ(CutInCount(single, {0}, 3), 0);
  EXPECT_EQ(CutOutCount(single, {0}, testing::kSetA), 1);
  Digraph i6 = testing::I6().digraph;
  EXPECT_EQ(CutInCount(i6, {0, 1}, testing::kSetB), 2);
}

TEST(CutFlow, Examples) {
  Digraph i1 = testing::I1().digraph;
  EXPECT_EQ(NetFlow(i1, {0, 0}, testing::kSetB), 0);
  EXPECT_EQ(NetFlow(i1, {2, 2}, testing::kSetB), 0);
  EXPECT_EQ(CutInFlow(i1, {2, 2}, testing::kSetB), 2);
  EXPECT_EQ(CutOutFlow(i1, {2, 2}, testing::kSetB), 2);
  std::vector<ExtInt> g = {ExtInt::PosInf(), 0};
  EXPECT_EQ(CutInSum(i1, g, testing::kSetB), ExtInt::PosInf());
}

TEST(CutFlow, SameSignInfiniteDifferenceRejected) {
  Digraph i1 = testing::I1().digraph;
  std::vector<ExtInt> side = {ExtInt::PosInf(), ExtInt::PosInf()};
  EXPECT_THROW(NetSum(i1, side, testing::kSetB), std::domain_error);
}

TEST(ChainClassify, Examples) {
  Digraph d(3, {{0, 1}, {1, 0}, {2, 0}});
  EXPECT_EQ(ChainClassify(d, {0b010}, 0), (ChainClass{ChainClass::Kind::kEntering, 1}));
  EXPECT_EQ(ChainClassify(d, {0b010, 0b110}, 0),
            (ChainClass{ChainClass::Kind::kEntering, 2}));
  EXPECT_EQ(ChainClassify(d, {0b010}, 1).kind, ChainClass::Kind::kLeaving);
  EXPECT_EQ(ChainClassify(d, {0b010}, 2).kind, ChainClass::Kind::kNeutral);
  EXPECT_THROW(ChainClassify(d, {0b010, 0b010}, 0), InputError);
  EXPECT_THROW(ChainClassify(d, {0b111}, 0), InputError);
}

TEST(ChainClassify, MixedOnlyForNonNestedFamilies) {
  Digraph d(3, {{0, 1}});
  EXPECT_EQ(ClassifyAgainstFamily(d, {0b010, 0b001}, 0).kind, ChainClass::Kind::kMixed);
}

TEST(ChainEnteringCount, Examples) {
  Digraph i6 = testing::I6().digraph;
  EXPECT_EQ(ChainEnteringCount(i6, {testing::kSetB}, {}), 0);
  EXPECT_EQ(ChainEnteringCount(i6, {testing::kSetB}, {0, 1}), 2);
  Digraph d(3, {{0, 1}});
  EXPECT_EQ(ChainEnteringCount(d, {0b010, 0b110}, {0}), 1);
}

TEST(DecminCompare, Examples) {
  EXPECT_EQ(DecminCompare({3, 1, 1}, {2, 2, 2}), std::strong_ordering::greater);
  EXPECT_EQ(DecminCompare({2, 2}, {2, 2}), std::strong_ordering::equal);
  EXPECT_EQ(DecminCompare({5, 0}, {4, 4}), std::strong_ordering::greater);
  EXPECT_EQ(DecminCompare({1, 3}, {3, 1}), std::strong_ordering::equal);
  EXPECT_THROW(DecminCompare({1}, {1, 2}), InputError);
}

class CoreProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
};

TEST_F(CoreProperties, NetFlowIsModular) {
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::RandomInstance(rng, {2, 5, 6});
    ArcVec x(inst.m());
    std::uniform_int_distribution<int> v(-4, 4);
    for (auto& xe : x) xe = v(rng);
    const Subset all = inst.digraph.all();
    EXPECT_EQ(NetFlow(inst.digraph, x, all), 0);
    for (Subset z = 0; z <= all; ++z) {
      EXPECT_EQ(NetFlow(inst.digraph, x, z) + NetFlow(inst.digraph, x, all & ~z), 0);
    }
  }
}

TEST_F(CoreProperties, ReversalSwapsInAndOut) {
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testing::RandomInstance(rng, {2, 5, 6});
    std::vector<Arc> rev;
    for (const Arc& a : inst.digraph.arcs()) rev.push_back({a.head, a.tail});
    Digraph r(inst.n(), rev);
    const ArcSet all_arcs = AllArcs(inst.digraph);
    for (Subset z = 0; z <= inst.digraph.all(); ++z) {
      EXPECT_EQ(CutInCount(inst.digraph, all_arcs, z), CutOutCount(r, all_arcs, z));
    }
  }
}

TEST_F(CoreProperties, DecminCompareIsTotalAndTransitive) {
  std::uniform_int_distribution<int> v(0, 3);
  auto draw = [&] { return std::vector<std::int64_t>{v(rng), v(rng), v(rng)}; };
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = draw();
    auto b = draw();
    auto c = draw();
    if (DecminCompare(a, b) <= 0 && DecminCompare(b, c) <= 0) {
      EXPECT_TRUE(DecminCompare(a, c) <= 0);
    }
    EXPECT_EQ(DecminCompare(a, b) == 0, [&] {
      auto x = a;
      auto y = b;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      return x == y;
    }());
  }
}

TEST_F(CoreProperties, ChainsNeverMixed) {
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::RandomInstance(rng, {3, 5, 6});
    const int n = inst.n();
    Chain chain;
    Subset cur = 0;
    for (int v = 0; v + 1 < n; ++v) {
      cur |= Singleton(static_cast<int>(rng() % n));
      if (cur != inst.digraph.all() && (chain.empty() || chain.back() != cur) && rng() % 2) {
        chain.push_back(cur);
      }
    }
    for (ArcId e = 0; e < inst.m(); ++e) {
      EXPECT_NE(ChainClassify(inst.digraph, chain, e).kind, ChainClass::Kind::kMixed);
    }
  }
}

}  // namespace
}  // namespace fairflow
