#include <gtest/gtest.h>

#include <random>

#include "fairflow/decmin.h"
#include "fairflow/existence.h"
#include "fairflow/oracle.h"
#include "test_instances.h"

namespace fairflow {
namespace {

namespace orc = oracle;

TEST(BuildJumpStructure, FiniteP) {
  Instance inst = testing::MakeInstance(3, {{0, 1}}, {0}, {1},
                                        BaseOracle(SetFn::Modular({0, 0, 0})));
  JumpStructure js = BuildJumpStructure(inst);
  for (int u = 0; u < 3; ++u) EXPECT_EQ(js.principal[u], Singleton(u));
  for (const StarArc& a : js.arcs) EXPECT_NE(a.kind, StarKind::kJump);
}

TEST(BuildJumpStructure, I4Prime) {
  JumpStructure js = BuildJumpStructure(testing::I4Prime());
  EXPECT_EQ(js.a1, (ArcSet{0, 1}));
  EXPECT_EQ(js.a2_origin, ArcSet{1});
  int jumps = 0;
  bool ab = false;
  bool ba = false;
  for (const StarArc& a : js.arcs) {
    jumps += a.kind == StarKind::kJump;
    ab |= a.tail == testing::kA && a.head == testing::kB;
    ba |= a.tail == testing::kB && a.head == testing::kA;
  }
  EXPECT_EQ(jumps, 0);
  EXPECT_TRUE(ab);
  EXPECT_TRUE(ba);
}

TEST(HasBlockingDicircuit, Examples) {
  JumpStructure p = BuildJumpStructure(testing::I4Prime());
  EXPECT_FALSE(HasBlockingDicircuit(p, {}).has_value());
  EXPECT_TRUE(HasBlockingDicircuit(p, {0}).has_value());
  JumpStructure i4 = BuildJumpStructure(testing::I4());
  EXPECT_EQ(i4.a1, ArcSet{0});
  EXPECT_FALSE(HasBlockingDicircuit(i4, {0}).has_value());
}

TEST(ImproveAlongCircuit, I4Prime) {
  Instance inst = testing::I4Prime();
  JumpStructure js = BuildJumpStructure(inst);
  auto c = HasBlockingDicircuit(js, inst.F);
  ASSERT_TRUE(c.has_value());
  ArcVec z1 = ImproveAlongCircuit(js, *c, inst.F, ArcVec{0, 0});
  EXPECT_EQ(z1, (ArcVec{-1, -1}));
  EXPECT_TRUE(orc::InQ(inst, z1));
  EXPECT_EQ(ImproveAlongCircuit(js, *c, inst.F, z1), (ArcVec{-2, -2}));
  std::vector<double> half =
      ImproveAlongCircuit<double>(js, *c, inst.F, std::vector<double>{0.0, 0.0}, 0.5);
  EXPECT_EQ(half, (std::vector<double>{-0.5, -0.5}));
  EXPECT_THROW(ImproveAlongCircuit(js, *c, {}, ArcVec{0, 0}), InputError);
}

TEST(FinitizeBounds, I4) {
  Instance fin = FinitizeBounds(testing::I4());
  EXPECT_EQ(fin.bounds.f[0], ExtInt(0));
  EXPECT_EQ(fin.bounds.g[0], ExtInt(0));
}

TEST(FinitizeBounds, FiniteFUntouched) {
  Instance i1 = testing::I1({0});
  Instance fin = FinitizeBounds(i1);
  EXPECT_EQ(fin.bounds.f, i1.bounds.f);
  EXPECT_EQ(fin.bounds.g[1], i1.bounds.g[1]);
  EXPECT_LE(fin.bounds.g[0], i1.bounds.g[0]);
}

TEST(FinitizeBounds, RejectsBlockingCircuit) {
  EXPECT_THROW(FinitizeBounds(testing::I4Prime()), InputError);
}

class ExistenceProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{23};
};

// One F-arc gets an infinite lower bound; compare against a window scan.
TEST_F(ExistenceProperties, CircuitIffUnboundedBelow) {
  int circuits = 0;
  int finite = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Instance inst = testing::RandomInstance(rng, {2, 3, 3});
    if (inst.m() == 0) continue;
    inst.F = {0};
    inst.bounds.f[0] = ExtInt::NegInf();
    if (rng() % 2) inst.bounds.g[1 % inst.m()] = ExtInt::PosInf();
    if (!CheckFeasible(inst).feasible) continue;
    JumpStructure js = BuildJumpStructure(inst);
    auto c = HasBlockingDicircuit(js, inst.F);
    if (c) {
      ++circuits;
      ArcVec z = FindFeasible(inst);
      for (int step = 0; step < 3; ++step) {
        ArcVec next = ImproveAlongCircuit(js, *c, inst.F, z);
        EXPECT_TRUE(orc::InQ(inst, next));
        EXPECT_LT(next[0], z[0]);
        z = next;
      }
    } else {
      ++finite;
      Instance fin = FinitizeBounds(inst);
      ASSERT_TRUE(fin.bounds.f[0].is_finite());
      const auto pts = orc::EnumerateQ(inst, orc::WindowFromBounds(inst.bounds, -9, 9));
      std::int64_t lowest = pts.front()[0];
      for (const ArcVec& p : pts) lowest = std::min(lowest, p[0]);
      EXPECT_LE(fin.bounds.f[0].value(), lowest);
      SolveResult r = SolveDecmin(fin);
      EXPECT_TRUE(orc::InQ(inst, r.witness));
    }
  }
  EXPECT_GT(circuits, 10);
  EXPECT_GT(finite, 10);
}

}  // namespace
}  // namespace fairflow
