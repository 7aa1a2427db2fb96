#include "fairflow/lupmin.h"

#include <algorithm>
#include <string>

namespace fairflow {

ArcVec AugmentedInstance::Decode(const ArcVec& x1) const {
  ArcVec x(x1.begin(), x1.begin() + original_arc_count);
  for (std::size_t i = 0; i < L.size(); ++i) x[L[i]] += x1[copy_of[i]];
  return x;
}

AugmentedInstance AugmentInstance(const Instance& inst, const ArcSet& L) {
  inst.Validate();
  AugmentedInstance aug;
  aug.L = NormalizeArcSet(L, inst.m());
  aug.original_arc_count = inst.m();
  aug.instance = inst;
  aug.instance.F.clear();
  aug.instance.cost.reset();
  aug.cost.assign(inst.m(), 0);
  Bounds& b = aug.instance.bounds;
  for (ArcId e : aug.L) {
    const ExtInt f = inst.bounds.f[e];
    const ExtInt g = inst.bounds.g[e];
    if (!f.is_finite() || !g.is_finite() || !(f < g)) {
      throw InputError("arc " + std::to_string(e) +
                       " of L needs finite bounds with f < g");
    }
    b.g[e] = g - 1;
    const Arc a = inst.digraph.arc(e);
    aug.copy_of.push_back(aug.instance.digraph.AddArc(a.tail, a.head));
    b.f.push_back(0);
    b.g.push_back(1);
    aug.cost.push_back(1);
  }
  return aug;
}

Chain ExtractChain(const NodeVec& pi) {
  for (std::int64_t v : pi) {
    if (v < 0) throw InputError("extract_chain: negative potential");
  }
  Chain chain;
  std::int64_t top = 0;
  for (std::int64_t v : pi) top = std::max(top, v);
  const Subset all = FullSet(static_cast<int>(pi.size()));
  for (std::int64_t j = top; j >= 1; --j) {
    Subset level = 0;
    for (std::size_t v = 0; v < pi.size(); ++v) {
      if (pi[v] >= j) level |= Singleton(static_cast<int>(v));
    }
    if (level == all) break;
    if (chain.empty() || chain.back() != level) chain.push_back(level);
  }
  return chain;
}

ExtInt ChainValue(const Instance& inst, const ArcSet& L, const Chain& chain) {
  ValidateChain(chain, inst.n());
  ExtInt total = ChainEnteringCount(inst.digraph, chain, L);
  for (Subset c : chain) total -= FeasibilitySlack(inst, c);
  return total;
}

Bounds DeriveBounds(const Instance& inst, const ArcSet& L, const Chain& chain) {
  ValidateChain(chain, inst.n());
  const Bounds& b = inst.bounds;
  Bounds out = b;
  for (ArcId e = 0; e < inst.m(); ++e) {
    ChainClass c = ChainClassify(inst.digraph, chain, e);
    const ExtInt f = b.f[e];
    const ExtInt g = b.g[e];
    if (ArcSetContains(L, e)) {
      switch (c.kind) {
        case ChainClass::Kind::kEntering:
          out.f[e] = c.multiplicity >= 2 ? g : g - 1;
          out.g[e] = g;
          break;
        case ChainClass::Kind::kLeaving:
          out.g[e] = f;
          break;
        default:
          out.g[e] = g - 1;
          break;
      }
    } else if (c.kind == ChainClass::Kind::kEntering) {
      if (!g.is_finite()) throw InputError("infeasible chain: +inf arc enters it");
      out.f[e] = g;
    } else if (c.kind == ChainClass::Kind::kLeaving) {
      if (!f.is_finite()) throw InputError("infeasible chain: -inf arc leaves it");
      out.g[e] = f;
    }
  }
  return out;
}

LupminResult LupminSolve(const Instance& inst, const ArcSet& L_in) {
  inst.Validate();
  const ArcSet L = NormalizeArcSet(L_in, inst.m());
  LupminResult result;
  std::int64_t tight = 0;
  for (ArcId e : L) {
    if (inst.bounds.IsTight(e)) {
      ++tight;
    } else {
      result.solved_L.push_back(e);
    }
  }
  AugmentedInstance aug = AugmentInstance(inst, result.solved_L);
  MinCostResult mc = MinCostFlow(aug.instance, aug.cost);
  result.witness = aug.Decode(mc.x);
  result.chain = ExtractChain(mc.potential);
  result.bounds = DeriveBounds(inst, result.solved_L, result.chain);

  std::int64_t saturated = 0;
  for (ArcId e : L) saturated += ExtInt(result.witness[e]) == inst.bounds.g[e];
  if (saturated != mc.cost + tight) {
    throw CertificateMismatch("lupmin: decoded saturation differs from cost");
  }
  ExtInt dual = ChainValue(inst, result.solved_L, result.chain);
  if (dual != ExtInt(mc.cost)) {
    throw CertificateMismatch("lupmin: chain value " + dual.ToString() +
                              " differs from optimum " + std::to_string(mc.cost));
  }
  result.min_saturated = saturated;
  Instance face = inst;
  face.bounds = result.bounds;
  face.base = FaceContract(inst.base, result.chain);
  if (!IsFeasibleFlow(face, result.witness)) {
    throw CertificateMismatch("lupmin: witness outside the derived polyhedron");
  }
  return result;
}

CriteriaReport CheckOptimalityCriteria(const Instance& inst, const ArcSet& L_in,
                                       const Chain& chain, const ArcVec& x) {
  const ArcSet L = NormalizeArcSet(L_in, inst.m());
  ValidateChain(chain, inst.n());
  const Bounds& b = inst.bounds;
  const Digraph& d = inst.digraph;
  bool holds[7] = {true, true, true, true, true, true, true};
  for (ArcId e = 0; e < inst.m(); ++e) {
    ChainClass c = ChainClassify(d, chain, e);
    const ExtInt v = x[e];
    const bool in_l = ArcSetContains(L, e);
    if (c.kind == ChainClass::Kind::kLeaving && v != b.f[e]) holds[1] = false;
    if (!in_l && c.kind == ChainClass::Kind::kEntering && v != b.g[e]) {
      holds[2] = false;
    }
    if (in_l && c.kind == ChainClass::Kind::kEntering && c.multiplicity == 1 &&
        !(b.g[e] - 1 <= v && v <= b.g[e])) {
      holds[3] = false;
    }
    if (in_l && c.kind == ChainClass::Kind::kEntering && c.multiplicity >= 2 &&
        v != b.g[e]) {
      holds[4] = false;
    }
    if (in_l && c.kind == ChainClass::Kind::kNeutral &&
        !(b.f[e] <= v && v <= b.g[e] - 1)) {
      holds[5] = false;
    }
  }
  for (Subset c : chain) {
    if (ExtInt(NetFlow(d, x, c)) != inst.base(c)) holds[6] = false;
  }
  CriteriaReport report;
  for (int i = 1; i <= 6; ++i) {
    if (!holds[i]) {
      report.ok = false;
      report.failing = i;
      break;
    }
  }
  bool finite_chain = true;
  for (Subset c : chain) finite_chain &= inst.base(c).is_finite();
  if (finite_chain) {
    try {
      Instance face = inst;
      face.bounds = DeriveBounds(inst, L, chain);
      face.base = FaceContract(inst.base, chain);
      report.in_face_box = IsFeasibleFlow(face, x);
    } catch (const InputError&) {
      report.in_face_box = false;
    }
  }
  if (report.in_face_box != report.ok) {
    throw CertificateMismatch("optimality criteria disagree with membership");
  }
  return report;
}

}  // namespace fairflow
