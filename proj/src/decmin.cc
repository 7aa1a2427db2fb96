#include "fairflow/decmin.h"

#include <algorithm>
#include <set>
#include <string>

namespace fairflow {
namespace {

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) {
  return a / b + ((a % b != 0) && ((a > 0) == (b > 0)) ? 1 : 0);
}

void RequireFiniteOnF(const Instance& inst) {
  for (ArcId e : inst.F) {
    if (!inst.bounds.f[e].is_finite() || !inst.bounds.g[e].is_finite()) {
      throw InputError("f and g must be finite on the non-tight arcs of F");
    }
  }
}

}  // namespace

ArcSet StripTight(const ArcSet& F, const Bounds& bounds) {
  ArcSet out;
  for (ArcId e : F) {
    if (!bounds.IsTight(e)) out.push_back(e);
  }
  return out;
}

NdResult NewtonDinkelbach(const SetFn& h_in, const SetFn& b_in) {
  if (h_in.n() != b_in.n()) throw InputError("h and b on different ground sets");
  const SetFn h = h_in.Tabulated();
  const SetFn b = b_in.Tabulated();
  const Subset all = h.ground();
  NdResult result;
  bool some_positive = false;
  for (Subset z = 0; z <= all; ++z) {
    if (h(z).is_pos_inf()) throw InputError("h takes +inf");
    if (b(z) < ExtInt(0)) throw InputError("b must be nonnegative");
    if (b(z).is_finite()) {
      result.max_finite_b = std::max(result.max_finite_b, b(z).value());
    }
    if (b(z) == ExtInt(0) && ExtInt(0) < h(z)) {
      throw InputError("no good mu: h > 0 where b = 0");
    }
    some_positive |= ExtInt(0) < h(z);
  }
  if (!some_positive) throw InputError("mu = 0 is already good");

  auto step = [&](std::int64_t mu) {
    SetFn excess(h.n(), [&, mu](Subset z) { return h(z) - Scale(mu, b(z)); });
    Extremum best = BruteExtremize(excess, Sense::kMax);
    return NdStep{mu, best.arg, best.value};
  };
  result.log.push_back(step(0));
  while (ExtInt(0) < result.log.back().excess) {
    if (result.iterations() >= result.max_finite_b + 1) {
      throw CertificateMismatch("newton_dinkelbach: iteration bound exceeded");
    }
    Subset x = result.log.back().argmax;
    // h(x) > 0 and b(x) > 0 here, so the ratio is a positive finite number.
    std::int64_t mu = CeilDiv(h(x).value(), b(x).value());
    if (mu <= result.log.back().mu) {
      throw CertificateMismatch("newton_dinkelbach: mu did not increase");
    }
    result.log.push_back(step(mu));
  }
  result.mu_min = result.log.back().mu;
  return result;
}

BetaResult ComputeBeta(const Instance& inst) {
  inst.Validate();
  BetaResult r;
  Instance work = inst;
  work.F = StripTight(inst.F, inst.bounds);
  RequireFiniteOnF(work);
  if (FirstViolator(work)) {
    throw InputError("compute_beta needs a feasible instance");
  }
  // Largest value fixed on an arc that went tight while lowering.
  std::optional<std::int64_t> floor;
  for (;;) {
    if (work.F.empty()) break;
    std::int64_t f1 = work.bounds.f[work.F[0]].value();
    std::set<std::int64_t, std::greater<>> levels;
    for (ArcId e : work.F) {
      f1 = std::max(f1, work.bounds.f[e].value());
      levels.insert(work.bounds.g[e].value());
    }
    const std::int64_t g1 = *levels.begin();
    const std::int64_t beta1 =
        levels.size() >= 2 ? std::max(f1, *std::next(levels.begin())) : f1;
    ArcSet top;
    for (ArcId e : work.F) {
      if (work.bounds.g[e] == ExtInt(g1)) top.push_back(e);
    }
    Instance lowered = work;
    for (ArcId e : top) lowered.bounds.g[e] = beta1;
    if (!FirstViolator(lowered)) {
      work = lowered;
      for (ArcId e : work.F) {
        if (work.bounds.IsTight(e)) floor = std::max(floor.value_or(beta1), beta1);
      }
      work.F = StripTight(work.F, work.bounds);
      ++r.lowerings;
      continue;
    }
    const Digraph& d = work.digraph;
    std::vector<ExtInt> h(std::size_t{1} << d.node_count());
    std::vector<ExtInt> b(h.size());
    for (Subset z = 0; z < h.size(); ++z) {
      h[z] = work.base(z) - CutInSum(d, lowered.bounds.g, z) +
             CutOutSum(d, work.bounds.f, z);
      b[z] = CutInCount(d, top, z);
    }
    NdResult nd = NewtonDinkelbach(SetFn::FromTable(d.node_count(), h),
                                   SetFn::FromTable(d.node_count(), b));
    r.nd_runs.push_back(nd);
    const std::int64_t beta = beta1 + nd.mu_min;
    if (beta > g1) throw CertificateMismatch("compute_beta: beta above top level");
    for (ArcId e : top) work.bounds.g[e] = beta;
    r.beta = beta;
    break;
  }
  r.beta_F = r.beta;
  if (floor) r.beta_F = std::max(*floor, r.beta.value_or(*floor));
  r.bounds = work.bounds;
  r.F = work.F;
  return r;
}

PhaseResult PredecminPhase(const Instance& inst) {
  inst.Validate();
  if (inst.F.empty()) throw InputError("pre-dec-min phase needs a nonempty F");
  RequireFiniteOnF(inst);
  std::int64_t beta = inst.bounds.g[inst.F[0]].value();
  for (ArcId e : inst.F) {
    if (inst.bounds.IsTight(e)) throw InputError("F contains a tight arc");
    beta = std::max(beta, inst.bounds.g[e].value());
  }
  PhaseResult out;
  out.trace.beta = beta;
  for (ArcId e : inst.F) {
    if (inst.bounds.g[e] == ExtInt(beta)) out.trace.L_beta.push_back(e);
  }
  Instance lowered = inst;
  for (ArcId e : out.trace.L_beta) lowered.bounds.g[e] = beta - 1;
  if (!FirstViolator(lowered)) {
    throw InputError("beta is not minimal: lowering the top level stays feasible");
  }
  LupminResult lup = LupminSolve(inst, out.trace.L_beta);
  out.trace.chain = lup.chain;
  for (ArcId e : out.trace.L_beta) {
    if (ChainClassify(inst.digraph, lup.chain, e).kind ==
        ChainClass::Kind::kEntering) {
      out.trace.L_prime.push_back(e);
    }
  }
  if (out.trace.L_prime.empty()) {
    throw CertificateMismatch("pre-dec-min phase: no chain-entering arc at beta");
  }
  out.narrowed = inst;
  out.narrowed.bounds = lup.bounds;
  out.narrowed.base = FaceContract(inst.base, lup.chain);
  out.narrowed.F = Difference(inst.F, out.trace.L_prime);
  for (ArcId e : out.trace.L_prime) {
    const ExtInt f = lup.bounds.f[e];
    if (lup.bounds.g[e] != ExtInt(beta) || f < ExtInt(beta - 1)) {
      throw CertificateMismatch("pre-dec-min phase: box not narrow on L'");
    }
  }
  out.trace.bounds_after = lup.bounds;
  return out;
}

SolveResult SolveDecmin(const Instance& inst) {
  inst.Validate();
  if (auto v = FirstViolator(inst)) {
    throw InfeasibleError("base-flow polyhedron is empty", v->first, v->second);
  }
  Instance cur = inst;
  cur.F = StripTight(inst.F, inst.bounds);
  RequireFiniteOnF(cur);
  SolveResult result;
  const std::size_t guard = cur.F.size();
  for (;;) {
    BetaResult beta = ComputeBeta(cur);
    cur.bounds = beta.bounds;
    cur.F = beta.F;
    if (!beta.beta) break;
    if (result.traces.size() >= guard) {
      throw CertificateMismatch("solve_decmin: more phases than arcs in F");
    }
    PhaseResult phase = PredecminPhase(cur);
    result.face_chains.push_back(phase.trace.chain);
    result.traces.push_back(phase.trace);
    cur = phase.narrowed;
    cur.F = StripTight(cur.F, cur.bounds);
  }
  result.bounds_star = cur.bounds;
  result.final_instance = cur;
  result.witness = FindFeasible(cur);
  for (ArcId e : inst.F) {
    ExtInt width = result.bounds_star.g[e] - result.bounds_star.f[e];
    if (width < ExtInt(0) || ExtInt(1) < width) {
      throw CertificateMismatch("solve_decmin: box wider than 1 on F");
    }
  }
  return result;
}

ArcVec SolveMinCostDecmin(const SolveResult& solved, const ArcVec& cost) {
  return MinCostFlow(solved.final_instance, cost).x;
}

ArcVec SolveMinCostDecmin(const Instance& inst, const ArcVec& cost) {
  return SolveMinCostDecmin(SolveDecmin(inst), cost);
}

}  // namespace fairflow
