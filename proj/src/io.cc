#include "fairflow/io.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "fairflow/decmin.h"
#include "fairflow/existence.h"
#include "fairflow/lupmin.h"
#include "fairflow/oracle.h"

namespace fairflow::io {
namespace {

void RequireKeys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw InputError("unknown key '" + key + "' in " + where);
  }
}

std::int64_t ParseInt(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  return v.get<std::int64_t>();
}

ExtInt ParseExt(const json& v, const std::string& where) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "-inf") return ExtInt::NegInf();
    if (s == "+inf" || s == "inf") return ExtInt::PosInf();
    throw InputError(where + ": expected an integer, \"-inf\" or \"+inf\"");
  }
  return ParseInt(v, where);
}

class Names {
 public:
  explicit Names(const std::vector<std::string>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) index_[nodes[i]] = static_cast<int>(i);
  }
  int Node(const json& v, const std::string& where) const {
    if (!v.is_string()) throw InputError(where + " must be a node name");
    auto it = index_.find(v.get<std::string>());
    if (it == index_.end()) throw InputError(where + ": unknown node '" + v.get<std::string>() + "'");
    return it->second;
  }
  // "" is the empty set; otherwise comma-joined names in any order.
  Subset Set(const std::string& key) const {
    Subset z = 0;
    if (key.empty()) return z;
    std::stringstream ss(key);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto it = index_.find(name);
      if (it == index_.end()) throw InputError("p-table key '" + key + "' names an unknown node");
      if (Contains(z, it->second)) throw InputError("p-table key '" + key + "' repeats a node");
      z |= Singleton(it->second);
    }
    return z;
  }

 private:
  std::map<std::string, int> index_;
};

std::string SetKey(const InstanceFile& file, Subset z) {
  std::string key;
  for (std::size_t v = 0; v < file.nodes.size(); ++v) {
    if (!Contains(z, static_cast<int>(v))) continue;
    if (!key.empty()) key += ",";
    key += file.nodes[v];
  }
  return key;
}

BaseOracle BuildBase(const BaseSpec& spec, int n) {
  switch (spec.kind) {
    case BaseSpec::Kind::kZero:
      return BaseOracle::Zero(n);
    case BaseSpec::Kind::kTable: {
      SetFn p = SetFn::FromTable(n, spec.table);
      if (!p(0).is_finite() || p(0) != ExtInt(0)) throw InputError("p(empty set) must be 0");
      if (p(FullSet(n)) != ExtInt(0)) throw InputError("p(V) must be 0");
      PairCheck pc = CheckFullySupermodular(p);
      if (!pc.ok) throw InputError("p is not fully supermodular");
      return BaseOracle(p);
    }
    case BaseSpec::Kind::kPoints: {
      if (spec.points.empty()) throw InputError("base points list is empty");
      SetFn p = EnvelopeFromPoints(n, spec.points);
      if (!CheckFullySupermodular(p).ok) {
        throw InputError("base points do not span an integral base polyhedron");
      }
      return BaseOracle(p);
    }
  }
  throw InputError("bad base kind");
}

BaseSpec ParseBase(const json& b, const Names& names, int n) {
  if (!b.is_object() || !b.contains("type") || !b["type"].is_string()) {
    throw InputError("base needs a string 'type'");
  }
  const std::string type = b["type"].get<std::string>();
  BaseSpec spec;
  if (type == "zero") {
    RequireKeys(b, {"type"}, "base");
    return spec;
  }
  if (type == "table") {
    RequireKeys(b, {"type", "p"}, "base");
    if (!b.contains("p") || !b["p"].is_object()) throw InputError("table base needs an object 'p'");
    spec.kind = BaseSpec::Kind::kTable;
    spec.table.assign(std::size_t{1} << n, ExtInt::NegInf());
    std::vector<bool> seen(spec.table.size(), false);
    for (const auto& [key, value] : b["p"].items()) {
      const Subset z = names.Set(key);
      if (seen[z]) throw InputError("p-table lists a set twice: '" + key + "'");
      seen[z] = true;
      spec.table[z] = ParseExt(value, "p['" + key + "']");
      if (spec.table[z].is_pos_inf()) throw InputError("p must not take +inf");
    }
    if (!seen[0] || !seen[FullSet(n)]) throw InputError("p-table must list the empty set and V");
    return spec;
  }
  if (type == "points") {
    RequireKeys(b, {"type", "points"}, "base");
    if (!b.contains("points") || !b["points"].is_array()) throw InputError("points base needs 'points'");
    spec.kind = BaseSpec::Kind::kPoints;
    for (const json& pt : b["points"]) {
      if (!pt.is_array() || static_cast<int>(pt.size()) != n) {
        throw InputError("each base point needs one entry per node");
      }
      NodeVec y;
      std::int64_t sum = 0;
      for (const json& v : pt) {
        y.push_back(ParseInt(v, "base point entry"));
        sum += y.back();
      }
      if (sum != 0) throw InputError("base points must sum to 0");
      spec.points.push_back(y);
    }
    return spec;
  }
  throw InputError("unknown base type '" + type + "'");
}

json SerializeBase(const InstanceFile& file) {
  const BaseSpec& spec = file.base;
  switch (spec.kind) {
    case BaseSpec::Kind::kZero:
      return {{"type", "zero"}};
    case BaseSpec::Kind::kTable: {
      json p = json::object();
      for (Subset z = 0; z < spec.table.size(); ++z) {
        if (!spec.table[z].is_neg_inf()) p[SetKey(file, z)] = ExtJson(spec.table[z]);
      }
      return {{"type", "table"}, {"p", p}};
    }
    case BaseSpec::Kind::kPoints:
      return {{"type", "points"}, {"points", spec.points}};
  }
  return {};
}

std::pair<int, int> ParsePair(const json& v, const Names& names, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + " entries must be [u, v]");
  return {names.Node(v[0], where), names.Node(v[1], where)};
}

MixedSpec ParseMixed(const json& mg, const Names& names, int n) {
  RequireKeys(mg, {"directed", "undirected", "degree_bounds", "cost"}, "mixed_graph");
  MixedSpec spec;
  auto list = [&](const char* key, std::vector<std::pair<int, int>>& out) {
    if (!mg.contains(key)) return;
    if (!mg[key].is_array()) throw InputError(std::string("mixed_graph.") + key + " must be a list");
    for (const json& e : mg[key]) out.push_back(ParsePair(e, names, key));
  };
  list("directed", spec.directed);
  list("undirected", spec.undirected);
  if (mg.contains("degree_bounds")) {
    const json& db = mg["degree_bounds"];
    if (!db.is_object()) throw InputError("degree_bounds must map node names to [lo, hi]");
    DegreeBounds bounds;
    bounds.lo.assign(n, 0);
    bounds.hi.assign(n, std::numeric_limits<std::int32_t>::max());
    for (const auto& [name, range] : db.items()) {
      const int v = names.Node(json(name), "degree_bounds");
      if (!range.is_array() || range.size() != 2) throw InputError("degree bound must be [lo, hi]");
      bounds.lo[v] = ParseInt(range[0], "degree bound");
      bounds.hi[v] = ParseInt(range[1], "degree bound");
    }
    spec.degree_bounds = bounds;
  }
  if (mg.contains("cost")) {
    if (!mg["cost"].is_array() || mg["cost"].size() != spec.undirected.size()) {
      throw InputError("mixed_graph.cost needs one entry per undirected edge");
    }
    ArcVec cost;
    for (const json& c : mg["cost"]) cost.push_back(ParseInt(c, "mixed_graph.cost"));
    spec.cost = cost;
  }
  return spec;
}

json SerializeMixed(const InstanceFile& file) {
  const MixedSpec& spec = *file.mixed;
  auto pairs = [&](const std::vector<std::pair<int, int>>& list) {
    json out = json::array();
    for (auto [u, v] : list) out.push_back({file.nodes[u], file.nodes[v]});
    return out;
  };
  json out = {{"directed", pairs(spec.directed)}, {"undirected", pairs(spec.undirected)}};
  if (spec.degree_bounds) {
    json db = json::object();
    for (std::size_t v = 0; v < file.nodes.size(); ++v) {
      const std::int64_t lo = spec.degree_bounds->lo[v];
      const std::int64_t hi = spec.degree_bounds->hi[v];
      if (lo != 0 || hi != std::numeric_limits<std::int32_t>::max()) db[file.nodes[v]] = {lo, hi};
    }
    out["degree_bounds"] = db;
  }
  if (spec.cost) out["cost"] = *spec.cost;
  return out;
}

json ArcMap(const InstanceFile& file, const std::function<json(ArcId)>& value,
            const ArcSet* only = nullptr) {
  json out = json::object();
  for (ArcId e = 0; e < file.instance.m(); ++e) {
    if (only && !ArcSetContains(*only, e)) continue;
    out[file.ArcName(e)] = value(e);
  }
  return out;
}

json ArcList(const InstanceFile& file, const ArcSet& arcs) {
  json out = json::array();
  for (ArcId e : arcs) out.push_back(file.ArcName(e));
  return out;
}

json ChainJson(const InstanceFile& file, const Chain& chain) {
  json out = json::array();
  for (Subset c : chain) out.push_back(file.SetJson(c));
  return out;
}

json FlowJson(const InstanceFile& file, const ArcVec& x) {
  return ArcMap(file, [&](ArcId e) { return json(x[e]); });
}

CmdResult InputFailure(const std::string& why) {
  CmdResult r;
  r.exit_code = kExitInput;
  r.out = {{"error", why}};
  r.diagnostics = "input error: " + why;
  return r;
}

template <typename Fn>
CmdResult Run(Fn fn) {
  try {
    return fn();
  } catch (const json::exception& ex) {
    return InputFailure(std::string("malformed JSON: ") + ex.what());
  } catch (const InputError& ex) {
    return InputFailure(ex.what());
  } catch (const InfeasibleError& ex) {
    CmdResult r;
    r.exit_code = kExitInfeasible;
    r.out = {{"feasible", false}, {"deficit", ExtJson(ex.deficit())}};
    r.diagnostics = std::string("infeasible: ") + ex.what();
    return r;
  } catch (const BudgetExceeded& ex) {
    return InputFailure(std::string("budget exceeded: ") + ex.what());
  } catch (const CertificateMismatch& ex) {
    CmdResult r;
    r.exit_code = kExitMismatch;
    r.out = {{"error", ex.what()}};
    r.diagnostics = std::string("certificate mismatch: ") + ex.what();
    return r;
  }
}

std::optional<CmdResult> Infeasible(const InstanceFile& file) {
  auto v = FirstViolator(file.instance);
  if (!v) return std::nullopt;
  CmdResult r;
  r.exit_code = kExitInfeasible;
  r.out = {{"feasible", false},
           {"violator", file.SetJson(v->first)},
           {"deficit", ExtJson(v->second)}};
  r.diagnostics = "infeasible: rho_g - delta_f < p on the violator";
  return r;
}

bool InfiniteOnF(const Instance& inst) {
  for (ArcId e : inst.F) {
    if (inst.bounds.IsTight(e)) continue;
    if (!inst.bounds.f[e].is_finite() || !inst.bounds.g[e].is_finite()) return true;
  }
  return false;
}

json CircuitJson(const InstanceFile& file, const JumpStructure& js, const Dicircuit& c) {
  json out = json::array();
  for (int i : c.arcs) {
    const StarArc& a = js.arcs[i];
    const char* kind = a.kind == StarKind::kJump ? "jump" : a.kind == StarKind::kA1 ? "A1" : "A2";
    json arc = {{"tail", file.nodes[a.tail]}, {"head", file.nodes[a.head]}, {"kind", kind}};
    if (a.origin >= 0) arc["origin"] = file.ArcName(a.origin);
    out.push_back(arc);
  }
  return out;
}

}  // namespace

json ExtJson(ExtInt v) {
  if (v.is_finite()) return v.value();
  return v.ToString();
}

json InstanceFile::SetJson(Subset z) const {
  json out = json::array();
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (Contains(z, static_cast<int>(v))) out.push_back(nodes[v]);
  }
  return out;
}

InstanceFile Parse(const json& doc) {
  RequireKeys(doc, {"nodes", "arcs", "F", "base", "mixed_graph", "k"}, "instance");
  InstanceFile file;
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) throw InputError("'nodes' must be a list");
  std::set<std::string> seen;
  for (const json& v : doc["nodes"]) {
    if (!v.is_string()) throw InputError("node names must be strings");
    const std::string name = v.get<std::string>();
    if (name.empty() || name.find(',') != std::string::npos) {
      throw InputError("node names must be nonempty and free of commas");
    }
    if (!seen.insert(name).second) throw InputError("duplicate node '" + name + "'");
    file.nodes.push_back(name);
  }
  const int n = static_cast<int>(file.nodes.size());
  if (n < 1 || n > kMaxNodes) throw InputError("between 1 and 20 nodes are supported");
  const Names names(file.nodes);

  Instance& inst = file.instance;
  inst.digraph = Digraph(n);
  bool any_cost = false;
  ArcVec cost;
  if (doc.contains("arcs")) {
    if (!doc["arcs"].is_array()) throw InputError("'arcs' must be a list");
    std::set<std::string> ids;
    for (const json& a : doc["arcs"]) {
      RequireKeys(a, {"id", "tail", "head", "f", "g", "cost"}, "arc");
      for (const char* key : {"id", "tail", "head", "f", "g"}) {
        if (!a.contains(key)) throw InputError(std::string("arc is missing '") + key + "'");
      }
      if (!a["id"].is_string()) throw InputError("arc id must be a string");
      const std::string id = a["id"].get<std::string>();
      if (!ids.insert(id).second) throw InputError("duplicate arc id '" + id + "'");
      const int u = names.Node(a["tail"], "arc " + id + " tail");
      const int v = names.Node(a["head"], "arc " + id + " head");
      if (u == v) throw InputError("arc " + id + " is a loop");
      inst.digraph.AddArc(u, v);
      file.arc_ids.push_back(id);
      inst.bounds.f.push_back(ParseExt(a["f"], "arc " + id + " f"));
      inst.bounds.g.push_back(ParseExt(a["g"], "arc " + id + " g"));
      if (a.contains("cost")) {
        any_cost = true;
        cost.push_back(ParseInt(a["cost"], "arc " + id + " cost"));
      } else {
        cost.push_back(0);
      }
    }
  }
  if (any_cost) inst.cost = cost;
  if (doc.contains("F")) {
    if (!doc["F"].is_array()) throw InputError("'F' must be a list of arc ids");
    for (const json& id : doc["F"]) {
      if (!id.is_string()) throw InputError("F entries must be arc ids");
      auto it = std::find(file.arc_ids.begin(), file.arc_ids.end(), id.get<std::string>());
      if (it == file.arc_ids.end()) throw InputError("F names unknown arc '" + id.get<std::string>() + "'");
      const ArcId e = static_cast<ArcId>(it - file.arc_ids.begin());
      if (ArcSetContains(inst.F, e)) throw InputError("F lists an arc twice");
      inst.F.push_back(e);
    }
    std::sort(inst.F.begin(), inst.F.end());
  }
  if (doc.contains("base")) file.base = ParseBase(doc["base"], names, n);
  inst.base = BuildBase(file.base, n);
  if (doc.contains("mixed_graph")) file.mixed = ParseMixed(doc["mixed_graph"], names, n);
  if (doc.contains("k")) {
    const std::int64_t k = ParseInt(doc["k"], "k");
    if (k < 1) throw InputError("k must be at least 1");
    file.k = static_cast<int>(k);
  }
  inst.Validate();
  return file;
}

InstanceFile ParseText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("malformed JSON: ") + ex.what());
  }
  return Parse(doc);
}

json Serialize(const InstanceFile& file) {
  const Instance& inst = file.instance;
  json arcs = json::array();
  for (ArcId e = 0; e < inst.m(); ++e) {
    const Arc& a = inst.digraph.arc(e);
    json arc = {{"id", file.ArcName(e)},
                {"tail", file.nodes[a.tail]},
                {"head", file.nodes[a.head]},
                {"f", ExtJson(inst.bounds.f[e])},
                {"g", ExtJson(inst.bounds.g[e])}};
    if (inst.cost) arc["cost"] = (*inst.cost)[e];
    arcs.push_back(arc);
  }
  json out = {{"nodes", file.nodes}, {"arcs", arcs}, {"F", ArcList(file, inst.F)},
              {"base", SerializeBase(file)}};
  if (file.mixed) out["mixed_graph"] = SerializeMixed(file);
  if (file.k) out["k"] = *file.k;
  return out;
}

CmdResult CmdCheck(const std::string& text) {
  return Run([&] {
    const InstanceFile file = ParseText(text);
    if (auto r = Infeasible(file)) return *r;
    CmdResult r;
    r.out = {{"feasible", true}, {"witness", FlowJson(file, FindFeasible(file.instance))}};
    return r;
  });
}

CmdResult CmdSolve(const std::string& text, bool min_cost, bool trace) {
  return Run([&] {
    const InstanceFile file = ParseText(text);
    if (auto r = Infeasible(file)) return *r;
    Instance inst = file.instance;
    const JumpStructure js = BuildJumpStructure(inst);
    if (auto c = HasBlockingDicircuit(js, inst.F)) {
      CmdResult r;
      r.exit_code = kExitNoDecmin;
      r.out = {{"dec_min_exists", false}, {"circuit", CircuitJson(file, js, *c)}};
      r.diagnostics = "no dec-min element: D* has a circuit through F";
      return r;
    }
    const bool finitized = InfiniteOnF(inst);
    if (finitized) inst = FinitizeBounds(inst);
    const SolveResult solved = SolveDecmin(inst);
    CmdResult r;
    const Bounds& b = solved.bounds_star;
    json chains = json::array();
    for (const Chain& c : solved.face_chains) chains.push_back(ChainJson(file, c));
    ArcVec x = solved.witness;
    r.out = {{"dec_min_exists", true},
             {"finitized", finitized},
             {"f_star", ArcMap(file, [&](ArcId e) { return ExtJson(b.f[e]); })},
             {"g_star", ArcMap(file, [&](ArcId e) { return ExtJson(b.g[e]); })},
             {"face_chains", chains}};
    if (min_cost) {
      if (!file.instance.cost) throw InputError("--min-cost needs arc costs");
      x = SolveMinCostDecmin(solved, *file.instance.cost);
      std::int64_t total = 0;
      for (ArcId e = 0; e < inst.m(); ++e) total += (*file.instance.cost)[e] * x[e];
      r.out["cost"] = total;
    }
    r.out["witness"] = FlowJson(file, x);
    json profile = json::array();
    for (std::int64_t v : oracle::Profile(x, inst.F)) profile.push_back(v);
    r.out["profile"] = profile;
    if (trace) {
      json phases = json::array();
      for (const PhaseTrace& t : solved.traces) {
        phases.push_back({{"beta", t.beta},
                          {"L_beta", ArcList(file, t.L_beta)},
                          {"chain", ChainJson(file, t.chain)},
                          {"L_prime", ArcList(file, t.L_prime)}});
      }
      r.out["traces"] = phases;
    }
    return r;
  });
}

CmdResult CmdOrient(const std::string& text, std::optional<int> k) {
  return Run([&] {
    const InstanceFile file = ParseText(text);
    if (!file.mixed) throw InputError("orient needs a 'mixed_graph'");
    MixedGraph mg;
    mg.n = static_cast<int>(file.nodes.size());
    mg.directed = file.mixed->directed;
    mg.undirected = file.mixed->undirected;
    mg.k = k.value_or(file.k.value_or(1));
    if (mg.k < 1) throw InputError("k must be at least 1");
    const OrientResult res =
        DecminOrientation(mg, file.mixed->degree_bounds, file.mixed->cost);
    CmdResult r;
    if (!res.feasible) {
      r.exit_code = kExitInfeasible;
      r.out = {{"feasible", false}, {"k", mg.k}, {"reason", res.reason}};
      if (res.violator) r.out["violator"] = file.SetJson(*res.violator);
      r.diagnostics = "no " + std::to_string(mg.k) + "-edge-connected orientation: " + res.reason;
      return r;
    }
    json arcs = json::array();
    for (auto [u, v] : res.orientation.arcs) arcs.push_back({file.nodes[u], file.nodes[v]});
    json indeg = json::object();
    for (int v = 0; v < mg.n; ++v) indeg[file.nodes[v]] = res.orientation.indegree[v];
    std::vector<std::int64_t> profile = res.orientation.indegree;
    std::sort(profile.begin(), profile.end(), std::greater<>());
    r.out = {{"feasible", true}, {"k", mg.k}, {"orientation", arcs},
             {"indegree", indeg}, {"profile", profile}};
    if (file.mixed->cost) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < mg.undirected.size(); ++i) {
        if (res.orientation.arcs[i] != mg.undirected[i]) total += (*file.mixed->cost)[i];
      }
      r.out["cost"] = total;
    }
    return r;
  });
}

CmdResult CmdVerify(const std::string& text, std::uint64_t budget) {
  return Run([&] {
    const InstanceFile file = ParseText(text);
    const Instance& inst = file.instance;
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, json detail = json::object()) {
      all_ok &= ok;
      checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
    };

    // Window: finite bounds as given, infinite sides three past the finite range.
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (ArcId e = 0; e < inst.m(); ++e) {
      for (ExtInt v : {inst.bounds.f[e], inst.bounds.g[e]}) {
        if (!v.is_finite()) continue;
        lo = std::min(lo, v.value());
        hi = std::max(hi, v.value());
      }
    }
    const oracle::EnumWindow window = oracle::WindowFromBounds(inst.bounds, lo - 3, hi + 3);
    const std::vector<ArcVec> points = oracle::EnumerateQ(inst, window, budget);
    bool bounded = true;
    for (ArcId e = 0; e < inst.m(); ++e) {
      bounded &= inst.bounds.f[e].is_finite() && inst.bounds.g[e].is_finite();
    }

    const FeasCert cert = CheckFeasible(inst);
    if (bounded || !cert.feasible) {
      record("feasibility", cert.feasible == !points.empty(),
             {{"engine", cert.feasible}, {"enumerated_points", points.size()}});
    } else {
      record("feasibility", !points.empty() || !cert.feasible,
             {{"engine", cert.feasible}, {"window_points", points.size()}});
    }
    if (cert.feasible) record("witness_in_Q", oracle::InQ(inst, cert.witness));

    if (cert.feasible && !points.empty()) {
      const JumpStructure js = BuildJumpStructure(inst);
      const auto circuit = HasBlockingDicircuit(js, inst.F);
      if (circuit) {
        bool improves = true;
        for (const ArcVec& z : points) {
          ArcVec z2 = ImproveAlongCircuit(js, *circuit, inst.F, z);
          improves &= oracle::InQ(inst, z2) &&
                      DecminCompare(RestrictTo(z2, inst.F), RestrictTo(z, inst.F)) ==
                          std::strong_ordering::less;
        }
        record("no_decmin_improvement", improves, {{"points", points.size()}});
      } else if (!bounded) {
        const Instance fin = FinitizeBounds(inst);
        const SolveResult solved = SolveDecmin(fin);
        const auto near = oracle::EnumerateQ(
            inst, oracle::WindowAround(solved.witness, 3, inst.bounds), budget);
        const auto best = oracle::Profile(solved.witness, inst.F);
        bool ok = oracle::InQ(inst, solved.witness);
        for (const ArcVec& z : near) ok &= !(oracle::Profile(z, inst.F) < best);
        record("decmin_in_window", ok, {{"radius", 3}, {"points", near.size()}});
      } else {
        // Strong and weak duality, and the fixed point, for L = live arcs of F.
        ArcSet L;
        for (ArcId e : inst.F) {
          if (inst.bounds.f[e] < inst.bounds.g[e]) L.push_back(e);
        }
        const LupminResult lup = LupminSolve(inst, L);
        const std::int64_t brute = oracle::BruteLupmin(points, inst.bounds, L);
        json detail = {{"L", ArcList(file, L)}, {"engine", lup.min_saturated}, {"brute", brute}};
        bool strong = lup.min_saturated == brute &&
                      oracle::ChainObjective(inst, L, lup.chain) == ExtInt(brute);
        if (inst.n() <= 5) {
          const oracle::ChainMax cm = oracle::BruteChainMax(inst, L);
          detail["chain_max"] = ExtJson(cm.value);
          strong &= cm.value == ExtInt(brute);
          bool weak = true;
          for (const auto& chain : oracle::AllChains(inst.n())) {
            weak &= !(ExtInt(brute) < oracle::ChainObjective(inst, L, chain));
          }
          record("weak_duality", weak);
        }
        record("strong_duality", strong, detail);

        Instance face = inst;
        face.bounds = lup.bounds;
        face.base = FaceContract(inst.base, lup.chain);
        auto lhs = oracle::BruteLupminimizers(points, inst.bounds, L);
        auto rhs = oracle::EnumerateQ(face, window, budget);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        record("upper_minimizer_fixed_point", lhs == rhs, {{"points", lhs.size()}});

        const SolveResult solved = SolveDecmin(inst);
        auto dec = oracle::BruteDecmin(points, inst.F);
        auto face_pts = oracle::EnumerateQ(solved.final_instance, window, budget);
        std::sort(dec.begin(), dec.end());
        std::sort(face_pts.begin(), face_pts.end());
        bool narrow = true;
        for (ArcId e : inst.F) {
          ExtInt w = solved.bounds_star.g[e] - solved.bounds_star.f[e];
          narrow &= !(w < ExtInt(0)) && !(ExtInt(1) < w);
        }
        record("decmin_set", dec == face_pts, {{"points", dec.size()}});
        record("narrow_box", narrow);

        const ArcSet live = StripTight(inst.F, inst.bounds);
        if (!live.empty()) {
          const BetaResult beta = ComputeBeta(inst);
          const std::int64_t bb = oracle::BruteBeta(points, live);
          record("beta_F", beta.beta_F && *beta.beta_F == bb,
                 {{"engine", beta.beta_F ? json(*beta.beta_F) : json(nullptr)}, {"brute", bb}});
        }
        if (!inst.F.empty()) {
          std::set<std::vector<std::int64_t>> a;
          std::set<std::vector<std::int64_t>> c;
          for (const ArcVec& x : oracle::ConvexCostMin(points, inst.F)) a.insert(oracle::Profile(x, inst.F));
          for (const ArcVec& x : dec) c.insert(oracle::Profile(x, inst.F));
          record("convex_cost", a == c);
        }
        if (inst.cost) {
          const ArcVec x = SolveMinCostDecmin(solved, *inst.cost);
          const std::int64_t want = oracle::BruteMinCost(dec, *inst.cost);
          record("min_cost_decmin", oracle::Cost(x, *inst.cost) == want &&
                                        std::binary_search(dec.begin(), dec.end(), x),
                 {{"engine", oracle::Cost(x, *inst.cost)}, {"brute", want}});
        }
      }
    }
    CmdResult r;
    r.exit_code = all_ok ? kExitOk : kExitMismatch;
    r.out = {{"ok", all_ok}, {"checks", checks}};
    if (!all_ok) r.diagnostics = "verification mismatch";
    return r;
  });
}

}  // namespace fairflow::io
