#ifndef FAIRFLOW_IO_H_
#define FAIRFLOW_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fairflow/baseflow.h"
#include "fairflow/orient.h"

namespace fairflow::io {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitNoDecmin = 4;
inline constexpr int kExitMismatch = 5;

struct BaseSpec {
  enum class Kind { kZero, kTable, kPoints };
  Kind kind = Kind::kZero;
  std::vector<ExtInt> table;    // kTable, indexed by mask
  std::vector<NodeVec> points;  // kPoints
};

struct MixedSpec {
  std::vector<std::pair<int, int>> directed;
  std::vector<std::pair<int, int>> undirected;
  std::optional<DegreeBounds> degree_bounds;
  std::optional<ArcVec> cost;
};

struct InstanceFile {
  std::vector<std::string> nodes;
  std::vector<std::string> arc_ids;
  Instance instance;
  BaseSpec base;
  std::optional<MixedSpec> mixed;
  std::optional<int> k;

  std::string ArcName(ArcId e) const { return arc_ids.at(e); }
  json SetJson(Subset z) const;  // node names in node order
};

// Throws InputError on any schema or validation problem.
InstanceFile Parse(const json& doc);
InstanceFile ParseText(const std::string& text);
json Serialize(const InstanceFile& file);

json ExtJson(ExtInt v);

struct CmdResult {
  int exit_code = kExitOk;
  json out;               // printed on stdout
  std::string diagnostics;  // printed on stderr
};

CmdResult CmdCheck(const std::string& text);
CmdResult CmdSolve(const std::string& text, bool min_cost, bool trace);
CmdResult CmdOrient(const std::string& text, std::optional<int> k);
CmdResult CmdVerify(const std::string& text, std::uint64_t budget);

}  // namespace fairflow::io

#endif  // FAIRFLOW_IO_H_
