#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fairflow/io.h"

int main(int argc, char** argv) {
  namespace io = fairflow::io;
  CLI::App app{"Decreasingly minimal integral submodular flows"};
  app.require_subcommand(1);
  std::string path;
  bool min_cost = false;
  bool trace = false;
  std::optional<int> k;
  std::uint64_t budget = 10'000'000;

  CLI::App* check = app.add_subcommand("check", "feasibility with witness or violator");
  CLI::App* solve = app.add_subcommand("solve", "dec-min bounds, face chains and witness");
  CLI::App* orient = app.add_subcommand("orient", "dec-min k-edge-connected orientation");
  CLI::App* verify = app.add_subcommand("verify", "cross-check the engine against brute force");
  for (CLI::App* sub : {check, solve, orient, verify}) {
    sub->add_option("file", path, "instance JSON")->required();
  }
  solve->add_flag("--min-cost", min_cost, "cheapest dec-min flow under the arc costs");
  solve->add_flag("--trace", trace, "per-phase certificates");
  orient->add_option("--k", k, "connectivity target (overrides the file)");
  verify->add_option("--budget", budget, "enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : io::kExitInput;
  }

  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return io::kExitInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  io::CmdResult r;
  try {
    if (*check) r = io::CmdCheck(buf.str());
    if (*solve) r = io::CmdSolve(buf.str(), min_cost, trace);
    if (*orient) r = io::CmdOrient(buf.str(), k);
    if (*verify) r = io::CmdVerify(buf.str(), budget);
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 1;
  }
  std::cout << r.out.dump(2) << "\n";
  if (!r.diagnostics.empty()) std::cerr << r.diagnostics << "\n";
  return r.exit_code;
}
