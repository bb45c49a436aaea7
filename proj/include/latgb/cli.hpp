#pragma once

#include <iosfwd>
#include <string>
#include <vector>

/// Command line front end.  run() never throws; every library error maps to
/// the documented exit code (0 ok, 1 infeasible, 2 malformed input,
/// 3 overflow, 4 termination certificate failure).
namespace latgb::cli {

struct RunReport {
  std::string command;
  int exit_code = 0;
  std::string stats;  // stats line (also printed to err under --stats)
};

RunReport run_report(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                     std::ostream& err);

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latgb::cli
