#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "latgb/cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = latgb::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Writes content to a unique temporary file and removes it on destruction.
class TempFile {
public:
  explicit TempFile(const std::string& content) {
    std::random_device rd;
    std::ostringstream name;
    name << "latgb_cli_" << std::hex << rd() << rd() << ".txt";
    path_ = std::filesystem::temp_directory_path() / name.str();
    std::ofstream f(path_);
    f << content;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  std::string path() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

bool starts_with(const std::string& hay, const std::string& prefix) {
  return hay.rfind(prefix, 0) == 0;
}

const std::string kOctagonMatrix = "3 5\n1 1 1 1 1\n0 1 2 1 0\n0 0 1 2 1\n";
const std::string kCurveGrading = "1 3\n1 2 3\n";
const std::string kCurveGens = "3\n-2 1 0\n-3 0 1\n";
const std::string kCurveTargetSorted = "3\n0 -3 2\n1 1 -1\n1 -2 1\n2 -1 0\n";
const std::string kOctagonGenCell = "5\n0 -1 1 -1 1\n2 -1 0 1 -2\n2 -2 1 0 -1\n";

}  // namespace

TEST_CASE("help prints usage and exits zero") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Usage"));
  CHECK(contains(r.out, "gbasis"));
  CHECK(contains(r.out, "optimize"));
}

TEST_CASE("missing, unknown or incomplete commands are usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"kernel", "--bogus"}, "1 2\n2 3\n").code == 2);
  // walk requires both endpoint orders before it reads anything.
  CHECK(run_cli({"walk"}).code == 2);
  CHECK(run_cli({"walk", "--source-c", "1 0 0"}).code == 2);
}

TEST_CASE("kernel computes an integer kernel basis") {
  const CliResult r = run_cli({"kernel"}, "1 2\n2 3\n");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n3 -2\n");
  CHECK(r.err.empty());
}

TEST_CASE("kernel rejects malformed matrices with the documented codes") {
  // Missing entries.
  CliResult r = run_cli({"kernel"}, "2 2\n1 2 3\n");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));
  // Trailing garbage.
  CHECK(run_cli({"kernel"}, "1 2\n2 3 9\n").code == 2);
  // Nonpositive dimensions.
  CHECK(run_cli({"kernel"}, "0 2\n").code == 2);
  // A token outside 64-bit range is an overflow, not a syntax error.
  CHECK(run_cli({"kernel"}, "1 1\n18446744073709551616\n").code == 3);
}

TEST_CASE("lll reduces a basis and validates delta") {
  const CliResult r = run_cli({"lll"}, "2\n2 0\n1 1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n1 1\n1 -1\n");

  const CliResult same = run_cli({"lll", "--delta", "9/10"}, "2\n2 0\n1 1\n");
  CHECK(same.code == 0);
  CHECK(same.out == r.out);

  CHECK(run_cli({"lll", "--delta", "1/1"}, "2\n2 0\n1 1\n").code == 2);
  CHECK(run_cli({"lll", "--delta", "1/4"}, "2\n2 0\n1 1\n").code == 2);
  // Dependent rows are rejected.
  CHECK(run_cli({"lll"}, "2\n1 1\n2 2\n").code == 2);
}

TEST_CASE("saturate needs an order and a termination certificate") {
  const TempFile grading(kCurveGrading);
  const CliResult r =
      run_cli({"saturate", "--order-c", "1 0 0", "--grading", grading.path()}, kCurveGens);
  CHECK(r.code == 0);
  CHECK(r.out == kCurveTargetSorted);

  // The weight order refining (1,0,0) is not global, so without a grading the
  // run fails the termination certificate.
  const CliResult bad = run_cli({"saturate", "--order-c", "1 0 0"}, kCurveGens);
  CHECK(bad.code == 4);
  CHECK(contains(bad.err, "error:"));

  // No order at all: there is nothing to orient by.
  CHECK(run_cli({"saturate"}, kCurveGens).code == 2);

  // A grading alone is enough: the certificate row induces the order.
  const CliResult cert = run_cli({"saturate", "--grading", grading.path()}, kCurveGens);
  CHECK(cert.code == 0);
  CHECK(starts_with(cert.out, "3\n"));
}

TEST_CASE("gbasis equals the kernel | lll | saturate pipeline byte for byte") {
  const TempFile mat(kOctagonMatrix);

  const CliResult k = run_cli({"kernel"}, kOctagonMatrix);
  REQUIRE(k.code == 0);
  const CliResult l = run_cli({"lll"}, k.out);
  REQUIRE(l.code == 0);
  const CliResult s =
      run_cli({"saturate", "--order-c", "3 1 3 1 1", "--grading", mat.path()}, l.out);
  REQUIRE(s.code == 0);

  const CliResult g = run_cli({"gbasis", "--matrix", mat.path(), "--order-c", "3 1 3 1 1"});
  REQUIRE(g.code == 0);
  CHECK(g.out == s.out);
  CHECK(g.out == kOctagonGenCell);
}

TEST_CASE("gbasis flag conflicts and truncation preconditions") {
  const TempFile mat(kOctagonMatrix);
  const TempFile grading(kCurveGrading);

  // --matrix conflicts with a positional input list.
  const CliResult both = run_cli({"gbasis", "input.txt", "--matrix", mat.path()});
  CHECK(both.code == 2);
  CHECK(contains(both.err, "either"));

  // At most one truncation flag.
  CHECK(run_cli({"gbasis", "--grading", grading.path(), "--order-c", "1 0 0", "--truncate-b",
                 "3", "--truncate-linear", "1 3"},
                kCurveGens)
            .code == 2);

  // Truncation without a grading is rejected up front.
  CHECK(run_cli({"gbasis", "--order-c", "0 1 1", "--truncate-b", "3"}, kCurveGens).code == 2);
}

TEST_CASE("gbasis truncates by right hand side degree") {
  const TempFile grading(kCurveGrading);
  const CliResult r = run_cli(
      {"gbasis", "--grading", grading.path(), "--order-c", "1 0 0", "--truncate-b", "3"},
      kCurveGens);
  CHECK(r.code == 0);
  CHECK(r.out == "3\n1 1 -1\n2 -1 0\n");
}

TEST_CASE("walk reproduces the target basis in three crossings") {
  const TempFile grading(kCurveGrading);
  const CliResult r = run_cli({"walk", "--source-c", "-1 0 0", "--target-c", "1 0 0",
                               "--grading", grading.path(), "--stats"},
                              kCurveGens);
  CHECK(r.code == 0);
  CHECK(r.out == kCurveTargetSorted);
  CHECK(starts_with(r.err, "facets=3 "));
  CHECK(contains(r.err, "max_gb="));
  CHECK(contains(r.err, "reductions="));
  CHECK(contains(r.err, "ms="));
}

TEST_CASE("walk truncation matches the degree filter of the target basis") {
  const TempFile grading(kCurveGrading);
  const CliResult r = run_cli({"walk", "--source-c", "-1 0 0", "--target-c", "1 0 0",
                               "--grading", grading.path(), "--truncate-b", "4"},
                              kCurveGens);
  CHECK(r.code == 0);
  CHECK(r.out == "3\n1 1 -1\n1 -2 1\n2 -1 0\n");

  // Truncating without a grading is malformed input.
  CHECK(run_cli({"walk", "--source-c", "-1 0 0", "--target-c", "1 0 0", "--truncate-b", "4"},
                kCurveGens)
            .code == 2);
  // Dimension mismatch between the orders and the vectors.
  CHECK(run_cli({"walk", "--source-c", "-1 0", "--target-c", "1 0 0", "--grading",
                 grading.path()},
                kCurveGens)
            .code == 2);
}

TEST_CASE("fan counts full and truncated cells") {
  const TempFile mat(kOctagonMatrix);

  const CliResult full = run_cli({"fan", "--matrix", mat.path(), "--graph", "--stats"});
  CHECK(full.code == 0);
  CHECK(starts_with(full.out, "cells = 8\n"));
  CHECK(contains(full.out, "edges = 8\n"));
  CHECK(contains(full.err, "cells=8"));
  CHECK(contains(full.err, "flips="));

  const CliResult trunc =
      run_cli({"fan", "--matrix", mat.path(), "--truncate-linear", "1 1 1 6"});
  CHECK(trunc.code == 0);
  CHECK(starts_with(trunc.out, "cells = 6\n"));

  // The cap aborts with a termination failure.
  CHECK(run_cli({"fan", "--matrix", mat.path(), "--max-cells", "3"}).code == 4);
  CHECK(run_cli({"fan", "--matrix", mat.path(), "--max-cells", "0"}).code == 2);

  // Without a matrix there is no grading to sweep.
  const CliResult none = run_cli({"fan"}, kCurveGens);
  CHECK(none.code == 2);
  CHECK(contains(none.err, "fan needs"));
}

TEST_CASE("feasible finds witnesses and reports infeasibility") {
  const CliResult yes = run_cli({"feasible"}, "2\n2 3\n7\n");
  CHECK(yes.code == 0);
  CHECK(yes.out == "x = 2 1\n");

  const CliResult no = run_cli({"feasible"}, "2\n2 3\n1\n");
  CHECK(no.code == 1);
  CHECK(no.out.empty());
  CHECK(contains(no.err, "infeasible"));

  // b = 0 is witnessed by the origin; negative b is infeasible.
  CHECK(run_cli({"feasible"}, "2\n2 3\n0\n").out == "x = 0 0\n");
  CHECK(run_cli({"feasible"}, "2\n2 3\n-4\n").code == 1);

  // Both methods and both truncation settings agree on the fixed case.
  for (const std::string method : {"direct", "walk"}) {
    CHECK(run_cli({"feasible", "--method", method}, "2\n2 3\n7\n").out == yes.out);
    CHECK(run_cli({"feasible", "--method", method, "--truncate"}, "2\n2 3\n7\n").out == yes.out);
    CHECK(run_cli({"feasible", "--method", method, "--truncate"}, "2\n2 3\n1\n").code == 1);
  }

  CHECK(run_cli({"feasible", "--method", "bogus"}, "2\n2 3\n7\n").code == 2);
  CHECK(run_cli({"feasible"}, "2\n2 0\n7\n").code == 2);

  const CliResult stats = run_cli({"feasible", "--method", "walk", "--stats"}, "2\n2 3\n7\n");
  CHECK(starts_with(stats.err, "facets="));
}

TEST_CASE("optimize maximizes the cost over the fiber") {
  const CliResult r = run_cli({"optimize"}, "2\n2 3\n12\n1 1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "x = 6 0\nvalue = 6\n");

  for (const std::string method : {"direct", "walk"}) {
    CHECK(run_cli({"optimize", "--method", method, "--truncate"}, "2\n2 3\n12\n1 1\n").out ==
          r.out);
  }

  const CliResult nocost = run_cli({"optimize"}, "2\n2 3\n12\n");
  CHECK(nocost.code == 2);
  CHECK(contains(nocost.err, "cost"));

  const CliResult infeasible = run_cli({"optimize"}, "2\n2 3\n1\n1 1\n");
  CHECK(infeasible.code == 1);
  CHECK(contains(infeasible.err, "infeasible"));

  // Trailing garbage after the cost row.
  CHECK(run_cli({"optimize"}, "2\n2 3\n7\n1 1 9\n").code == 2);
}

TEST_CASE("--output writes the result to a file instead of stdout") {
  const TempFile out_file("");
  const CliResult r = run_cli({"kernel", "--output", out_file.path()}, "1 2\n2 3\n");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out_file.path()) == "2\n3 -2\n");
}

TEST_CASE("run_report carries the command name and the stats line") {
  const TempFile mat(kOctagonMatrix);
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  const latgb::cli::RunReport rep = latgb::cli::run_report(
      {"gbasis", "--matrix", mat.path(), "--order-c", "3 1 3 1 1", "--stats"}, in, out, err);
  CHECK(rep.exit_code == 0);
  CHECK(rep.command == "gbasis");
  CHECK(starts_with(rep.stats, "pairs="));
  CHECK(contains(rep.stats, "discarded="));
  CHECK(contains(rep.stats, "max_gb="));
  CHECK(contains(rep.stats, "reductions="));
  CHECK(contains(rep.stats, "ms="));
  CHECK(err.str() == rep.stats + "\n");
}
