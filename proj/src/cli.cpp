#include "latgb/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "latgb/fan.hpp"
#include "latgb/io.hpp"
#include "latgb/ip.hpp"
#include "latgb/lattice.hpp"
#include "latgb/walk.hpp"

namespace latgb::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  std::string order_c;
  std::string source_c;
  std::string target_c;
  std::string grading_path;
  std::string matrix_path;
  std::string truncate_linear;
  std::string delta = "3/4";
  std::string method = "direct";
  Int truncate_b = -1;
  bool has_truncate_b = false;
  bool truncate_flag = false;
  bool stats = false;
  bool graph = false;
  Int max_cells = 100000;
};

std::unique_ptr<std::istream> open_file(const std::string& path) {
  auto f = std::make_unique<std::ifstream>(path);
  if (!*f) throw InputError("cannot open input file: " + path);
  return f;
}

/// Resolves the command's input stream: a file path or "-" for stdin.
std::istream& resolve_input(const Options& o, std::istream& stdin_stream,
                            std::unique_ptr<std::istream>& holder) {
  if (o.input == "-" || o.input.empty()) return stdin_stream;
  holder = open_file(o.input);
  return *holder;
}

std::ostream& resolve_output(const Options& o, std::ostream& stdout_stream,
                             std::unique_ptr<std::ofstream>& holder) {
  if (o.output.empty()) return stdout_stream;
  holder = std::make_unique<std::ofstream>(o.output);
  if (!*holder) throw InputError("cannot open output file: " + o.output);
  return *holder;
}

IntMat load_matrix(const std::string& path) {
  const auto f = open_file(path);
  return io::read_matrix(*f);
}

/// Truncating predicate from the flags; requires a grading when truncating.
TruncatingPredicate make_truncation(const Options& o) {
  if (o.has_truncate_b && !o.truncate_linear.empty())
    throw InputError("give at most one of --truncate-b and --truncate-linear");
  if (o.has_truncate_b) return TruncatingPredicate::rhs_bound(o.truncate_b);
  if (!o.truncate_linear.empty()) {
    const IntVec all = io::parse_int_list(o.truncate_linear);
    if (all.size() < 2) throw InputError("--truncate-linear needs a functional and a bound");
    const IntVec h = all.head(all.size() - 1);
    return TruncatingPredicate::linear_bound(h, all[all.size() - 1], true);
  }
  return TruncatingPredicate::all();
}

/// Weight order from --order-c, or the certificate row h^T A of the grading.
TermOrder make_order(const std::string& order_c, std::optional<Grading>& grading) {
  if (!order_c.empty()) return weight_order(io::parse_int_list(order_c));
  if (!grading) throw InputError("no order given: pass --order-c or a grading");
  const IntVec h = validate_positive_grading(*grading);
  IntVec c0(grading->vars());
  for (Index j = 0; j < grading->vars(); ++j) c0[j] = checked_dot(h, grading->matrix().col(j));
  return weight_order(c0);
}

SolveMethod make_method(const std::string& m) {
  if (m == "direct") return SolveMethod::Direct;
  if (m == "walk") return SolveMethod::Walk;
  throw InputError("unknown method: " + m);
}

std::pair<Int, Int> parse_delta(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    const IntVec v = io::parse_int_list(s);
    if (v.size() != 1) throw InputError("malformed delta: " + s);
    return {v[0], 1};
  }
  const IntVec num = io::parse_int_list(s.substr(0, slash));
  const IntVec den = io::parse_int_list(s.substr(slash + 1));
  if (num.size() != 1 || den.size() != 1) throw InputError("malformed delta: " + s);
  return {num[0], den[0]};
}

/// Element vectors sorted ascending by head monomial under ord (lex on raw
/// vectors breaks exact head ties); the order bases are printed in.
std::vector<IntVec> print_sorted(const std::vector<Binomial>& elements, const TermOrder& ord) {
  std::vector<IntVec> vs;
  vs.reserve(elements.size());
  for (const Binomial& e : elements) vs.push_back(e.vec());
  std::sort(vs.begin(), vs.end(), [&](const IntVec& u, const IntVec& v) {
    const Cmp c = compare(ord, pos_part(u), pos_part(v));
    if (c != Cmp::Equal) return c == Cmp::Less;
    return lex_less(u, v);
  });
  return vs;
}

std::string engine_stats_line(const EngineStats& st, std::int64_t ms) {
  std::ostringstream s;
  s << "pairs=" << st.pairs_considered << " discarded=" << st.pairs_discarded
    << " max_gb=" << st.max_basis << " reductions=" << st.reductions << " ms=" << ms;
  return s.str();
}

std::string walk_stats_line(const WalkStats& st, std::int64_t ms) {
  std::ostringstream s;
  s << "facets=" << st.facets_crossed << " max_gb=" << st.max_basis
    << " reductions=" << st.reductions << " ms=" << ms;
  return s.str();
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

/// Shared generator/grading resolution for gbasis and fan: either --matrix
/// (kernel + LLL + the matrix as grading) or an input vector list with
/// --grading.
struct GenSource {
  std::vector<IntVec> gens;
  std::optional<Grading> grading;
};

GenSource resolve_gens(const Options& o, std::istream& stdin_stream) {
  GenSource src;
  if (!o.matrix_path.empty()) {
    if (o.input != "-") throw InputError("give either --matrix or an input vector list");
    const IntMat a = load_matrix(o.matrix_path);
    src.gens = lll_reduce(kernel_basis(a)).vectors;
    src.grading = Grading(a);
    return src;
  }
  std::unique_ptr<std::istream> holder;
  std::istream& in = resolve_input(o, stdin_stream, holder);
  src.gens = io::read_vectors(in);
  if (!o.grading_path.empty()) src.grading = Grading(load_matrix(o.grading_path));
  return src;
}

}  // namespace

RunReport run_report(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  RunReport report;
  CLI::App app{"exact lattice ideal toolkit: truncated Groebner bases, walks, fans, knapsacks"};
  app.name("latgb");
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input) cmd->add_option("input", o.input, "input file, or - for stdin");
    cmd->add_option("--output", o.output, "write results to a file instead of stdout");
    cmd->add_flag("--stats", o.stats, "print a stats line to stderr");
  };
  auto add_truncation = [&](CLI::App* cmd) {
    cmd->add_option("--truncate-b", o.truncate_b, "right hand side truncation bound (inclusive)")
        ->each([&](const std::string&) { o.has_truncate_b = true; });
    cmd->add_option("--truncate-linear", o.truncate_linear,
                    "linear truncation \"h1 ... hd B\": keep degrees with h . s <= B");
  };

  CLI::App* kernel = app.add_subcommand("kernel", "integer kernel basis of a matrix");
  add_common(kernel);

  CLI::App* lll = app.add_subcommand("lll", "LLL-reduce a list of independent vectors");
  add_common(lll);
  lll->add_option("--delta", o.delta, "LLL parameter as a fraction p/q in (1/4, 1)");

  CLI::App* saturate_cmd = app.add_subcommand(
      "saturate", "reduced Groebner basis of the saturated lattice ideal of the input vectors");
  add_common(saturate_cmd);
  saturate_cmd->add_option("--grading", o.grading_path, "grading matrix file");
  saturate_cmd->add_option("--order-c", o.order_c, "weight vector of the term order");

  CLI::App* gbasis = app.add_subcommand(
      "gbasis", "reduced (truncated) Groebner basis from a matrix or a vector list");
  add_common(gbasis);
  gbasis->add_option("--matrix", o.matrix_path, "defining matrix (kernel, LLL, saturate)");
  gbasis->add_option("--grading", o.grading_path, "grading matrix file");
  gbasis->add_option("--order-c", o.order_c, "weight vector of the term order");
  add_truncation(gbasis);

  CLI::App* walk = app.add_subcommand(
      "walk", "walk a minimal Groebner basis from a source order to a target order");
  add_common(walk);
  walk->add_option("--source-c", o.source_c, "source weight vector")->required();
  walk->add_option("--target-c", o.target_c, "target weight vector")->required();
  walk->add_option("--grading", o.grading_path, "grading matrix file");
  add_truncation(walk);

  CLI::App* fan = app.add_subcommand("fan", "enumerate the (truncated) Groebner fan");
  add_common(fan);
  fan->add_option("--matrix", o.matrix_path, "defining matrix (kernel, LLL, saturate)");
  fan->add_option("--grading", o.grading_path, "grading matrix file");
  fan->add_flag("--graph", o.graph, "also print the cell adjacency graph");
  fan->add_option("--max-cells", o.max_cells, "cell cap before aborting");
  add_truncation(fan);

  CLI::App* feasible = app.add_subcommand("feasible", "find x >= 0 with a . x = b");
  add_common(feasible);
  feasible->add_option("--method", o.method, "direct or walk");
  feasible->add_flag("--truncate", o.truncate_flag, "truncate the basis at b");

  CLI::App* optimize_cmd =
      app.add_subcommand("optimize", "maximize c . x subject to a . x = b, x >= 0");
  add_common(optimize_cmd);
  optimize_cmd->add_option("--method", o.method, "direct or walk");
  optimize_cmd->add_flag("--truncate", o.truncate_flag, "truncate the test set at b");

  try {
    // CLI11's vector overload consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    help << app.help();
    out << help.str();
    report.exit_code = 0;
    return report;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    report.exit_code = 2;
    return report;
  }

  Timer timer;
  try {
    std::unique_ptr<std::ofstream> out_holder;
    std::ostream& os = resolve_output(o, out, out_holder);

    if (kernel->parsed()) {
      report.command = "kernel";
      std::unique_ptr<std::istream> holder;
      const IntMat a = io::read_matrix(resolve_input(o, in, holder));
      const LatticeBasis kb = kernel_basis(a);
      io::write_vectors(os, kb.vectors, a.cols());
      report.stats = "ms=" + std::to_string(timer.ms());
    } else if (lll->parsed()) {
      report.command = "lll";
      std::unique_ptr<std::istream> holder;
      Index n = 0;
      const std::vector<IntVec> vs = io::read_vectors(resolve_input(o, in, holder), &n);
      const auto [dn, dd] = parse_delta(o.delta);
      const LatticeBasis red = lll_reduce(LatticeBasis{vs}, dn, dd);
      io::write_vectors(os, red.vectors, n);
      report.stats = "ms=" + std::to_string(timer.ms());
    } else if (saturate_cmd->parsed()) {
      report.command = "saturate";
      std::unique_ptr<std::istream> holder;
      const std::vector<IntVec> vs = io::read_vectors(resolve_input(o, in, holder));
      std::optional<Grading> grading;
      if (!o.grading_path.empty()) grading = Grading(load_matrix(o.grading_path));
      const TermOrder ord = make_order(o.order_c, grading);
      EngineStats st;
      const GroebnerBasis g = saturate(LatticeBasis{vs}, ord, grading, &st);
      io::write_vectors(os, print_sorted(g.elements, ord), ord.vars());
      report.stats = engine_stats_line(st, timer.ms());
    } else if (gbasis->parsed()) {
      report.command = "gbasis";
      GenSource src = resolve_gens(o, in);
      const TruncatingPredicate omega = make_truncation(o);
      const TermOrder ord = make_order(o.order_c, src.grading);
      EngineStats st;
      const GroebnerBasis g = truncated_buchberger(src.gens, ord, omega, src.grading, &st);
      io::write_vectors(os, print_sorted(g.elements, ord), ord.vars());
      report.stats = engine_stats_line(st, timer.ms());
    } else if (walk->parsed()) {
      report.command = "walk";
      std::unique_ptr<std::istream> holder;
      const std::vector<IntVec> vs = io::read_vectors(resolve_input(o, in, holder));
      std::optional<Grading> grading;
      if (!o.grading_path.empty()) grading = Grading(load_matrix(o.grading_path));
      const TruncatingPredicate omega = make_truncation(o);
      const WalkContext ctx{weight_order(io::parse_int_list(o.source_c)),
                            weight_order(io::parse_int_list(o.target_c))};
      // The walk wants a source-order Groebner basis, not raw lattice
      // vectors; compute it first.
      const GroebnerBasis start = truncated_buchberger(vs, ctx.source, omega, grading);
      std::vector<IntVec> sv;
      sv.reserve(start.elements.size());
      for (const Binomial& e : start.elements) sv.push_back(e.vec());
      WalkStats st;
      const GroebnerBasis g = generic_walk(sv, ctx, omega, grading, &st);
      io::write_vectors(os, print_sorted(g.elements, ctx.target), ctx.target.vars());
      report.stats = walk_stats_line(st, timer.ms());
    } else if (fan->parsed()) {
      report.command = "fan";
      GenSource src = resolve_gens(o, in);
      if (!src.grading) throw InputError("fan needs --matrix or --grading");
      const TruncatingPredicate omega = make_truncation(o);
      FanLimits lim;
      if (o.max_cells < 1) throw InputError("--max-cells must be positive");
      lim.max_cells = static_cast<Index>(o.max_cells);
      FanStats st;
      const FanResult fr = enumerate_fan(src.gens, *src.grading, omega, lim, &st);
      os << "cells = " << fr.cells.size() << "\n";
      for (std::size_t i = 0; i < fr.cells.size(); ++i) {
        const FanCell& cell = fr.cells[i];
        os << "cell " << i << " size " << cell.basis.elements.size() << "\n";
        for (const Binomial& e : cell.basis.elements) {
          for (Index j = 0; j < e.vec().size(); ++j) os << (j ? " " : "") << e.vec()[j];
          os << "\n";
        }
      }
      if (o.graph) {
        os << "edges = " << fr.edges.size() << "\n";
        for (const auto& [a, b] : fr.edges) os << a << " " << b << "\n";
      }
      std::ostringstream s;
      s << "cells=" << st.cells << " flips=" << st.flips << " ms=" << timer.ms();
      report.stats = s.str();
    } else if (feasible->parsed()) {
      report.command = "feasible";
      std::unique_ptr<std::istream> holder;
      const io::Instance inst = io::read_instance(resolve_input(o, in, holder));
      IPRun run;
      const auto x = solve_feasibility(inst.a, inst.b, make_method(o.method), o.truncate_flag,
                                       &run);
      report.stats = make_method(o.method) == SolveMethod::Walk
                         ? walk_stats_line(run.walk, timer.ms())
                         : engine_stats_line(run.engine, timer.ms());
      if (o.stats) err << report.stats << "\n";
      if (!x) {
        err << "infeasible\n";
        report.exit_code = 1;
        return report;
      }
      os << "x =";
      for (Index i = 0; i < x->size(); ++i) os << " " << (*x)[i];
      os << "\n";
    } else if (optimize_cmd->parsed()) {
      report.command = "optimize";
      std::unique_ptr<std::istream> holder;
      const io::Instance inst = io::read_instance(resolve_input(o, in, holder));
      if (!inst.c) throw InputError("optimize needs a cost row in the instance file");
      const SolveMethod method = make_method(o.method);
      IPRun run;
      const auto x0 = solve_feasibility(inst.a, inst.b, method, o.truncate_flag, &run);
      report.stats = method == SolveMethod::Walk ? walk_stats_line(run.walk, timer.ms())
                                                 : engine_stats_line(run.engine, timer.ms());
      if (!x0) {
        if (o.stats) err << report.stats << "\n";
        err << "infeasible\n";
        report.exit_code = 1;
        return report;
      }
      const IntVec xopt = optimize(inst.a, inst.b, *inst.c, *x0, o.truncate_flag, method, &run);
      report.stats = method == SolveMethod::Walk ? walk_stats_line(run.walk, timer.ms())
                                                 : engine_stats_line(run.engine, timer.ms());
      if (o.stats) err << report.stats << "\n";
      os << "x =";
      for (Index i = 0; i < xopt.size(); ++i) os << " " << xopt[i];
      os << "\n";
      os << "value = " << checked_dot(*inst.c, xopt) << "\n";
      return report;
    }

    if (o.stats && report.command != "feasible" && report.command != "optimize")
      err << report.stats << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    report.exit_code = e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    report.exit_code = 2;
  }
  return report;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  return run_report(args, in, out, err).exit_code;
}

}  // namespace latgb::cli
