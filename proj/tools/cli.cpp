#include "cli.hpp"

#include "document.hpp"
#include "helmlayer/kernels.hpp"
#include "helmlayer/render.hpp"
#include "helmlayer/solver.hpp"
#include "helmlayer/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace helmlayer::cli {

namespace {

using io::json;

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    return json::parse(file);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

std::map<std::string, std::string> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, std::string> kv;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ParseError("--at expects name=value pairs, got '" + part + "'");
      kv[part.substr(0, eq)] = part.substr(eq + 1);
    }
  }
  return kv;
}

double parse_number(const std::string& name, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("--at: '" + name + "' is not a number: '" + text + "'");
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.15g", v);
  return buf;
}

struct SolveOptions {
  std::string input;
  std::string output;
  bool particular_only = false;
};

int cmd_solve(const SolveOptions& o, std::istream& in, std::ostream& out) {
  const ProblemSpec spec = io::parse_problem(read_json(o.input, in));
  io::SolutionDocument doc;
  if (o.particular_only) {
    doc.u = particular_solution(spec);
  } else {
    Solution sol = solve(spec);
    doc.u = std::move(sol.u);
    doc.uniqueness = sol.uniqueness;
    doc.warnings = std::move(sol.warnings);
  }
  write_text(o.output, io::solution_to_json(doc).dump(2) + "\n", out);
  return kOk;
}

struct VerifyOptions {
  std::string input;
  std::string output;
  std::string check_solution;
  std::string poisson_limit;
  std::size_t grid = 5;
  VerifyTolerances tol;
};

int cmd_verify(const VerifyOptions& o, std::istream& in, std::ostream& out) {
  const ProblemSpec spec = io::parse_problem(read_json(o.input, in));
  QuasiPoly u;
  if (!o.check_solution.empty()) {
    u = io::parse_solution(read_json(o.check_solution, in)).u;
    if (u.mode() != spec.mode || u.dimension() != spec.n || u.basis() != basis_for(spec.bc))
      throw ParseError("solution document does not match the problem's mode, dimension or basis");
  } else {
    u = solve(spec).u;
  }

  const double kappa = spec.kappa.convert_to<double>();
  const double a = spec.a.convert_to<double>();
  const auto points = interior_grid(spec.n, o.grid, kappa, a);
  VerificationReport report = verify_solution(u, spec, points, o.tol);

  if (!o.poisson_limit.empty()) {
    const QuasiPoly limit =
        io::parse_limit_polynomial(read_json(o.poisson_limit, in), spec.n, spec.mode, basis_for(spec.bc));
    const LimitReport lr = poisson_limit_check(u, limit, points, o.tol);
    double worst = 0.0;
    for (const LimitPoint& p : lr.points) worst = std::max(worst, p.discrepancy[2]);
    std::ostringstream detail;
    detail << "max discrepancy at kappa=1e-4: " << format_scientific(worst) << " over " << lr.points.size() << " points";
    report.checks.push_back({"poisson_limit", lr.passed, detail.str()});
  }

  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  const json doc = {{"passed", report.passed()}, {"checks", checks}};
  write_text(o.output, doc.dump(2) + "\n", out);
  return report.passed() ? kOk : kVerificationFailed;
}

struct EvalOptionsCli {
  std::string input;
  std::vector<std::string> at;
};

int cmd_eval(const EvalOptionsCli& o, std::istream& in, std::ostream& out) {
  const json doc = read_json(o.input, in);
  QuasiPoly u;
  std::optional<double> kappa, a;
  if (io::is_solution_document(doc)) {
    u = io::parse_solution(doc).u;
  } else {
    const ProblemSpec spec = io::parse_problem(doc);
    u = solve(spec).u;
    kappa = spec.kappa.convert_to<double>();
    a = spec.a.convert_to<double>();
  }

  auto kv = parse_assignments(o.at);
  EvalPoint pt;
  pt.x.assign(u.dimension(), 0.0);
  for (const auto& [name, value] : kv) {
    const double v = parse_number(name, value);
    if (name == "y") {
      pt.y = v;
    } else if (name == "kappa" || name == "lambda" || name == "mu") {
      kappa = v;
    } else if (name == "a") {
      a = v;
    } else if (name == "x" && u.dimension() == 1) {
      pt.x[0] = v;
    } else if (name.size() > 1 && name[0] == 'x') {
      const std::string digits = name.substr(1);
      if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
        throw ParseError("--at: unknown coordinate '" + name + "'");
      const std::size_t i = std::stoul(digits);
      if (i < 1 || i > u.dimension()) throw ParseError("--at: axis '" + name + "' out of range");
      pt.x[i - 1] = v;
    } else {
      throw ParseError("--at: unknown coordinate '" + name + "'");
    }
  }
  if (!kappa || !a) throw ParseError("--at: kappa and a are required for solution documents");
  if (!(*kappa > 0.0) || !(*a > 0.0)) throw ParseError("--at: kappa and a must be positive");
  pt.kappa = *kappa;
  pt.a = *a;
  out << format_value(eval(u, pt)) << "\n";
  return kOk;
}

struct KernelOptions {
  std::string family = "dirichlet";
  std::string side = "p";
  std::string mode = "hyperbolic";
  int m = 0;
  std::size_t dimension = 1;
  std::string format = "text";
};

int cmd_kernels(const KernelOptions& o, std::ostream& out) {
  KernelFamily f;
  f.problem = io::parse_problem_kind(o.family);
  f.mode = io::parse_mode(o.mode);
  if (o.side == "p") {
    f.side = Side::PFamily;
  } else if (o.side == "q") {
    f.side = Side::QFamily;
  } else {
    throw ParseError("unknown side '" + o.side + "' (expected p|q)");
  }
  if (f.problem == Problem::Dirichlet && f.side == Side::QFamily)
    throw ParseError("the Dirichlet problem has no q-kernel family");
  if (o.m < 0) throw ParseError("--m must be non-negative");
  const QuasiPoly k = p2m(f, o.m, o.dimension);
  if (o.format == "json") {
    out << io::solution_to_json(io::SolutionDocument{k, std::nullopt, {}}).dump(2) << "\n";
  } else {
    out << "text:  " << render_text(k) << "\n";
    out << "latex: " << render_latex(k) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quasipolynomial solutions of Helmholtz boundary-value problems in a layer"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem document and print the solution document");
  solve_cmd->add_option("-i,--input", solve_opts.input, "Problem document (default: stdin)");
  solve_cmd->add_option("-o,--output", solve_opts.output, "Output path (default: stdout)");
  solve_cmd->add_flag("--particular-only", solve_opts.particular_only,
                      "Emit only the polynomial particular solution");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Solve (or load) and certify a solution");
  verify_cmd->add_option("-i,--input", verify_opts.input, "Problem document (default: stdin)");
  verify_cmd->add_option("-o,--output", verify_opts.output, "Report path (default: stdout)");
  verify_cmd->add_option("--check-solution", verify_opts.check_solution,
                         "Verify this solution document instead of solving");
  verify_cmd->add_option("--poisson-limit", verify_opts.poisson_limit,
                         "Limit polynomial document to compare against as kappa -> 0");
  verify_cmd->add_option("--grid", verify_opts.grid, "Grid nodes per axis for FD residuals")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--fd-step", verify_opts.tol.fd_step, "Finite-difference step");
  verify_cmd->add_option("--tol-fd", verify_opts.tol.fd_relative, "Relative FD residual tolerance");
  verify_cmd->add_option("--tol-limit", verify_opts.tol.limit_absolute, "Small-kappa limit tolerance");
  verify_cmd->add_option("--tol-limit-order", verify_opts.tol.limit_min_order,
                         "Minimum observed convergence order in kappa");

  EvalOptionsCli eval_opts;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a solution or problem document at a point");
  eval_cmd->add_option("-i,--input", eval_opts.input, "Solution or problem document (default: stdin)");
  eval_cmd->add_option("--at", eval_opts.at, "Coordinates, e.g. x=0.5,y=0.25,kappa=1,a=1")->required();

  KernelOptions kernel_opts;
  auto* kernels_cmd = app.add_subcommand("kernels", "Print a boundary kernel p_2m or q_2m");
  kernels_cmd->add_option("--family", kernel_opts.family, "dirichlet | dirichlet_neumann");
  kernels_cmd->add_option("--side", kernel_opts.side, "p | q");
  kernels_cmd->add_option("--mode", kernel_opts.mode, "hyperbolic | circular");
  kernels_cmd->add_option("--m", kernel_opts.m, "Kernel order m (prints p_2m)");
  kernels_cmd->add_option("--dim", kernel_opts.dimension, "Dimension n")->check(CLI::PositiveNumber);
  kernels_cmd->add_option("--format", kernel_opts.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_opts, in, out);
    if (*verify_cmd) return cmd_verify(verify_opts, in, out);
    if (*eval_cmd) return cmd_eval(eval_opts, in, out);
    if (*kernels_cmd) return cmd_kernels(kernel_opts, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResonanceError& e) {
    err << "error: " << e.what() << "\n";
    return kResonance;
  } catch (const ConditioningError& e) {
    err << "error: " << e.what() << "\n";
    return kResonance;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace helmlayer::cli
