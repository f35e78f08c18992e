#include "infocost_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "infocost/costs.hpp"
#include "infocost/error.hpp"
#include "infocost/io.hpp"
#include "infocost/properties.hpp"
#include "infocost/solver.hpp"

namespace infocost::cli {

namespace {

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      fail(ErrorCode::ParseError, "not a number list: \"" + text + "\"");
    out.push_back(x);
  }
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

struct CostArgs {
  std::string experiment, beta, prior, format = "json", out;
};

int run_cost(const CostArgs& a, std::ostream& out) {
  const Experiment mu = parse_experiment(read_file(a.experiment));
  const BetaMatrix beta = parse_beta(read_file(a.beta), mu.states());
  const double cost = llr_cost(mu, beta);
  const auto terms = llr_cost_terms(mu, beta);
  const auto& labels = mu.states().labels();

  bool has_prior = !a.prior.empty();
  double via = 0.0;
  if (has_prior) via = llr_cost_via_posteriors(mu, beta, parse_list(a.prior));

  std::ostringstream os;
  if (a.format == "csv") {
    os << "state_i,state_j,beta,kl,term\n";
    for (const auto& t : terms)
      os << labels[t.i] << ',' << labels[t.j] << ',' << format_number(t.beta) << ','
         << format_number(t.kl) << ',' << format_number(t.term) << '\n';
    os << "cost,,,," << format_number(cost) << '\n';
    if (has_prior) {
      os << "via_posteriors,,,," << format_number(via) << '\n';
      os << "agreement_delta,,,," << format_number(std::abs(cost - via)) << '\n';
    }
  } else {
    // Built by hand to keep the key order stable and the numbers at full precision.
    os << "{\n  \"cost\": " << format_number(cost);
    if (has_prior) {
      os << ",\n  \"via_posteriors\": " << format_number(via);
      os << ",\n  \"agreement_delta\": " << format_number(std::abs(cost - via));
    }
    os << ",\n  \"terms\": [";
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& t = terms[k];
      os << (k ? ",\n" : "\n") << "    {\"i\": \"" << labels[t.i] << "\", \"j\": \"" << labels[t.j]
         << "\", \"beta\": " << format_number(t.beta) << ", \"kl\": " << format_number(t.kl)
         << ", \"term\": " << format_number(t.term) << "}";
    }
    os << "\n  ]\n}\n";
  }
  emit(os.str(), a.out, out);
  return kOk;
}

struct SolveArgs {
  std::string problem, cost = "llr", beta, out;
  double lambda = 0.0;
  double tol = 1e-8;
  int max_iterations = 200000;
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const DecisionProblem problem = parse_problem(read_file(a.problem));
  const SolveOptions opts{a.tol, a.max_iterations};
  SolveResult result;
  if (a.cost == "llr") {
    if (a.beta.empty()) fail(ErrorCode::InvalidArgument, "--cost llr requires --beta");
    result = solve_llr(problem, parse_beta(read_file(a.beta), problem.states), opts);
  } else {
    if (!(a.lambda > 0.0)) fail(ErrorCode::InvalidArgument, "--cost mi requires --lambda > 0");
    result = solve_mutual_information(problem, a.lambda, opts);
  }
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';
  emit(to_json(result, problem) + "\n", a.out, out);
  if (!result.converged) {
    err << "error: NotConverged: solver stopped after " << result.iterations
        << " iterations with residual " << format_number(result.foc_residual) << '\n';
    return kNotConverged;
  }
  return kOk;
}

struct CheckArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 1000;
  bool inject_negative_beta = false;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const CheckOptions opts{a.seed, a.trials, a.inject_negative_beta};
  std::vector<PropertyResult> results;
  if (a.suite == "axioms" || a.suite == "all") results = run_axiom_suite(opts);
  if (a.suite == "appendix" || a.suite == "all") {
    auto more = run_appendix_suite(opts);
    results.insert(results.end(), more.begin(), more.end());
  }
  out << "suite,property,trials,max_deviation,tolerance,status\n";
  for (const auto& r : results)
    out << r.suite << ',' << r.name << ',' << r.trials << ',' << format_number(r.max_deviation)
        << ',' << format_number(r.tolerance) << ',' << (r.passed ? "PASS" : "FAIL") << '\n';
  return all_passed(results) ? kOk : kPropertyViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Log-likelihood-ratio information costs", "infocost"};
  app.require_subcommand(1);

  CostArgs cost;
  auto* cost_cmd = app.add_subcommand("cost", "LLR cost of an experiment with its pair decomposition");
  cost_cmd->add_option("--experiment", cost.experiment, "experiment JSON")->required();
  cost_cmd->add_option("--beta", cost.beta, "beta JSON")->required();
  cost_cmd->add_option("--prior", cost.prior, "comma-separated prior; adds the posterior check");
  cost_cmd->add_option("--format", cost.format)->check(CLI::IsMember({"json", "csv"}));
  cost_cmd->add_option("--out", cost.out, "output path (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "optimal choice rule of a decision problem");
  solve_cmd->add_option("--problem", solve.problem, "decision problem JSON")->required();
  solve_cmd->add_option("--cost", solve.cost)->check(CLI::IsMember({"llr", "mi"}));
  solve_cmd->add_option("--beta", solve.beta, "beta JSON (llr)");
  solve_cmd->add_option("--lambda", solve.lambda, "information price (mi)");
  solve_cmd->add_option("--tol", solve.tol)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-iter", solve.max_iterations)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", solve.out, "output path (default stdout)");

  std::string name;
  ReproduceParams params;
  std::string reproduce_out;
  auto* rep_cmd = app.add_subcommand("reproduce", "CSV for coinflip, perception, gdp or swans");
  rep_cmd->add_option("name", name)->required();
  rep_cmd->add_option("--kappa", params.kappa)->check(CLI::PositiveNumber);
  rep_cmd->add_option("--lambda", params.lambda)->check(CLI::PositiveNumber);
  rep_cmd->add_option("--p", params.p, "coin accuracy");
  rep_cmd->add_option("--r", params.r)->check(CLI::Range(1, 50));
  rep_cmd->add_option("--k", params.k)->check(CLI::Range(1, 100000));
  rep_cmd->add_option("--epsilon", params.epsilon);
  rep_cmd->add_option("--out", reproduce_out, "output path (default stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "run property suites on random instances");
  check_cmd->add_option("--suite", check.suite)->check(CLI::IsMember({"axioms", "appendix", "all"}));
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--trials", check.trials)->check(CLI::PositiveNumber);
  check_cmd->add_flag("--inject-negative-beta", check.inject_negative_beta)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*cost_cmd) return run_cost(cost, out);
    if (*solve_cmd) return run_solve(solve, out, err);
    if (*rep_cmd) {
      emit(reproduce_csv(name, params), reproduce_out, out);
      return kOk;
    }
    return run_check(check, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NotConverged ? kNotConverged : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace infocost::cli
