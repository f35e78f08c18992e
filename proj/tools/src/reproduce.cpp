#include <cmath>
#include <sstream>

#include "infocost/costs.hpp"
#include "infocost/diagnostics.hpp"
#include "infocost/error.hpp"
#include "infocost/io.hpp"
#include "infocost/partition.hpp"
#include "infocost_cli/cli.hpp"

namespace infocost::cli {

namespace {

void row(std::ostringstream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

std::string num(double x) { return format_number(x); }

std::string coinflip(const ReproduceParams& p) {
  if (p.k < 1) fail(ErrorCode::InvalidArgument, "--k must be at least 1");
  const BetaMatrix beta = BetaMatrix::constant(StateSpace::indexed(2), p.kappa);
  std::ostringstream os;
  row(os, {"k", "llr_cost", "mi_cost"});
  for (int k = 1; k <= p.k; ++k)
    row(os, {std::to_string(k), num(coin_flip_llr_cost(p.p, k, beta)),
             num(coin_flip_mutual_information(p.p, k, p.lambda))});
  return os.str();
}

std::string perception(const ReproduceParams& p) {
  const auto llr = psychometric_curve(p.r, p.kappa, CostKind::Llr, p.lambda);
  const auto mi = psychometric_curve(p.r, p.kappa, CostKind::MutualInformation, p.lambda);
  if (!llr.solve.converged || !mi.solve.converged)
    fail(ErrorCode::NotConverged, "perception solve did not converge");
  std::ostringstream os;
  row(os, {"state", "llr_prob_red", "mi_prob_red"});
  for (std::size_t k = 0; k < llr.points.size(); ++k)
    row(os, {std::to_string(llr.points[k].state), num(llr.points[k].prob_red),
             num(mi.points[k].prob_red)});
  return os.str();
}

std::string gdp(const ReproduceParams& p) {
  const InverseSquareGrid grid{20000, 80000, p.kappa};
  std::ostringstream os;
  row(os, {"hypothesis", "partition_coefficient"});
  row(os, {"H1", num(partition_coefficient(grid, GridHypothesis::above(50000)))});
  row(os, {"H2", num(partition_coefficient(grid, GridHypothesis::even()))});
  return os.str();
}

std::string swans(const ReproduceParams& p) {
  std::vector<double> grid;
  if (p.epsilon > 0.0)
    grid.push_back(p.epsilon);
  else
    for (int e = 1; e <= 5; ++e) grid.push_back(std::pow(10.0, -e));
  std::ostringstream os;
  row(os, {"epsilon", "cost_I", "cost_II", "ratio"});
  for (double eps : grid) {
    const AsymmetryCosts c = verification_asymmetry(eps, p.kappa);
    row(os, {num(eps), num(c.cost_falsify), num(c.cost_verify), num(c.cost_verify / c.cost_falsify)});
  }
  return os.str();
}

}  // namespace

std::string reproduce_csv(const std::string& name, const ReproduceParams& params) {
  if (name == "coinflip") return coinflip(params);
  if (name == "perception") return perception(params);
  if (name == "gdp") return gdp(params);
  if (name == "swans") return swans(params);
  fail(ErrorCode::UnknownReproduction, "unknown reproduction \"" + name + "\"");
}

}  // namespace infocost::cli
