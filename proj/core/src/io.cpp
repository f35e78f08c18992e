#include "infocost/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "infocost/error.hpp"
#include "json.hpp"

namespace infocost {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) fail(ErrorCode::ParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

std::vector<std::string> labels(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  return out;
}

Matrix matrix(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) rows.push_back(numbers(r, what));
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      fail(ErrorCode::DimensionMismatch, std::string(what) + " rows differ in length");
  return matrix_from_rows(rows);
}

StateSpace states_of(const json& j) {
  auto names = labels(field(j, "states"), "states");
  if (j.contains("values")) return StateSpace(std::move(names), numbers(j.at("values"), "values"));
  return StateSpace(std::move(names));
}

json rows_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

json states_json(const StateSpace& s) { return s.labels(); }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Experiment parse_experiment(std::string_view text) {
  const json j = parse(text);
  return make_experiment(states_of(j), labels(field(j, "signals"), "signals"),
                         matrix(field(j, "probs"), "probs"));
}

BetaMatrix parse_beta(std::string_view text, const StateSpace& states) {
  const json j = parse(text);
  if (j.is_array()) return BetaMatrix(states, matrix(j, "beta"));
  if (j.is_object() && j.contains("coef")) return BetaMatrix(states, matrix(j.at("coef"), "coef"));
  const json& rule = field(j, "rule");
  if (!rule.is_string()) fail(ErrorCode::ParseError, "rule must be a string");
  const auto name = rule.get<std::string>();
  if (name == "constant") return BetaMatrix::constant(states, number(field(j, "value"), "value"));
  if (name == "one_dimensional")
    return one_dimensional_betas(states, number(field(j, "kappa"), "kappa"));
  if (name == "inverse_square")
    return inverse_square_betas(states, number(field(j, "kappa"), "kappa"));
  fail(ErrorCode::ParseError, "unknown beta rule \"" + name + "\"");
}

DecisionProblem parse_problem(std::string_view text) {
  const json j = parse(text);
  DecisionProblem p{states_of(j), labels(field(j, "actions"), "actions"),
                    matrix(field(j, "utility"), "utility"), numbers(field(j, "prior"), "prior")};
  validate(p);
  return p;
}

std::string to_json(const Experiment& mu) {
  json j;
  j["states"] = states_json(mu.states());
  if (mu.states().has_values()) j["values"] = *mu.states().values();
  j["signals"] = mu.signals();
  j["probs"] = rows_json(mu.probs());
  return j.dump(2);
}

std::string to_json(const SolveResult& result, const DecisionProblem& problem) {
  json j;
  j["states"] = states_json(problem.states);
  j["actions"] = problem.actions;
  j["rule"] = rows_json(result.rule.probs);
  j["objective"] = result.objective;
  j["cost"] = result.cost;
  j["expected_utility"] = result.expected_utility;
  j["foc_residual"] = result.foc_residual;
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  j["support"] = result.support;
  j["warnings"] = result.warnings;
  return j.dump(2);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace infocost
