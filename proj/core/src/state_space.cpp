#include "infocost/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "infocost/error.hpp"

namespace infocost {

namespace {

std::string label_for(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels, std::optional<std::vector<double>> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.size() < 2) fail(ErrorCode::TooFewStates, "a state space needs at least 2 states");
  if (values_) {
    if (values_->size() != labels_.size())
      fail(ErrorCode::DimensionMismatch, "one value per state is required");
    for (double v : *values_)
      if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "state values must be finite");
    std::vector<double> sorted = *values_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::DuplicateValues, "state values must be distinct");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    fail(ErrorCode::DuplicateLabels, "state labels must be unique");
}

StateSpace StateSpace::from_values(std::vector<double> values) {
  std::vector<std::string> labels;
  labels.reserve(values.size());
  for (double v : values) labels.push_back(label_for(v));
  return StateSpace(std::move(labels), std::move(values));
}

StateSpace StateSpace::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return StateSpace(std::move(labels));
}

std::size_t StateSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail(ErrorCode::InvalidArgument, "unknown state '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

}  // namespace infocost
