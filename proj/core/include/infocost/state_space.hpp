#pragma once

#include <optional>
#include <string>
#include <vector>

namespace infocost {

/// Ordered, labelled set of states. One-dimensional problems attach a real
/// value to every state.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels,
                      std::optional<std::vector<double>> values = std::nullopt);

  /// States labelled by their values, e.g. {20000, ..., 80000}.
  static StateSpace from_values(std::vector<double> values);
  /// States "0", "1", ..., "n-1".
  static StateSpace indexed(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<std::vector<double>>& values() const noexcept { return values_; }
  bool has_values() const noexcept { return values_.has_value(); }

  /// Index of the state with the given label; throws InvalidArgument.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::optional<std::vector<double>> values_;
};

}  // namespace infocost
