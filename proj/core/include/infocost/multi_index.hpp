#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace infocost {

/// Exponent vector alpha in N^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> components);
  static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }
  static MultiIndex unit(int dim, int axis);

  int dim() const noexcept { return static_cast<int>(c_.size()); }
  int operator[](int d) const { return c_[d]; }
  int& operator[](int d) { return c_[d]; }
  const std::vector<int>& components() const noexcept { return c_; }

  int order() const noexcept;  // |alpha|
  bool is_zero() const noexcept { return order() == 0; }
  bool leq(const MultiIndex& other) const;  // componentwise

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> c_;
};

/// alpha! = alpha_1! ... alpha_n!
std::uint64_t factorial(const MultiIndex& alpha);

/// prod_d binom(alpha_d, lambda_d), exact.
std::uint64_t binomial(const MultiIndex& alpha, const MultiIndex& lambda);

/// The box {0..N}^n with a mixed-radix flat position for each index.
class IndexBox {
 public:
  IndexBox(int dim, int bound);

  int dim() const noexcept { return dim_; }
  int bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return size_; }  // (N+1)^n, including zero

  bool contains(const MultiIndex& alpha) const;
  std::size_t position(const MultiIndex& alpha) const;
  MultiIndex at(std::size_t position) const;

  /// All non-zero indices in increasing position order (the set A).
  std::vector<MultiIndex> nonzero_indices() const;

  friend bool operator==(const IndexBox&, const IndexBox&) = default;

 private:
  int dim_;
  int bound_;
  std::size_t size_;
};

}  // namespace infocost
