#include "infocost/multi_index.hpp"

#include <numeric>

#include "infocost/error.hpp"

namespace infocost {

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
  for (int v : c_)
    if (v < 0) fail(ErrorCode::InvalidArgument, "multi-index components must be non-negative");
}

MultiIndex MultiIndex::unit(int dim, int axis) {
  MultiIndex e = zero(dim);
  e[axis] = 1;
  return e;
}

int MultiIndex::order() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

bool MultiIndex::leq(const MultiIndex& other) const {
  for (int d = 0; d < dim(); ++d)
    if (c_[d] > other.c_[d]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex r = *this;
  for (int d = 0; d < dim(); ++d) r.c_[d] += other.c_[d];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  MultiIndex r = *this;
  for (int d = 0; d < dim(); ++d) r.c_[d] -= other.c_[d];
  return r;
}

std::uint64_t factorial(const MultiIndex& alpha) {
  std::uint64_t f = 1;
  for (int v : alpha.components())
    for (int k = 2; k <= v; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t binomial(const MultiIndex& alpha, const MultiIndex& lambda) {
  std::uint64_t b = 1;
  for (int d = 0; d < alpha.dim(); ++d) {
    const int n = alpha[d];
    const int k = lambda[d];
    std::uint64_t c = 1;
    for (int j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    b *= c;
  }
  return b;
}

IndexBox::IndexBox(int dim, int bound) : dim_(dim), bound_(bound), size_(1) {
  if (dim < 1 || bound < 1) fail(ErrorCode::InvalidArgument, "index box needs n >= 1 and N >= 1");
  for (int d = 0; d < dim; ++d) size_ *= static_cast<std::size_t>(bound + 1);
}

bool IndexBox::contains(const MultiIndex& alpha) const {
  if (alpha.dim() != dim_) return false;
  for (int v : alpha.components())
    if (v > bound_) return false;
  return true;
}

std::size_t IndexBox::position(const MultiIndex& alpha) const {
  if (!contains(alpha)) fail(ErrorCode::InvalidArgument, "multi-index outside the index box");
  std::size_t p = 0;
  for (int d = 0; d < dim_; ++d) p = p * static_cast<std::size_t>(bound_ + 1) + static_cast<std::size_t>(alpha[d]);
  return p;
}

MultiIndex IndexBox::at(std::size_t position) const {
  std::vector<int> c(dim_);
  for (int d = dim_ - 1; d >= 0; --d) {
    c[d] = static_cast<int>(position % static_cast<std::size_t>(bound_ + 1));
    position /= static_cast<std::size_t>(bound_ + 1);
  }
  return MultiIndex(std::move(c));
}

std::vector<MultiIndex> IndexBox::nonzero_indices() const {
  std::vector<MultiIndex> out;
  out.reserve(size_ - 1);
  for (std::size_t p = 1; p < size_; ++p) out.push_back(at(p));
  return out;
}

}  // namespace infocost
