#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ksplit/labelled_partition.hpp"

namespace ksplit::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

 private:
  std::vector<std::size_t> parent_;
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit integer overflow");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit integer overflow");
  return out;
}

/// (-1)^(n-1) (n-1)!, the Möbius value of the full set partition lattice on n atoms.
inline std::int64_t signed_factorial(std::size_t n) {
  std::int64_t value = 1;
  for (std::size_t i = 2; i < n; ++i) value = checked_mul(value, static_cast<std::int64_t>(i));
  return (n % 2 == 1) ? value : -value;
}

inline std::size_t lowest(ElementMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

inline void require_same_ground(const LabelledPartition& a, const LabelledPartition& b) {
  if (a.ground_ptr() != b.ground_ptr() && !(a.ground() == b.ground())) {
    throw std::invalid_argument("labelled partitions live on different ground sets");
  }
}

/// Calls visit(groups) for every set partition of {0..n-1}; groups[i] is the
/// block index of item i (restricted growth string).
template <typename Visit>
void for_each_set_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> groups(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  if (n == 0) {
    visit(groups, std::size_t{0});
    return;
  }
  while (true) {
    visit(groups, prefix_max[n - 1] + 1);
    // Advance to the next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && groups[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++groups[i];
    prefix_max[i] = std::max(prefix_max[i - 1], groups[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      groups[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace ksplit::detail
