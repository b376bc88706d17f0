#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ellip {

/// A strictly increasing subset of {0, ..., ambient-1} (0-based).
/// Addresses matrix minors, wedge-basis elements and symmetric-sum terms.
struct MultiIndex {
  std::vector<int> indices;
  int ambient = 0;

  MultiIndex() = default;
  MultiIndex(std::vector<int> idx, int n);

  int order() const { return static_cast<int>(indices.size()); }
  bool valid() const;

  /// The increasing complement in {0, ..., ambient-1}; an involution.
  MultiIndex complement() const;

  bool operator==(const MultiIndex& o) const = default;
};

/// Visits every strictly increasing k-subset of {0..n-1} in lexicographic
/// order. The visited vector is reused between calls.
void for_each_multi_index(int n, int k,
                          const std::function<void(const std::vector<int>&)>& visit);

/// Number of k-subsets, C(n, k), computed exactly in integer arithmetic.
std::uint64_t multi_index_count(int n, int k);

}  // namespace ellip
