#include "ellip/multi_index.hpp"

#include <stdexcept>

namespace ellip {

MultiIndex::MultiIndex(std::vector<int> idx, int n) : indices(std::move(idx)), ambient(n) {
  if (!valid()) throw std::invalid_argument("MultiIndex: indices must be strictly increasing within [0, ambient)");
}

bool MultiIndex::valid() const {
  if (ambient < 0) return false;
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i < 0 || i >= ambient) return false;
    prev = i;
  }
  return true;
}

MultiIndex MultiIndex::complement() const {
  MultiIndex c;
  c.ambient = ambient;
  c.indices.reserve(ambient - order());
  std::size_t pos = 0;
  for (int i = 0; i < ambient; ++i) {
    if (pos < indices.size() && indices[pos] == i) {
      ++pos;
    } else {
      c.indices.push_back(i);
    }
  }
  return c;
}

void for_each_multi_index(int n, int k,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    visit(idx);
    return;
  }
  while (true) {
    visit(idx);
    // advance to the next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t multi_index_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  if (r > static_cast<unsigned __int128>(UINT64_MAX)) {
    throw std::overflow_error("multi_index_count: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace ellip
