#include "gammacop/subset.hpp"

namespace gammacop {

SubsetMask SubsetMask::from_indices(const std::vector<int>& zero_based, int n) {
  std::uint32_t bits = 0;
  for (int i : zero_based) {
    if (i < 0 || i >= n) throw ArgumentError("subset index out of range");
    bits |= std::uint32_t{1} << i;
  }
  return {bits, n};
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SubsetMask::label() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!contains(i)) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

SubsetMap::SubsetMap(int n, double fill) : n_(n) {
  if (n < 1 || n > kMaxDim) throw ArgumentError("dimension must be in [1, 16]");
  values_.assign(std::size_t{1} << n, fill);
}

}  // namespace gammacop
