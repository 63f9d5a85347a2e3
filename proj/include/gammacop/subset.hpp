#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gammacop/errors.hpp"

namespace gammacop {

inline constexpr int kMaxDim = 16;

/// Subset T of {1..n}, stored as a bit mask. Bit i-1 is set iff i is in T.
/// Coordinates are 0-based in the API: `contains(0)` asks about element 1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  SubsetMask(std::uint32_t bits, int n) : bits_(bits), n_(n) {
    if (n < 1 || n > kMaxDim) throw ArgumentError("dimension must be in [1, 16]");
    if (bits >= (std::uint32_t{1} << n)) throw ArgumentError("subset mask out of range for dimension");
  }

  static SubsetMask empty(int n) { return {0, n}; }
  static SubsetMask full(int n) { return {(std::uint32_t{1} << n) - 1, n}; }
  static SubsetMask singleton(int i, int n) { return {std::uint32_t{1} << i, n}; }
  static SubsetMask from_indices(const std::vector<int>& zero_based, int n);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int dim() const { return n_; }
  int size() const { return std::popcount(bits_); }
  bool contains(int i) const { return (bits_ >> i) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  SubsetMask complement() const { return {~bits_ & ((std::uint32_t{1} << n_) - 1), n_}; }
  int lowest() const { return std::countr_zero(bits_); }
  std::vector<int> indices() const;

  /// "1,2" style label with sorted 1-based indices; "" for the empty set.
  std::string label() const;

  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) = default;

 private:
  std::uint32_t bits_ = 0;
  int n_ = 1;
};

/// Dense real-valued map over all 2^n subsets of {1..n}.
class SubsetMap {
 public:
  SubsetMap() = default;
  explicit SubsetMap(int n, double fill = 0.0);

  int dim() const { return n_; }
  std::size_t size() const { return values_.size(); }

  double& operator[](SubsetMask t) { return values_[t.bits()]; }
  double operator[](SubsetMask t) const { return values_[t.bits()]; }
  double& at_bits(std::uint32_t b) { return values_[b]; }
  double at_bits(std::uint32_t b) const { return values_[b]; }

  const std::vector<double>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

/// Iterate the non-empty submasks of `bits` (including `bits` itself).
template <class F>
void for_each_nonempty_submask(std::uint32_t bits, F&& f) {
  for (std::uint32_t s = bits; s != 0; s = (s - 1) & bits) f(s);
}

}  // namespace gammacop
