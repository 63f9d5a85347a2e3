#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gammacop/polynomial.hpp"

namespace gammacop {

using Partition = std::vector<SubsetMask>;

/// All partitions of S into exactly k non-empty blocks, enumerated once each
/// via restricted-growth strings. Count is the Stirling number S(|S|, k).
std::vector<Partition> partitions(SubsetMask s, int k);

/// Visit every partition of S (any number of blocks) without materializing
/// the list. Blocks are passed in order of their smallest element.
void for_each_partition(SubsetMask s, const std::function<void(std::span<const SubsetMask>)>& visit);

/// btilde_S = sum_k (k-1)! sum_{partitions of S into k blocks} prod_T dual_T.
/// For |S| = 1 this is dual_i.
double btilde(const SubsetMap& dual, SubsetMask s);

/// btilde for every subset at once (index 0 unused).
std::vector<double> btilde_all(const SubsetMap& dual);

struct DivisibilityReport {
  SubsetMap dual;
  /// (S, btilde_S) for every S with |S| >= 2, ordered by mask.
  std::vector<std::pair<SubsetMask, double>> btilde;
  bool singleton_ok = false;
  bool btilde_ok = false;
  bool divisible = false;
};

/// Infinite-divisibility test: ptilde_i < 0 for every i and btilde_S >= -tol
/// for every |S| >= 2. Throws PreconditionError when p_i <= 0 or p_[n] <= 0.
DivisibilityReport check_infinite_divisibility(const AffinePolynomial& poly, double tol = 1e-12);

}  // namespace gammacop
