#include "gammacop/divisibility.hpp"

#include <cmath>

namespace gammacop {
namespace {

// Restricted-growth string walk: element j joins one of the blocks opened so
// far or opens a new one. `want` = -1 means any block count.
void rgs_walk(const std::vector<int>& elems, std::size_t j, std::vector<std::uint32_t>& blocks, int want, int n,
              const std::function<void(std::span<const SubsetMask>)>& visit, std::vector<SubsetMask>& scratch) {
  const int used = static_cast<int>(blocks.size());
  const int left = static_cast<int>(elems.size() - j);
  if (want >= 0 && (used > want || used + left < want)) return;
  if (left == 0) {
    scratch.clear();
    for (std::uint32_t b : blocks) scratch.emplace_back(b, n);
    visit(scratch);
    return;
  }
  const std::uint32_t bit = std::uint32_t{1} << elems[j];
  for (int b = 0; b < used; ++b) {
    blocks[b] |= bit;
    rgs_walk(elems, j + 1, blocks, want, n, visit, scratch);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  rgs_walk(elems, j + 1, blocks, want, n, visit, scratch);
  blocks.pop_back();
}

void walk(SubsetMask s, int want, const std::function<void(std::span<const SubsetMask>)>& visit) {
  const std::vector<int> elems = s.indices();
  std::vector<std::uint32_t> blocks;
  std::vector<SubsetMask> scratch;
  if (elems.empty()) return;
  rgs_walk(elems, 0, blocks, want, s.dim(), visit, scratch);
}

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

std::vector<Partition> partitions(SubsetMask s, int k) {
  if (k < 1 || k > s.size()) throw ArgumentError("partition block count out of range");
  std::vector<Partition> out;
  walk(s, k, [&](std::span<const SubsetMask> blocks) { out.emplace_back(blocks.begin(), blocks.end()); });
  return out;
}

void for_each_partition(SubsetMask s, const std::function<void(std::span<const SubsetMask>)>& visit) {
  walk(s, -1, visit);
}

// Block-count-resolved partition sums over every subset of `universe`:
// g[k][U] = sum over partitions of U into k blocks of prod dual_B, built by
// peeling off the block that contains the smallest element of U.
static std::vector<std::vector<double>> partition_sums(const SubsetMap& dual, const std::vector<int>& universe) {
  const int m = static_cast<int>(universe.size());
  const std::uint32_t size = std::uint32_t{1} << m;
  std::vector<std::uint32_t> expand(size, 0);
  for (std::uint32_t c = 1; c < size; ++c)
    expand[c] = expand[c & (c - 1)] | (std::uint32_t{1} << universe[std::countr_zero(c)]);

  std::vector<std::vector<double>> g(m + 1, std::vector<double>(size, 0.0));
  g[0][0] = 1.0;
  for (std::uint32_t u = 1; u < size; ++u) {
    const std::uint32_t low = u & (~u + 1);
    const std::uint32_t rest = u ^ low;
    std::uint32_t r = rest;
    while (true) {
      const std::uint32_t block = low | r;
      const std::uint32_t remainder = rest ^ r;
      const double pb = dual.at_bits(expand[block]);
      if (pb != 0.0) {
        const int max_k = std::popcount(u);
        for (int k = 1; k <= max_k; ++k) g[k][u] += pb * g[k - 1][remainder];
      }
      if (r == 0) break;
      r = (r - 1) & rest;
    }
  }
  return g;
}

double btilde(const SubsetMap& dual, SubsetMask s) {
  if (s.dim() != dual.dim()) throw ArgumentError("subset dimension does not match coefficient map");
  if (s.is_empty()) throw ArgumentError("btilde needs a non-empty subset");
  const auto g = partition_sums(dual, s.indices());
  const std::uint32_t top = static_cast<std::uint32_t>(g[0].size() - 1);
  double sum = 0.0;
  for (int k = 1; k <= s.size(); ++k) sum += factorial(k - 1) * g[k][top];
  return sum;
}

std::vector<double> btilde_all(const SubsetMap& dual) {
  const int n = dual.dim();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const auto g = partition_sums(dual, all);
  std::vector<double> out(g[0].size(), 0.0);
  for (std::uint32_t u = 1; u < out.size(); ++u) {
    double sum = 0.0;
    for (int k = 1; k <= std::popcount(u); ++k) sum += factorial(k - 1) * g[k][u];
    out[u] = sum;
  }
  return out;
}

DivisibilityReport check_infinite_divisibility(const AffinePolynomial& poly, double tol) {
  const int n = poly.dim();
  for (int i = 0; i < n; ++i)
    if (!(poly.singleton(i) > 0.0))
      throw PreconditionError("divisibility test requires p_" + std::to_string(i + 1) + " > 0");
  if (!(poly.top() > 0.0)) throw PreconditionError("divisibility test requires p_[n] > 0");

  DivisibilityReport rep;
  rep.dual = dual_polynomial(poly);
  rep.singleton_ok = true;
  for (int i = 0; i < n; ++i)
    if (!(rep.dual.at_bits(std::uint32_t{1} << i) < 0.0)) rep.singleton_ok = false;

  const auto all = btilde_all(rep.dual);
  rep.btilde_ok = true;
  for (std::uint32_t b = 1; b < all.size(); ++b) {
    if (std::popcount(b) < 2) continue;
    rep.btilde.emplace_back(SubsetMask(b, n), all[b]);
    if (!(all[b] >= -tol)) rep.btilde_ok = false;
  }
  rep.divisible = rep.singleton_ok && rep.btilde_ok;
  return rep;
}

}  // namespace gammacop
