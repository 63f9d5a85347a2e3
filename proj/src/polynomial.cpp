#include "gammacop/polynomial.hpp"

#include <cmath>

namespace gammacop {

AffinePolynomial::AffinePolynomial(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1 || n > kMaxDim) throw ArgumentError("dimension must be in [1, 16]");
  if (coeffs_.size() != (std::size_t{1} << n)) throw ArgumentError("coefficient array must have 2^n entries");
  if (coeffs_[0] != 1.0) throw ArgumentError("constant term of P must equal 1");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw ArgumentError("coefficients must be finite");
}

AffinePolynomial AffinePolynomial::product(std::span<const double> p) {
  const int n = static_cast<int>(p.size());
  std::vector<double> c(std::size_t{1} << n, 1.0);
  for (std::uint32_t b = 1; b < c.size(); ++b) {
    const int low = std::countr_zero(b);
    c[b] = c[b & (b - 1)] * p[low];
  }
  return {n, std::move(c)};
}

double AffinePolynomial::evaluate(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != n_) throw ArgumentError("theta has wrong dimension");
  // monomial[b] = theta^T built from the monomial without the lowest element
  std::vector<double> mono(coeffs_.size());
  mono[0] = 1.0;
  double sum = coeffs_[0];
  for (std::uint32_t b = 1; b < mono.size(); ++b) {
    mono[b] = mono[b & (b - 1)] * theta[std::countr_zero(b)];
    sum += coeffs_[b] * mono[b];
  }
  return sum;
}

bool ShapeParams::is_pure() const {
  for (double l : lambdas)
    if (l != lambda) return false;
  return true;
}

void ShapeParams::validate(int n) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ArgumentError("lambda must be positive");
  if (static_cast<int>(lambdas.size()) != n) throw ArgumentError("lambdas must have n entries");
  for (double l : lambdas)
    if (!(l >= lambda) || !std::isfinite(l)) throw ArgumentError("lambda_i must satisfy lambda_i >= lambda");
}

AffineModel::AffineModel(AffinePolynomial p, ShapeParams s) : poly(std::move(p)), shapes(std::move(s)) {
  shapes.validate(poly.dim());
  for (int i = 0; i < poly.dim(); ++i)
    if (!(poly.singleton(i) > 0.0)) throw ArgumentError("p_" + std::to_string(i + 1) + " must be positive");
}

double eval_at_corner(const AffinePolynomial& poly, SubsetMask t) {
  if (t.dim() != poly.dim()) throw ArgumentError("subset dimension does not match polynomial");
  std::vector<double> inv(poly.dim(), 0.0);
  for (int i : t.indices()) {
    const double pi = poly.singleton(i);
    if (pi == 0.0) throw DomainError("p_" + std::to_string(i + 1) + " is zero at corner evaluation");
    inv[i] = -1.0 / pi;
  }
  // Only submasks of T contribute.
  double sum = 1.0;
  for_each_nonempty_submask(t.bits(), [&](std::uint32_t s) {
    double m = poly.coeff_bits(s);
    for (std::uint32_t r = s; r; r &= r - 1) m *= inv[std::countr_zero(r)];
    sum += m;
  });
  return sum;
}

SubsetMap fgm_coefficients(const AffinePolynomial& poly) {
  const int n = poly.dim();
  SubsetMap alpha(n);
  alpha.at_bits(0) = 1.0;
  for (std::uint32_t b = 1; b < alpha.size(); ++b) {
    if (std::popcount(b) == 1) {
      if (poly.coeff_bits(b) == 0.0) throw DomainError("p_i is zero");
      alpha.at_bits(b) = 0.0;
      continue;
    }
    const double v = eval_at_corner(poly, SubsetMask(b, n));
    alpha.at_bits(b) = (std::popcount(b) % 2 == 0) ? v : -v;
  }
  return alpha;
}

SubsetMap dual_polynomial(const AffinePolynomial& poly) {
  const double top = poly.top();
  if (!(top > 0.0)) throw PreconditionError("p_[n] must be positive for the dual polynomial");
  const int n = poly.dim();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  SubsetMap dual(n);
  for (std::uint32_t b = 0; b <= full; ++b) dual.at_bits(b) = -poly.coeff_bits(full & ~b) / top;
  return dual;
}

double pair_correlation(const AffinePolynomial& poly, int i, int j) {
  const int n = poly.dim();
  return -eval_at_corner(poly, SubsetMask::from_indices({i, j}, n));
}

}  // namespace gammacop
