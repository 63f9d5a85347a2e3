#pragma once

#include <span>
#include <vector>

#include "gammacop/subset.hpp"

namespace gammacop {

/// Affine polynomial P(theta) = sum_T p_T theta^T with p_{} = 1.
///
/// Stored densely: one coefficient per subset of {1..n}. Degree is at most
/// one in each variable, so P is fully described by these 2^n numbers.
class AffinePolynomial {
 public:
  /// `coeffs[bits]` is p_T for the subset encoded by `bits`. The constant
  /// term must be exactly 1.
  AffinePolynomial(int n, std::vector<double> coeffs);

  /// Independence polynomial prod_i (1 + p_i theta_i).
  static AffinePolynomial product(std::span<const double> p);

  int dim() const { return n_; }
  double coeff(SubsetMask t) const { return coeffs_[t.bits()]; }
  double coeff_bits(std::uint32_t b) const { return coeffs_[b]; }
  double singleton(int i) const { return coeffs_[std::size_t{1} << i]; }
  double top() const { return coeffs_.back(); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double evaluate(std::span<const double> theta) const;

  friend bool operator==(const AffinePolynomial&, const AffinePolynomial&) = default;

 private:
  int n_;
  std::vector<double> coeffs_;
};

/// Shape parameters (lambda, lambda_1..lambda_n) with lambda_i >= lambda > 0.
struct ShapeParams {
  double lambda = 1.0;
  std::vector<double> lambdas;

  static ShapeParams uniform(double lambda, int n) { return {lambda, std::vector<double>(n, lambda)}; }
  bool is_pure() const;
  void validate(int n) const;

  friend bool operator==(const ShapeParams&, const ShapeParams&) = default;
};

/// The pair (P, Lambda). Requires p_i > 0 for every singleton.
struct AffineModel {
  AffinePolynomial poly;
  ShapeParams shapes;

  AffineModel(AffinePolynomial p, ShapeParams s);

  int dim() const { return poly.dim(); }

  friend bool operator==(const AffineModel&, const AffineModel&) = default;
};

/// P evaluated at the vector with -1/p_i on T and 0 elsewhere.
double eval_at_corner(const AffinePolynomial& poly, SubsetMask t);

/// alpha_T = (-1)^{|T|} P(-(1/p) 1_T) for every T. alpha_{} = 1 and the
/// singleton entries are exactly 0.
SubsetMap fgm_coefficients(const AffinePolynomial& poly);

/// Dual coefficients ptilde_T = -p_{complement(T)} / p_[n]. Not normalized:
/// the constant term is -1.
SubsetMap dual_polynomial(const AffinePolynomial& poly);

/// r_T = -P(-(1/p) 1_T) for |T| = 2: the linear correlation of (X_i, X_j).
double pair_correlation(const AffinePolynomial& poly, int i, int j);

}  // namespace gammacop
