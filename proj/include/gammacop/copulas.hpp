#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gammacop/jet.hpp"
#include "gammacop/polynomial.hpp"

namespace gammacop {

struct CopulaBuildOptions {
  /// Skip the divisibility gate. The model must then pass the kernel corner
  /// check and the rectangle-mass test before it is returned.
  bool force = false;
  double divisibility_tol = 1e-12;
  int rectangles = 10000;
  double rectangle_tol = 1e-12;
  std::uint64_t rectangle_seed = 0x9e3779b97f4a7c15ULL;
};

/// Laplace copula
///   C(v) = prod v_i * K(v)^{-lambda},
///   K(v) = 1 + sum_{|T| >= 2} alpha_T prod_{t in T} (1 - v_t^{1/lambda_t}).
class CopulaModel {
 public:
  static CopulaModel build(const AffineModel& model, const CopulaBuildOptions& opt = {});
  /// Direct construction from coefficients. Only the kernel corner check is
  /// applied; alpha_{} must be 1 and singleton entries 0.
  static CopulaModel from_alpha(SubsetMap alpha, double lambda, std::vector<double> lambdas);

  int dim() const { return alpha_.dim(); }
  const SubsetMap& alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  bool forced() const { return forced_; }
  /// Smallest kernel value over the corners w in {0,1}^n.
  double min_corner_kernel() const { return min_corner_; }
  /// Masks T with |T| >= 2 and alpha_T != 0.
  const std::vector<std::uint32_t>& support() const { return support_; }

  /// w_t = 1 - v_t^{1/lambda_t}.
  double w(int t, double v) const;
  /// K(v).
  double kernel(std::span<const double> v) const;

 private:
  CopulaModel(SubsetMap alpha, double lambda, std::vector<double> lambdas);

  SubsetMap alpha_;
  double lambda_;
  std::vector<double> lambdas_;
  std::vector<std::uint32_t> support_;
  double min_corner_ = 1.0;
  bool forced_ = false;
};

/// C(v) for v in [0,1]^n.
double copula_cdf(const CopulaModel& c, std::span<const double> v);

/// Bivariate copula density d^2 C / dv1 dv2 on (0,1)^2, closed form.
double copula_pdf2(const CopulaModel& c, std::span<const double> v);

/// dC/dv1 (v1, v2): the law of V2 given V1 = v1. Bivariate only.
double conditional_cdf(const CopulaModel& c, double v1, double v2);

/// Every mixed partial d^{|U|} C / dv_U for U within `dirs`, at v.
/// Coordinates listed in `dirs` must lie in (0,1); the others in [0,1].
/// Jet direction k corresponds to coordinate dirs[k].
Jet copula_jet(const CopulaModel& c, std::span<const double> v, std::span<const int> dirs);

/// Mixed partial of C over the coordinates in `dirs`.
double copula_partial(const CopulaModel& c, std::span<const double> v, std::span<const int> dirs);

/// Copula density: closed form for n = 2, exact jet derivative for n >= 3.
double copula_pdf(const CopulaModel& c, std::span<const double> v);

/// Inclusion-exclusion C-volume of the box [lo, hi].
double rectangle_mass(const CopulaModel& c, std::span<const double> lo, std::span<const double> hi);

/// Smallest C-volume over `count` random boxes drawn with the given seed.
double min_rectangle_mass(const CopulaModel& c, int count, std::uint64_t seed);

/// Copula plus gamma marginals (scale, shape).
class AssembledDistribution {
 public:
  AssembledDistribution(CopulaModel copula, std::vector<std::pair<double, double>> marginals);
  /// Marginals (p_i, lambda_i) of the model itself.
  static AssembledDistribution from_model(const AffineModel& model, const CopulaBuildOptions& opt = {});

  const CopulaModel& copula() const { return copula_; }
  const std::vector<std::pair<double, double>>& marginals() const { return marginals_; }
  int dim() const { return copula_.dim(); }

 private:
  CopulaModel copula_;
  std::vector<std::pair<double, double>> marginals_;
};

double assembled_cdf(const AssembledDistribution& d, std::span<const double> x);
double assembled_logpdf(const AssembledDistribution& d, std::span<const double> x);

}  // namespace gammacop
