#pragma once

#include <span>
#include <vector>

#include "gammacop/polynomial.hpp"
#include "gammacop/specialfn.hpp"

namespace gammacop {

/// log density of the gamma law with scale p and the given shape; -inf for x <= 0.
double gamma_marginal_logpdf(double p, double shape, double x);

/// Bivariate gamma gamma_(P, lambda), n = 2 and lambda_i = lambda.
///
/// Exists iff c = (p1 p2 - p12) / p12^2 > 0; c = 0 is the independence
/// product and is evaluated as such.
class BivariateGammaDensity {
 public:
  BivariateGammaDensity(double p1, double p2, double p12, double lambda, SeriesControl ctl = {});
  explicit BivariateGammaDensity(const AffineModel& model, SeriesControl ctl = {});

  double logpdf(double x1, double x2) const;
  double c() const { return c_; }

 private:
  double p1_, p2_, p12_, lambda_, c_, log_norm_;
  SeriesControl ctl_;
};

/// Multisensor gamma (Lambda = (lambda, lambda, lambda2)): the Phi3 form.
class MultisensorDensity {
 public:
  MultisensorDensity(double p1, double p2, double p12, double lambda, double lambda2, SeriesControl ctl = {});
  double logpdf(double x1, double x2) const;

 private:
  double p1_, p2_, p12_, lambda_, lambda2_, c_, log_norm_;
  SeriesControl ctl_;
};

/// Bifactor gamma (Lambda = (lambda, lambda1, lambda2)): the F_I form.
class BifactorDensity {
 public:
  explicit BifactorDensity(const AffineModel& model, SeriesControl ctl = {});
  double logpdf(double x1, double x2) const;

 private:
  double p1_, p2_, p12_, lambda_, lambda1_, lambda2_, c_, log_norm_;
  SeriesControl ctl_;
};

/// Trivariate gamma gamma_(P, lambda): the F_II form. Requires p_i, p_ij,
/// p_123 > 0 and every btilde_S >= 0.
class TrivariateGammaDensity {
 public:
  explicit TrivariateGammaDensity(const AffineModel& model, SeriesControl ctl = {});
  double logpdf(double x1, double x2, double x3) const;

  double btilde12() const { return b12_; }
  double btilde13() const { return b13_; }
  double btilde23() const { return b23_; }
  double btilde123() const { return b123_; }

 private:
  double lambda_, log_norm_;
  double d1_, d2_, d3_;  // dual singletons (negative)
  double b12_, b13_, b23_, b123_;
  SeriesControl ctl_;
};

double bivariate_gamma_logpdf(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl = {});
double multisensor_logpdf(double p1, double p2, double p12, double lambda, double lambda2, std::span<const double> x,
                          const SeriesControl& ctl = {});
double bifactor_logpdf(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl = {});
double trivariate_gamma_logpdf(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl = {});

struct DensityPoint {
  std::vector<double> x;
  double logpdf;
  double pdf;
};

/// Closed-form density of the model's own law, dispatched on dimension and
/// shapes: n = 2 (bivariate, multisensor or bifactor form) or pure n = 3.
DensityPoint evaluate_density(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl = {});

}  // namespace gammacop
