#include "gammacop/densities.hpp"

#include <cmath>
#include <limits>

#include "gammacop/divisibility.hpp"
#include "gammacop/errors.hpp"

namespace gammacop {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double existence_c(double p1, double p2, double p12) {
  if (!(p1 > 0.0) || !(p2 > 0.0)) throw PreconditionError("p1 and p2 must be positive");
  if (!(p12 > 0.0)) throw PreconditionError("p12 must be positive");
  const double c = (p1 * p2 - p12) / (p12 * p12);
  if (c < 0.0) throw ExistenceError("bivariate gamma law does not exist: c = (p1 p2 - p12)/p12^2 < 0");
  return c;
}

void require_dim(const AffineModel& m, int n, const char* what) {
  if (m.dim() != n) throw ArgumentError(std::string(what) + ": wrong model dimension");
}

void require_x(std::span<const double> x, std::size_t n) {
  if (x.size() != n) throw ArgumentError("point has wrong dimension");
}

}  // namespace

double gamma_marginal_logpdf(double p, double shape, double x) {
  if (!(p > 0.0) || !(shape > 0.0)) throw ArgumentError("gamma scale and shape must be positive");
  if (!(x > 0.0)) return kNegInf;
  return (shape - 1.0) * std::log(x) - shape * std::log(p) - x / p - std::lgamma(shape);
}

BivariateGammaDensity::BivariateGammaDensity(double p1, double p2, double p12, double lambda, SeriesControl ctl)
    : p1_(p1), p2_(p2), p12_(p12), lambda_(lambda), c_(existence_c(p1, p2, p12)), ctl_(ctl) {
  if (!(lambda > 0.0)) throw ArgumentError("lambda must be positive");
  log_norm_ = -lambda * std::log(p12) - 2.0 * std::lgamma(lambda);
}

BivariateGammaDensity::BivariateGammaDensity(const AffineModel& model, SeriesControl ctl)
    : BivariateGammaDensity(model.poly.singleton(0), model.poly.singleton(1), model.poly.top(), model.shapes.lambda,
                            ctl) {
  require_dim(model, 2, "bivariate gamma");
  if (!model.shapes.is_pure()) throw ArgumentError("bivariate gamma density needs lambda_i = lambda");
}

double BivariateGammaDensity::logpdf(double x1, double x2) const {
  if (!(x1 > 0.0) || !(x2 > 0.0)) return kNegInf;
  if (c_ == 0.0)
    return gamma_marginal_logpdf(p1_, lambda_, x1) + gamma_marginal_logpdf(p2_, lambda_, x2);
  return log_norm_ - (p2_ / p12_) * x1 - (p1_ / p12_) * x2 + (lambda_ - 1.0) * std::log(x1 * x2) +
         hyp0f1(lambda_, c_ * x1 * x2, ctl_).log_abs();
}

MultisensorDensity::MultisensorDensity(double p1, double p2, double p12, double lambda, double lambda2,
                                       SeriesControl ctl)
    : p1_(p1), p2_(p2), p12_(p12), lambda_(lambda), lambda2_(lambda2), c_(existence_c(p1, p2, p12)), ctl_(ctl) {
  if (!(lambda > 0.0) || !(lambda2 >= lambda)) throw ArgumentError("need lambda2 >= lambda > 0");
  log_norm_ = -lambda * std::log(p12) - (lambda2 - lambda) * std::log(p2) - std::lgamma(lambda) -
              std::lgamma(lambda2);
}

double MultisensorDensity::logpdf(double x1, double x2) const {
  if (!(x1 > 0.0) || !(x2 > 0.0)) return kNegInf;
  if (c_ == 0.0)
    return gamma_marginal_logpdf(p1_, lambda_, x1) + gamma_marginal_logpdf(p2_, lambda2_, x2);
  const double phi = horn_phi3(lambda2_ - lambda_, lambda2_, c_ * (p12_ / p2_) * x2, c_ * x1 * x2, ctl_).log_abs();
  return log_norm_ + (lambda_ - 1.0) * std::log(x1) + (lambda2_ - 1.0) * std::log(x2) - (p2_ / p12_) * x1 -
         (p1_ / p12_) * x2 + phi;
}

BifactorDensity::BifactorDensity(const AffineModel& model, SeriesControl ctl)
    : p1_(model.poly.singleton(0)),
      p2_(model.poly.singleton(1)),
      p12_(model.poly.top()),
      lambda_(model.shapes.lambda),
      lambda1_(model.shapes.lambdas.at(0)),
      lambda2_(model.shapes.lambdas.at(1)),
      c_(0.0),
      ctl_(ctl) {
  require_dim(model, 2, "bifactor gamma");
  c_ = existence_c(p1_, p2_, p12_);
  log_norm_ = -lambda_ * std::log(p12_) - (lambda1_ - lambda_) * std::log(p1_) -
              (lambda2_ - lambda_) * std::log(p2_) - std::lgamma(lambda1_) - std::lgamma(lambda2_);
}

double BifactorDensity::logpdf(double x1, double x2) const {
  if (!(x1 > 0.0) || !(x2 > 0.0)) return kNegInf;
  if (c_ == 0.0)
    return gamma_marginal_logpdf(p1_, lambda1_, x1) + gamma_marginal_logpdf(p2_, lambda2_, x2);
  const double fi = lauricella_fi(lambda1_ - lambda_, lambda2_ - lambda_, lambda_, c_ * (p12_ / p1_) * x1,
                                  c_ * (p12_ / p2_) * x2, c_ * x1 * x2, ctl_)
                        .log_abs();
  return log_norm_ + (lambda1_ - 1.0) * std::log(x1) + (lambda2_ - 1.0) * std::log(x2) - (p2_ / p12_) * x1 -
         (p1_ / p12_) * x2 + fi;
}

TrivariateGammaDensity::TrivariateGammaDensity(const AffineModel& model, SeriesControl ctl) : ctl_(ctl) {
  require_dim(model, 3, "trivariate gamma");
  if (!model.shapes.is_pure()) throw ArgumentError("trivariate gamma density needs lambda_i = lambda");
  const auto& P = model.poly;
  for (std::uint32_t b = 1; b < 8; ++b)
    if (!(P.coeff_bits(b) > 0.0))
      throw PreconditionError("trivariate density needs p_T > 0 for every non-empty T (failed at T = {" +
                              SubsetMask(b, 3).label() + "})");
  const DivisibilityReport rep = check_infinite_divisibility(P);
  if (!rep.divisible)
    throw PreconditionError("trivariate density needs every btilde_S >= 0 (model is not infinitely divisible)");
  const auto b = btilde_all(rep.dual);
  // Values within the divisibility tolerance of zero are treated as zero.
  b12_ = std::max(0.0, b[0b011]);
  b13_ = std::max(0.0, b[0b101]);
  b23_ = std::max(0.0, b[0b110]);
  b123_ = std::max(0.0, b[0b111]);
  d1_ = rep.dual.at_bits(0b001);
  d2_ = rep.dual.at_bits(0b010);
  d3_ = rep.dual.at_bits(0b100);
  lambda_ = model.shapes.lambda;
  log_norm_ = -lambda_ * std::log(P.top()) - 3.0 * std::lgamma(lambda_);
}

double TrivariateGammaDensity::logpdf(double x1, double x2, double x3) const {
  if (!(x1 > 0.0) || !(x2 > 0.0) || !(x3 > 0.0)) return kNegInf;
  const double a13 = b13_ * x1 * x3;
  const double a23 = b23_ * x2 * x3;
  const double f = lauricella_fii(lambda_, lambda_, a13 * a23, b123_ * x1 * x2 * x3, b12_ * x1 * x2, a13 + a23, ctl_)
                       .log_abs();
  return log_norm_ + d1_ * x1 + d2_ * x2 + d3_ * x3 + (lambda_ - 1.0) * std::log(x1 * x2 * x3) + f;
}

double bivariate_gamma_logpdf(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl) {
  require_x(x, 2);
  return BivariateGammaDensity(model, ctl).logpdf(x[0], x[1]);
}

double multisensor_logpdf(double p1, double p2, double p12, double lambda, double lambda2, std::span<const double> x,
                          const SeriesControl& ctl) {
  require_x(x, 2);
  return MultisensorDensity(p1, p2, p12, lambda, lambda2, ctl).logpdf(x[0], x[1]);
}

double bifactor_logpdf(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl) {
  require_x(x, 2);
  return BifactorDensity(model, ctl).logpdf(x[0], x[1]);
}

double trivariate_gamma_logpdf(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl) {
  require_x(x, 3);
  return TrivariateGammaDensity(model, ctl).logpdf(x[0], x[1], x[2]);
}

DensityPoint evaluate_density(const AffineModel& model, std::span<const double> x, const SeriesControl& ctl) {
  require_x(x, static_cast<std::size_t>(model.dim()));
  double lp;
  const auto& s = model.shapes;
  if (model.dim() == 2) {
    const double p1 = model.poly.singleton(0), p2 = model.poly.singleton(1), p12 = model.poly.top();
    const bool pure1 = s.lambdas[0] == s.lambda, pure2 = s.lambdas[1] == s.lambda;
    if (pure1 && pure2)
      lp = BivariateGammaDensity(model, ctl).logpdf(x[0], x[1]);
    else if (pure1)
      lp = MultisensorDensity(p1, p2, p12, s.lambda, s.lambdas[1], ctl).logpdf(x[0], x[1]);
    else if (pure2)
      lp = MultisensorDensity(p2, p1, p12, s.lambda, s.lambdas[0], ctl).logpdf(x[1], x[0]);
    else
      lp = BifactorDensity(model, ctl).logpdf(x[0], x[1]);
  } else if (model.dim() == 3) {
    lp = TrivariateGammaDensity(model, ctl).logpdf(x[0], x[1], x[2]);
  } else {
    throw ArgumentError("closed-form densities exist only for n = 2 and n = 3");
  }
  return {std::vector<double>(x.begin(), x.end()), lp, std::exp(lp)};
}

}  // namespace gammacop
