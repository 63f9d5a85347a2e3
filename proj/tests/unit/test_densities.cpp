#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "../support/oracles.hpp"
#include "gammacop/densities.hpp"
#include "gammacop/errors.hpp"
#include "gammacop/validation.hpp"

using namespace gammacop;
using boost::math::quadrature::gauss_kronrod;

namespace {

AffineModel model2(double p1, double p2, double p12, double lam, double l1, double l2) {
  return AffineModel(AffinePolynomial(2, {1.0, p1, p2, p12}), ShapeParams{lam, {l1, l2}});
}

double gamma_pdf(double x, double shape, double scale) {
  return std::exp((shape - 1) * std::log(x) - x / scale - std::lgamma(shape) - shape * std::log(scale));
}

// Negative-binomial mixture of independent gamma pairs.
double mixture_pdf(double p1, double p2, double p12, double lam, double x1, double x2) {
  const double r = 1.0 - p12 / (p1 * p2);
  double s = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double w = std::exp(lam * std::log1p(-r) + oracle::log_poch(lam, k) + k * std::log(r) - std::lgamma(k + 1.0));
    s += w * gamma_pdf(x1, lam + k, p12 / p2) * gamma_pdf(x2, lam + k, p12 / p1);
  }
  return s;
}

double integrate2(const std::function<double(double, double)>& f, double X, double Y) {
  auto inner = [&](double x) {
    return gauss_kronrod<double, 21>::integrate([&](double y) { return f(x, y); }, 0.0, Y, 15, 1e-11);
  };
  return gauss_kronrod<double, 21>::integrate(inner, 0.0, X, 15, 1e-11);
}

}  // namespace

TEST_CASE("bivariate density equals the gamma mixture") {
  const double ps[][3] = {{1.0, 1.0, 0.5}, {2.0, 0.5, 0.3}, {1.0, 3.0, 2.9}};
  for (const auto& p : ps)
    for (double lam : {0.6, 1.0, 2.5})
      for (double x1 : {0.1, 1.0, 4.0})
        for (double x2 : {0.3, 2.0}) {
          const BivariateGammaDensity d(p[0], p[1], p[2], lam);
          CHECK(oracle::rel_err(std::exp(d.logpdf(x1, x2)), mixture_pdf(p[0], p[1], p[2], lam, x1, x2)) < 1e-10);
        }
}

TEST_CASE("bivariate density: Laplace transform, normalization and marginal") {
  const double p1 = 1.0, p2 = 2.0, p12 = 1.2, lam = 1.5;
  const BivariateGammaDensity d(p1, p2, p12, lam);
  const double X = gamma_upper_quantile(p1, lam, 1e-12), Y = gamma_upper_quantile(p2, lam, 1e-12);
  for (const auto& th : {std::array<double, 2>{0.0, 0.0}, {0.3, 0.7}, {1.0, 0.2}}) {
    const double q = integrate2([&](double x, double y) { return std::exp(d.logpdf(x, y) - th[0] * x - th[1] * y); }, X, Y);
    const double ref = std::pow(1 + p1 * th[0] + p2 * th[1] + p12 * th[0] * th[1], -lam);
    CHECK(oracle::rel_err(q, ref) < 1e-6);
  }
  for (double x1 : {0.2, 1.0, 3.0}) {
    const double m = gauss_kronrod<double, 21>::integrate([&](double y) { return std::exp(d.logpdf(x1, y)); }, 0.0, Y, 15, 1e-12);
    CHECK(oracle::rel_err(m, std::exp(gamma_marginal_logpdf(p1, lam, x1))) < 1e-6);
  }
}

TEST_CASE("bivariate density symmetry and finiteness") {
  const BivariateGammaDensity a(1.0, 2.0, 1.5, 0.8), b(2.0, 1.0, 1.5, 0.8);
  for (double x1 : {1e-8, 0.5, 3.0, 500.0})
    for (double x2 : {1e-6, 2.0, 800.0}) {
      CHECK(a.logpdf(x1, x2) == doctest::Approx(b.logpdf(x2, x1)).epsilon(1e-13));
      CHECK(std::isfinite(a.logpdf(x1, x2)));
    }
}

TEST_CASE("bivariate existence boundary") {
  CHECK_THROWS_AS(BivariateGammaDensity(1.0, 1.0, 1.5, 1.0), ExistenceError);
  CHECK_THROWS_AS(BivariateGammaDensity(1.0, 1.0, 0.0, 1.0), PreconditionError);
  CHECK_THROWS_AS(BivariateGammaDensity(1.0, 1.0, -0.5, 1.0), PreconditionError);
  const BivariateGammaDensity indep(2.0, 3.0, 6.0, 1.7);
  CHECK(indep.c() == 0.0);
  for (double x1 : {0.5, 2.0})
    for (double x2 : {0.1, 4.0})
      CHECK(std::exp(indep.logpdf(x1, x2)) ==
            doctest::Approx(gamma_pdf(x1, 1.7, 2.0) * gamma_pdf(x2, 1.7, 3.0)).epsilon(1e-13));
}

TEST_CASE("multisensor density: Laplace transform and reduction") {
  const double p1 = 1.0, p2 = 1.5, p12 = 0.9, lam = 1.2, l2 = 2.7;
  const MultisensorDensity d(p1, p2, p12, lam, l2);
  const double X = gamma_upper_quantile(p1, lam, 1e-12), Y = gamma_upper_quantile(p2, l2, 1e-12);
  for (const auto& th : {std::array<double, 2>{0.0, 0.0}, {0.4, 0.3}}) {
    const double q = integrate2([&](double x, double y) { return std::exp(d.logpdf(x, y) - th[0] * x - th[1] * y); }, X, Y);
    const double ref = std::pow(1 + p1 * th[0] + p2 * th[1] + p12 * th[0] * th[1], -lam) *
                       std::pow(1 + p2 * th[1], -(l2 - lam));
    CHECK(oracle::rel_err(q, ref) < 1e-6);
  }
  const MultisensorDensity same(p1, p2, p12, lam, lam);
  const BivariateGammaDensity biv(p1, p2, p12, lam);
  for (double x : {0.3, 1.0, 5.0}) CHECK(same.logpdf(x, 2 * x) == doctest::Approx(biv.logpdf(x, 2 * x)).epsilon(1e-12));
}

TEST_CASE("bifactor density: Laplace, reduction, convolution") {
  const AffineModel m = model2(1.0, 1.0, 0.6, 1.0, 2.5, 3.0);
  const BifactorDensity d(m);
  const double X = gamma_upper_quantile(1.0, 2.5, 1e-12), Y = gamma_upper_quantile(1.0, 3.0, 1e-12);
  for (const auto& th : {std::array<double, 2>{0.0, 0.0}, {0.2, 0.5}}) {
    const double q = integrate2([&](double x, double y) { return std::exp(d.logpdf(x, y) - th[0] * x - th[1] * y); }, X, Y);
    const double ref = std::pow(1 + th[0] + th[1] + 0.6 * th[0] * th[1], -1.0) * std::pow(1 + th[0], -1.5) *
                       std::pow(1 + th[1], -2.0);
    CHECK(oracle::rel_err(q, ref) < 1e-5);
  }
  // Y + Z with independent Z_i ~ Gamma(lambda_i - lambda, p_i).
  const BivariateGammaDensity y(1.0, 1.0, 0.6, 1.0);
  for (const auto& x : {std::array<double, 2>{0.5, 0.7}, {1.0, 2.0}, {2.5, 1.5}, {3.0, 3.0}, {0.8, 4.0}}) {
    const double conv = integrate2(
        [&](double z1, double z2) {
          return std::exp(y.logpdf(x[0] - z1, x[1] - z2)) * gamma_pdf(z1, 1.5, 1.0) * gamma_pdf(z2, 2.0, 1.0);
        },
        x[0], x[1]);
    CHECK(oracle::rel_err(std::exp(d.logpdf(x[0], x[1])), conv) < 1e-4);
  }
  const BifactorDensity red(model2(1.0, 1.5, 0.9, 1.2, 1.2, 2.7));
  const MultisensorDensity ms(1.0, 1.5, 0.9, 1.2, 2.7);
  for (double x : {0.4, 2.0}) CHECK(red.logpdf(x, 1.3) == doctest::Approx(ms.logpdf(x, 1.3)).epsilon(1e-11));
}

TEST_CASE("dispatcher picks the right form") {
  const double x[] = {0.7, 1.9};
  const AffineModel left = model2(1.0, 1.5, 0.9, 1.2, 2.7, 1.2);
  const MultisensorDensity swapped(1.5, 1.0, 0.9, 1.2, 2.7);
  CHECK(evaluate_density(left, x).logpdf == doctest::Approx(swapped.logpdf(1.9, 0.7)).epsilon(1e-13));
  const AffineModel bif = model2(1.0, 1.0, 0.6, 1.0, 2.5, 3.0);
  CHECK(evaluate_density(bif, x).logpdf == doctest::Approx(BifactorDensity(bif).logpdf(0.7, 1.9)).epsilon(1e-13));
  const DensityPoint p = evaluate_density(model2(1, 1, 0.5, 1, 1, 1), x);
  CHECK(p.pdf == doctest::Approx(std::exp(p.logpdf)));
  const AffineModel four(AffinePolynomial::product(std::vector<double>{1, 1, 1, 1}), ShapeParams::uniform(1.0, 4));
  CHECK_THROWS_AS(evaluate_density(four, std::vector<double>{1, 1, 1, 1}), ArgumentError);
  CHECK_THROWS_AS(evaluate_density(bif, std::vector<double>{1}), ArgumentError);
}

TEST_CASE("trivariate density: Kibble-Moran form") {
  // p_i = 1, p_ij = 1/2, p_123 = 1/4: pair btilde vanish, btilde_123 = 4.
  const AffineModel km(AffinePolynomial(3, {1, 1, 1, 0.5, 1, 0.5, 0.5, 0.25}), ShapeParams::uniform(1.0, 3));
  const TrivariateGammaDensity d(km);
  CHECK(std::fabs(d.btilde12()) < 1e-14);
  CHECK(d.btilde123() == doctest::Approx(4.0));
  for (const auto& x : {std::array<double, 3>{0.3, 0.5, 0.9}, {1.0, 2.0, 0.4}, {2.5, 2.5, 2.5}}) {
    double f2 = 0.0;
    const double z = 4.0 * x[0] * x[1] * x[2];
    for (int k = 0; k < 80; ++k) f2 += std::exp(k * std::log(z) - 3 * std::lgamma(k + 1.0));
    const double ref = 4.0 * std::exp(-2.0 * (x[0] + x[1] + x[2])) * f2;
    CHECK(oracle::rel_err(std::exp(d.logpdf(x[0], x[1], x[2])), ref) < 1e-11);
  }
}

TEST_CASE("trivariate density: Laplace transform and normalization") {
  const AffineModel m(AffinePolynomial(3, {1, 1, 1, 0.5, 1, 0.5, 0.5, 0.2}), ShapeParams::uniform(1.3, 3));
  const TrivariateGammaDensity d(m);
  auto lp = [&](std::span<const double> x) { return d.logpdf(x[0], x[1], x[2]); };
  const Box box = marginal_box(m, 1e-10);
  const double th[] = {0.2, 0.4, 0.6};
  const double q = laplace_of_density(lp, th, box, 1e-6).value;
  CHECK(oracle::rel_err(q, std::pow(m.poly.evaluate(th), -1.3)) < 1e-3);
  const double zero[] = {0, 0, 0};
  CHECK(std::fabs(laplace_of_density(lp, zero, box, 1e-6).value - 1.0) < 1e-3);
}

TEST_CASE("trivariate preconditions") {
  const ShapeParams s = ShapeParams::uniform(1.0, 3);
  CHECK_THROWS_AS(TrivariateGammaDensity(AffineModel(AffinePolynomial(3, {1, 1, 1, 0.5, 1, 0.5, 0.0, 0.2}), s)),
                  PreconditionError);
  // btilde_12 < 0 when p_13 p_23 < p_3 p_123.
  CHECK_THROWS_AS(TrivariateGammaDensity(AffineModel(AffinePolynomial(3, {1, 1, 1, 0.5, 1, 0.3, 0.3, 0.2}), s)),
                  PreconditionError);
  CHECK_THROWS_AS(TrivariateGammaDensity(AffineModel(AffinePolynomial(3, {1, 1, 1, 0.5, 1, 0.5, 0.5, 0.2}),
                                                     ShapeParams{1.0, {1.0, 2.0, 1.0}})),
                  ArgumentError);
}
