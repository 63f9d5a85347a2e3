#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "../support/oracles.hpp"
#include "gammacop/copulas.hpp"
#include "gammacop/dependence.hpp"
#include "gammacop/errors.hpp"

using namespace gammacop;
using boost::math::quadrature::gauss_kronrod;

namespace {

// Bivariate model with p_i = 1 and correlation r: p_12 = 1 - r.
CopulaModel copula_for(double r, double lam, double l1, double l2) {
  return CopulaModel::build(AffineModel(AffinePolynomial(2, {1, 1, 1, 1 - r}), ShapeParams{lam, {l1, l2}}));
}

double integrate_unit_square(const std::function<double(double, double)>& f) {
  auto inner = [&](double x) {
    return gauss_kronrod<double, 21>::integrate([&](double y) { return f(x, y); }, 0.0, 1.0, 12, 1e-12);
  };
  return gauss_kronrod<double, 21>::integrate(inner, 0.0, 1.0, 12, 1e-12);
}

double naive_tau(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = (x[i] - x[j]) * (y[i] - y[j]);
      s += (a > 0) - (a < 0);
    }
  return 2.0 * s / (double(n) * (n - 1));
}

std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = 1.0 + static_cast<double>(std::count_if(x.begin(), x.end(), [&](double v) { return v < x[i]; }));
  return r;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n, mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

TEST_CASE("independence gives zero") {
  CHECK(kendall_tau_closed(0.0, 1.3, 2.0, 1.5).value == 0.0);
  CHECK(spearman_rho_closed(0.0, 1.3, 2.0, 1.5).value == 0.0);
}

TEST_CASE("closed forms against direct integrals of the copula") {
  for (double r : {0.1, 0.5, 0.9})
    for (const auto& sh : {std::array<double, 3>{1.0, 1.0, 1.0}, {0.5, 1.0, 1.5}, {2.0, 10.0, 10.0}}) {
      const CopulaModel c = copula_for(r, sh[0], sh[1], sh[2]);
      const double rho = 12.0 * integrate_unit_square([&](double u, double v) {
                           return copula_cdf(c, std::vector<double>{u, v});
                         }) - 3.0;
      CHECK(std::fabs(spearman_rho_closed(r, sh[0], sh[1], sh[2]).value - rho) < 1e-8);
      const int d1[] = {0}, d2[] = {1};
      const double tau = 1.0 - 4.0 * integrate_unit_square([&](double u, double v) {
                           const double p[] = {u, v};
                           return copula_partial(c, p, d1) * copula_partial(c, p, d2);
                         });
      CHECK(std::fabs(kendall_tau_closed(r, sh[0], sh[1], sh[2]).value - tau) < 1e-7);
    }
}

TEST_CASE("closed forms against the library quadrature") {
  for (double r : {0.1, 0.5, 0.9})
    for (double lam : {0.5, 2.0}) {
      const CopulaModel c = copula_for(r, lam, 2 * lam, 3 * lam);
      CHECK(std::fabs(kendall_tau_closed(r, lam, 2 * lam, 3 * lam).value - kendall_tau_quadrature(c).value) < 1e-6);
      CHECK(std::fabs(spearman_rho_closed(r, lam, 2 * lam, 3 * lam).value - spearman_rho_quadrature(c).value) < 1e-8);
    }
}

TEST_CASE("two Spearman forms agree and both measures grow with r") {
  double pt = -1, pr = -1;
  for (double r = 0.05; r < 1.0; r += 0.05) {
    const DependenceResult rho = spearman_rho_closed(r, 1.2, 1.2, 3.0);
    CHECK(rho.cross_check_gap < 1e-10);
    const double tau = kendall_tau_closed(r, 1.2, 1.2, 3.0).value;
    CHECK(tau > pt);
    CHECK(rho.value > pr);
    CHECK(tau >= 0.0);
    pt = tau;
    pr = rho.value;
  }
}

TEST_CASE("closed-form domain") {
  CHECK_THROWS_AS(kendall_tau_closed(1.2, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(spearman_rho_closed(-0.1, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS(kendall_tau_closed(0.5, 2.0, 1.0, 3.0));
  CHECK_THROWS(spearman_rho_closed(0.5, 0.0, 1.0, 3.0));
  CHECK(parse_dependence_method("quad") == DependenceMethod::quadrature);
  CHECK(parse_dependence_method("mc") == DependenceMethod::monte_carlo);
  CHECK(to_string(DependenceMethod::closed_form) == "closed_form");
  CHECK_THROWS_AS(parse_dependence_method("exact"), ArgumentError);
}

TEST_CASE("sample statistics match naive O(n^2) versions") {
  std::mt19937_64 g(4);
  std::normal_distribution<double> z;
  std::vector<double> x(700), y(700);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = z(g);
    y[i] = 0.6 * x[i] + z(g);
  }
  CHECK(sample_kendall_tau(x, y) == doctest::Approx(naive_tau(x, y)).epsilon(1e-12));
  CHECK(sample_spearman_rho(x, y) == doctest::Approx(pearson(ranks(x), ranks(y))).epsilon(1e-12));
  const RankDependence rd = rank_dependence(x, y, 10);
  CHECK(rd.tau.est_error > 0.0);
  CHECK(rd.rho.est_error > 0.0);
  CHECK(rd.tau.method == DependenceMethod::monte_carlo);
}

TEST_CASE("Monte Carlo agrees with the closed forms") {
  const CopulaModel c = copula_for(0.7, 1.0, 2.0, 3.0);
  const RankDependence mc = dependence_monte_carlo(c, 200000, 17);
  const double tau = kendall_tau_closed(0.7, 1.0, 2.0, 3.0).value, rho = spearman_rho_closed(0.7, 1.0, 2.0, 3.0).value;
  CHECK(std::fabs(mc.tau.value - tau) < 4 * mc.tau.est_error);
  CHECK(std::fabs(mc.rho.value - rho) < 4 * mc.rho.est_error);
  CHECK(copula_r12(c) == doctest::Approx(0.7));
}
