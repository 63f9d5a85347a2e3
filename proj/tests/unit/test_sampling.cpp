#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "../support/oracles.hpp"
#include "gammacop/copulas.hpp"
#include "gammacop/dependence.hpp"
#include "gammacop/errors.hpp"
#include "gammacop/sampling.hpp"

using namespace gammacop;

namespace {

constexpr double kThreshold = 1e-4;

AffineModel bivariate(double p1, double p2, double p12, double lam, double l1, double l2) {
  return AffineModel(AffinePolynomial(2, {1, p1, p2, p12}), ShapeParams{lam, {l1, l2}});
}

double gamma_cdf_ref(double scale, double shape, double x) { return boost::math::gamma_p(shape, x / scale); }

double corr(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ma += a[i], mb += b[i];
  ma /= n, mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

TEST_CASE("rng reproducibility and streams") {
  Rng a(42), b(42), c(42, 1);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
  Rng u(1);
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    CHECK((v > 0.0 && v < 1.0));
  }
}

TEST_CASE("gamma variates") {
  Rng rng(5);
  for (const auto& [p, shape] : {std::pair{1.0, 1.0}, {2.0, 0.3}, {0.5, 5.0}, {1.0, 0.02}}) {
    const int n = 100000;
    std::vector<double> x(n);
    double mean = 0.0;
    for (auto& v : x) {
      v = sample_gamma(p, shape, rng);
      mean += v / n;
    }
    const double se = std::sqrt(shape) * p / std::sqrt(double(n));
    CHECK(std::fabs(mean - shape * p) < 4 * se);
    const double d = oracle::ks_statistic(x, [&](double t) { return gamma_cdf_ref(p, shape, t); });
    CHECK(oracle::ks_pvalue(d, n) > kThreshold);
  }
  CHECK_THROWS_AS(sample_gamma(1.0, 0.0, rng), ArgumentError);
}

TEST_CASE("bivariate mixture self-check") {
  const BivariateGammaSampler s(1.0, 2.0, 1.2, 1.5);
  CHECK(std::fabs(s.weight_sum() - 1.0) < 1e-10);
  CHECK(s.max_coefficient_error() < 1e-10);
  CHECK(s.r() == doctest::Approx(0.4));
  for (double w : s.weights()) CHECK(w >= 0.0);
  CHECK_THROWS_AS(BivariateGammaSampler(1.0, 1.0, 1.5, 1.0), ExistenceError);
  CHECK_THROWS_AS(BivariateGammaSampler(1.0, 1.0, 0.0, 1.0), PreconditionError);
}

TEST_CASE("bivariate gamma draws: margins and correlation") {
  const BivariateGammaSampler s(1.0, 2.0, 1.2, 1.5);
  Rng rng(8);
  const int n = 200000;
  std::vector<double> x1(n), x2(n);
  for (int i = 0; i < n; ++i) {
    const auto x = s(rng);
    x1[i] = x[0];
    x2[i] = x[1];
  }
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(x1, [](double t) { return gamma_cdf_ref(1.0, 1.5, t); }), n) > kThreshold);
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(x2, [](double t) { return gamma_cdf_ref(2.0, 1.5, t); }), n) > kThreshold);
  // Pearson correlation; the delta-method SE is bounded by (1 + r^2)/sqrt(n) for these tails.
  const double r = corr(x1, x2);
  CHECK(std::fabs(r - 0.4) < 4 * 1.5 / std::sqrt(double(n)));
}

TEST_CASE("multifactor draws have gamma(p_i, lambda_i) margins") {
  const AffineModel m = bivariate(1.0, 1.5, 0.9, 1.2, 2.0, 3.5);
  const MultifactorSampler s(m);
  Rng rng(9);
  const int n = 100000;
  std::vector<double> x1(n), x2(n);
  for (int i = 0; i < n; ++i) {
    const auto x = s(rng);
    x1[i] = x[0];
    x2[i] = x[1];
  }
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(x1, [](double t) { return gamma_cdf_ref(1.0, 2.0, t); }), n) > kThreshold);
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(x2, [](double t) { return gamma_cdf_ref(1.5, 3.5, t); }), n) > kThreshold);
  Rng r1(3), r2(3);
  const auto a = sample_multifactor(m, r1);
  const auto b = s(r2);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
}

TEST_CASE("copula draws: uniform margins and Kendall tau") {
  const AffineModel m = bivariate(1.0, 1.0, 0.5, 1.0, 2.0, 3.0);
  const CopulaModel c = CopulaModel::build(m);
  Rng rng(10);
  const int n = 100000;
  std::vector<double> u(n), v(n);
  for (int i = 0; i < n; ++i) {
    const auto d = sample_copula(c, rng);
    u[i] = d[0];
    v[i] = d[1];
  }
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(u, [](double t) { return t; }), n) > kThreshold);
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(v, [](double t) { return t; }), n) > kThreshold);
  const RankDependence rd = rank_dependence(u, v);
  CHECK(std::fabs(rd.tau.value - kendall_tau_closed(0.5, 1.0, 2.0, 3.0).value) < 4 * rd.tau.est_error);
}

TEST_CASE("frailty construction samples the same copula") {
  const AffineModel m = bivariate(1.0, 1.0, 0.3, 1.5, 1.5, 4.0);
  const MultifactorSampler xs(m);
  Rng rng(12);
  const int n = 100000;
  std::vector<double> u(n), v(n);
  for (int i = 0; i < n; ++i) {
    const auto d = sample_copula_frailty(xs, m, rng);
    u[i] = d[0];
    v[i] = d[1];
  }
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(u, [](double t) { return t; }), n) > kThreshold);
  const RankDependence rd = rank_dependence(u, v);
  CHECK(std::fabs(rd.tau.value - kendall_tau_closed(0.7, 1.5, 1.5, 4.0).value) < 4 * rd.tau.est_error);
  CHECK(std::fabs(rd.rho.value - spearman_rho_closed(0.7, 1.5, 1.5, 4.0).value) < 4 * rd.rho.est_error);
}

TEST_CASE("independent copula gives a flat 10x10 histogram") {
  const CopulaModel c = CopulaModel::build(bivariate(1.0, 2.0, 2.0, 1.3, 1.3, 2.0));
  Rng rng(13);
  const int n = 100000;
  std::vector<double> obs(100, 0.0), expect(100, n / 100.0);
  for (int i = 0; i < n; ++i) {
    const auto d = sample_copula(c, rng);
    obs[std::min(9, int(d[0] * 10)) * 10 + std::min(9, int(d[1] * 10))] += 1;
  }
  CHECK(oracle::chi2_pvalue(obs, expect, 99) > kThreshold);
}

TEST_CASE("trivariate Rosenblatt draws") {
  const AffineModel m(AffinePolynomial(3, {1, 1, 1, 0.5, 1, 0.6, 0.7, 0.3}), ShapeParams{1.2, {1.2, 2.0, 1.5}});
  const CopulaModel c = CopulaModel::build(m);
  Rng rng(14);
  const int n = 30000;
  std::vector<std::vector<double>> v(3, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    const auto d = sample_copula3(c, rng);
    for (int k = 0; k < 3; ++k) v[k][i] = d[k];
  }
  for (int k = 0; k < 3; ++k)
    CHECK(oracle::ks_pvalue(oracle::ks_statistic(v[k], [](double t) { return t; }), n) > kThreshold);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const int i = pr[0], j = pr[1];
    const double r = pair_correlation(m.poly, i, j);
    const RankDependence rd = rank_dependence(v[i], v[j]);
    CHECK(std::fabs(rd.tau.value - kendall_tau_closed(r, 1.2, m.shapes.lambdas[i], m.shapes.lambdas[j]).value) <
          4 * rd.tau.est_error);
  }
}

TEST_CASE("trivariate independence") {
  const double ps[] = {1.0, 2.0, 0.5};
  const CopulaModel c = CopulaModel::build(AffineModel(AffinePolynomial::product(ps), ShapeParams::uniform(1.0, 3)));
  Rng rng(15);
  const int n = 20000;
  std::vector<double> obs(27, 0.0), expect(27, n / 27.0);
  for (int i = 0; i < n; ++i) {
    const auto d = sample_copula3(c, rng);
    int cell = 0;
    for (int k = 0; k < 3; ++k) cell = cell * 3 + std::min(2, int(d[k] * 3));
    obs[cell] += 1;
  }
  CHECK(oracle::chi2_pvalue(obs, expect, 26) > kThreshold);
}

TEST_CASE("same seed, same draws") {
  const CopulaModel c = CopulaModel::build(bivariate(1.0, 1.0, 0.5, 1.0, 2.0, 3.0));
  Rng a(77, 3), b(77, 3);
  for (int i = 0; i < 100; ++i) {
    const auto x = sample_copula(c, a), y = sample_copula(c, b);
    CHECK(x[0] == y[0]);
    CHECK(x[1] == y[1]);
  }
}
