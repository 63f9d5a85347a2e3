#include "gammacop/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gammacop/errors.hpp"
#include "gammacop/sampling.hpp"

namespace gammacop {
namespace {

SeriesControl unit_disc_control(const SeriesControl& ctl) {
  SeriesControl c = ctl;
  c.tail_window = std::max(c.tail_window, 20);
  c.max_terms = std::max(c.max_terms, 100000);
  return c;
}

void check_params(double r12, double lambda, double l1, double l2) {
  if (!(r12 >= 0.0 && r12 <= 1.0)) throw DomainError("r12 must lie in [0, 1]");
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (!(l1 >= lambda) || !(l2 >= lambda)) throw DomainError("need lambda1, lambda2 >= lambda");
}

// v * 3F2(upper; lower; r) with its error bound.
struct Term {
  double value;
  double error;
};

Term f32(double a1, double a2, double a3, double b1, double b2, double r, const SeriesControl& ctl) {
  const double upper[] = {a1, a2, a3};
  const double lower[] = {b1, b2};
  if (r == 1.0 && !(b1 + b2 - a1 - a2 - a3 > 0.0))
    throw DomainError("3F2 at unit argument needs positive parameter excess");
  const SeriesValue s = pfq(upper, lower, r, ctl);
  return {s.value(), s.abs_error * std::exp(s.log_scale)};
}

struct Quad2 {
  double value;
  double error;
};

template <class F>
Quad2 nested_tanh_sinh(F f, double tol) {
  boost::math::quadrature::tanh_sinh<double> outer_q, inner_q;
  double inner_err_max = 0.0;
  auto outer = [&](double t1) {
    double err = 0.0;
    const double v = inner_q.integrate([&](double t2) { return f(t1, t2); }, 0.0, 1.0, tol, &err);
    inner_err_max = std::max(inner_err_max, err);
    return v;
  };
  double err = 0.0;
  const double v = outer_q.integrate(outer, 0.0, 1.0, tol, &err);
  return {v, err + inner_err_max};
}

void check_bivariate(const CopulaModel& c) {
  if (c.dim() != 2) throw ArgumentError("dependence measures need a bivariate copula");
}

double mean(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double batch_se(const std::vector<double>& b) {
  const double m = mean(b);
  double ss = 0.0;
  for (double x : b) ss += (x - m) * (x - m);
  return std::sqrt(ss / (b.size() - 1.0) / b.size());
}

std::vector<double> ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<double>(k + 1);
  return r;
}

}  // namespace

std::string to_string(DependenceMethod m) {
  switch (m) {
    case DependenceMethod::closed_form: return "closed_form";
    case DependenceMethod::quadrature: return "quadrature";
    case DependenceMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

DependenceMethod parse_dependence_method(const std::string& s) {
  if (s == "closed" || s == "closed_form") return DependenceMethod::closed_form;
  if (s == "quad" || s == "quadrature") return DependenceMethod::quadrature;
  if (s == "mc" || s == "monte_carlo") return DependenceMethod::monte_carlo;
  throw ArgumentError("unknown method '" + s + "' (closed, quad, mc)");
}

double copula_r12(const CopulaModel& c) {
  check_bivariate(c);
  return -c.alpha().at_bits(0b11);
}

DependenceResult kendall_tau_closed(double r, double lambda, double l1, double l2, const SeriesControl& ctl) {
  check_params(r, lambda, l1, l2);
  if (r == 0.0) return {0.0, DependenceMethod::closed_form, 0.0};
  const SeriesControl c = unit_disc_control(ctl);
  const double d1 = (2.0 * l1 + 1.0) * (2.0 * l2 + 1.0);
  const Term t1 = f32(2.0 * lambda, 1.0, 1.0, 2.0 * l1 + 1.0, 2.0 * l2 + 1.0, r, c);
  const Term t2 = f32(2.0 * lambda + 1.0, 1.0, 2.0, 2.0 * l1 + 2.0, 2.0 * l2 + 2.0, r, c);
  const Term t3 = f32(2.0 * lambda + 2.0, 2.0, 2.0, 2.0 * l1 + 3.0, 2.0 * l2 + 3.0, r, c);
  const double k2 = 4.0 * lambda * r / d1;
  const double k3 = lambda * lambda * r * r / (d1 * (l1 + 1.0) * (l2 + 1.0));
  const double tau = 1.0 - t1.value + k2 * t2.value - k3 * t3.value;
  const double err = t1.error + k2 * t2.error + k3 * t3.error + 8.0 * 2.2e-16 * (t1.value + k2 * t2.value);
  return {tau, DependenceMethod::closed_form, err};
}

DependenceResult spearman_rho_closed(double r, double lambda, double l1, double l2, const SeriesControl& ctl) {
  check_params(r, lambda, l1, l2);
  if (r == 0.0) return {0.0, DependenceMethod::closed_form, 0.0, 0.0};
  const SeriesControl c = unit_disc_control(ctl);
  const Term a = f32(1.0, 1.0, lambda, 2.0 * l1 + 1.0, 2.0 * l2 + 1.0, r, c);
  const Term b = f32(1.0, 2.0, lambda + 1.0, 2.0 * l1 + 2.0, 2.0 * l2 + 2.0, r, c);
  const double rho1 = 3.0 * (a.value - 1.0);
  const double k = 3.0 * lambda * r / ((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0));
  const double rho2 = k * b.value;
  const double err = 3.0 * a.error + 8.0 * 2.2e-16 * 3.0 * a.value;
  return {rho1, DependenceMethod::closed_form, err, std::fabs(rho1 - rho2)};
}

DependenceResult kendall_tau_quadrature(const CopulaModel& c, double tol) {
  check_bivariate(c);
  const double a = c.alpha().at_bits(0b11);
  const double l = c.lambda(), l1 = c.lambdas()[0], l2 = c.lambdas()[1];
  // Substituting t_i = v_i^{1/lambda_i}:
  //   int int dC/dv1 dC/dv2 dv = int int l1 l2 t1^{2 l1 - 1} t2^{2 l2 - 1} K^{-2l-2} A B dt.
  auto f = [&](double t1, double t2) {
    const double w1 = 1.0 - t1, w2 = 1.0 - t2;
    const double k = 1.0 + a * w1 * w2;
    const double g1 = 1.0 - (1.0 - l / l1) * t1;
    const double g2 = 1.0 - (1.0 - l / l2) * t2;
    const double pa = 1.0 + a * w2 * g1, pb = 1.0 + a * w1 * g2;
    return l1 * l2 * std::pow(t1, 2.0 * l1 - 1.0) * std::pow(t2, 2.0 * l2 - 1.0) * std::pow(k, -2.0 * l - 2.0) * pa * pb;
  };
  const Quad2 q = nested_tanh_sinh(f, tol);
  return {1.0 - 4.0 * q.value, DependenceMethod::quadrature, 4.0 * q.error};
}

DependenceResult spearman_rho_quadrature(const CopulaModel& c, double tol) {
  check_bivariate(c);
  const double a = c.alpha().at_bits(0b11);
  const double l = c.lambda(), l1 = c.lambdas()[0], l2 = c.lambdas()[1];
  auto f = [&](double t1, double t2) {
    const double k = 1.0 + a * (1.0 - t1) * (1.0 - t2);
    return l1 * l2 * std::pow(t1, 2.0 * l1 - 1.0) * std::pow(t2, 2.0 * l2 - 1.0) * std::pow(k, -l);
  };
  const Quad2 q = nested_tanh_sinh(f, tol);
  return {12.0 * q.value - 3.0, DependenceMethod::quadrature, 12.0 * q.error};
}

double sample_kendall_tau(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (y.size() != n || n < 2) throw ArgumentError("need two equally long samples of size >= 2");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  const std::vector<double> ry = ranks(y);
  // Walk in x order; count earlier points with larger y rank (discordant).
  std::vector<long> tree(n + 1, 0);
  long double discordant = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto r = static_cast<std::size_t>(ry[idx[k]]);
    long le = 0;
    for (std::size_t i = r; i > 0; i -= i & (~i + 1)) le += tree[i];
    discordant += static_cast<long double>(k) - le;
    for (std::size_t i = r; i <= n; i += i & (~i + 1)) ++tree[i];
  }
  const long double pairs = static_cast<long double>(n) * (n - 1) / 2.0L;
  return static_cast<double>(1.0L - 2.0L * discordant / pairs);
}

double sample_spearman_rho(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (y.size() != n || n < 2) throw ArgumentError("need two equally long samples of size >= 2");
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  long double d2 = 0;
  for (std::size_t i = 0; i < n; ++i) d2 += static_cast<long double>(rx[i] - ry[i]) * (rx[i] - ry[i]);
  const long double nn = n;
  return static_cast<double>(1.0L - 6.0L * d2 / (nn * (nn * nn - 1.0L)));
}

RankDependence rank_dependence(std::span<const double> x, std::span<const double> y, int batches) {
  const std::size_t n = x.size();
  if (batches < 2 || n / batches < 2) throw ArgumentError("too few points for batch standard errors");
  RankDependence out;
  out.tau = {sample_kendall_tau(x, y), DependenceMethod::monte_carlo, 0.0};
  out.rho = {sample_spearman_rho(x, y), DependenceMethod::monte_carlo, 0.0};
  const std::size_t m = n / batches;
  std::vector<double> bt, br;
  for (int b = 0; b < batches; ++b) {
    const auto xs = x.subspan(b * m, m), ys = y.subspan(b * m, m);
    bt.push_back(sample_kendall_tau(xs, ys));
    br.push_back(sample_spearman_rho(xs, ys));
  }
  out.tau.est_error = batch_se(bt);
  out.rho.est_error = batch_se(br);
  return out;
}

RankDependence dependence_monte_carlo(const CopulaModel& c, long n, std::uint64_t seed, std::uint64_t stream) {
  check_bivariate(c);
  if (n < 200) throw ArgumentError("Monte-Carlo dependence needs at least 200 samples");
  Rng rng(seed, stream);
  std::vector<double> x(n), y(n);
  for (long i = 0; i < n; ++i) {
    const auto v = sample_copula(c, rng);
    x[i] = v[0];
    y[i] = v[1];
  }
  return rank_dependence(x, y);
}

}  // namespace gammacop
