#include "gammacop/copulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gammacop/densities.hpp"
#include "gammacop/divisibility.hpp"
#include "gammacop/errors.hpp"
#include "gammacop/specialfn.hpp"

namespace gammacop {
namespace {

constexpr int kMaxForceDim = 8;

void check_unit(std::span<const double> v, int n) {
  if (static_cast<int>(v.size()) != n) throw ArgumentError("point has wrong dimension");
  for (double x : v)
    if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("copula argument must lie in [0,1]^n");
}

// Bivariate density on the closed square; the caller checks the range.
double pdf2_unchecked(const CopulaModel& c, double v1, double v2) {
  const double a = c.alpha().at_bits(0b11);
  const double l = c.lambda(), l1 = c.lambdas()[0], l2 = c.lambdas()[1];
  const double w1 = c.w(0, v1), w2 = c.w(1, v2);
  const double s1 = 1.0 - w1, s2 = 1.0 - w2;
  const double k = 1.0 + a * w1 * w2;
  const double g1 = 1.0 - (1.0 - l / l1) * s1;
  const double g2 = 1.0 - (1.0 - l / l2) * s2;
  const double big_a = 1.0 + a * w2 * g1;
  const double big_b = 1.0 + a * w1 * g2;
  return std::pow(k, -l - 2.0) * (big_a * big_b - a * l * s1 * s2 / (l1 * l2));
}

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

CopulaModel::CopulaModel(SubsetMap alpha, double lambda, std::vector<double> lambdas)
    : alpha_(std::move(alpha)), lambda_(lambda), lambdas_(std::move(lambdas)) {
  const int n = alpha_.dim();
  ShapeParams{lambda_, lambdas_}.validate(n);
  if (alpha_.at_bits(0) != 1.0) throw ArgumentError("alpha_{} must equal 1");
  for (int i = 0; i < n; ++i)
    if (alpha_.at_bits(std::uint32_t{1} << i) != 0.0) throw ArgumentError("singleton alpha entries must be 0");
  for (std::uint32_t b = 0; b < alpha_.size(); ++b) {
    if (!std::isfinite(alpha_.at_bits(b))) throw ArgumentError("alpha coefficients must be finite");
    if (std::popcount(b) >= 2 && alpha_.at_bits(b) != 0.0) support_.push_back(b);
  }
  // Kernel at the corners w in {0,1}^n is the subset-sum (zeta) transform of alpha.
  std::vector<double> z = alpha_.values();
  for (int i = 0; i < n; ++i)
    for (std::uint32_t b = 0; b < z.size(); ++b)
      if (b & (std::uint32_t{1} << i)) z[b] += z[b ^ (std::uint32_t{1} << i)];
  min_corner_ = *std::min_element(z.begin(), z.end());
}

CopulaModel CopulaModel::from_alpha(SubsetMap alpha, double lambda, std::vector<double> lambdas) {
  CopulaModel c(std::move(alpha), lambda, std::move(lambdas));
  if (!(c.min_corner_ > 0.0))
    throw ModelError("copula kernel is not positive at every corner of the unit cube");
  return c;
}

CopulaModel CopulaModel::build(const AffineModel& model, const CopulaBuildOptions& opt) {
  const int n = model.dim();
  if (!opt.force) {
    const DivisibilityReport rep = check_infinite_divisibility(model.poly, opt.divisibility_tol);
    if (!rep.divisible) throw ModelError("model is not infinitely divisible; the Laplace copula is not guaranteed");
    CopulaModel c(fgm_coefficients(model.poly), model.shapes.lambda, model.shapes.lambdas);
    if (!(c.min_corner_ > 0.0))
      throw ConsistencyError("kernel not positive at a corner although the model is infinitely divisible");
    return c;
  }
  if (n > kMaxForceDim) throw ArgumentError("force mode supports n <= 8");
  CopulaModel c(fgm_coefficients(model.poly), model.shapes.lambda, model.shapes.lambdas);
  c.forced_ = true;
  if (!(c.min_corner_ > 0.0)) throw ModelError("forced copula rejected: kernel not positive at a corner");
  const double mass = min_rectangle_mass(c, opt.rectangles, opt.rectangle_seed);
  if (mass < -opt.rectangle_tol)
    throw ModelError("forced copula rejected: negative rectangle mass " + std::to_string(mass));
  return c;
}

double CopulaModel::w(int t, double v) const {
  if (v == 0.0) return 1.0;
  if (v == 1.0) return 0.0;
  return -std::expm1(std::log(v) / lambdas_[t]);
}

double CopulaModel::kernel(std::span<const double> v) const {
  const int n = dim();
  std::vector<double> w(n);
  for (int t = 0; t < n; ++t) w[t] = this->w(t, v[t]);
  double k = 1.0;
  for (std::uint32_t b : support_) {
    double prod = alpha_.at_bits(b);
    for (std::uint32_t r = b; r != 0 && prod != 0.0; r &= r - 1) prod *= w[std::countr_zero(r)];
    k += prod;
  }
  return k;
}

double copula_cdf(const CopulaModel& c, std::span<const double> v) {
  check_unit(v, c.dim());
  double prod = 1.0;
  for (double x : v) prod *= x;
  if (prod == 0.0) return 0.0;
  return prod * std::pow(c.kernel(v), -c.lambda());
}

double copula_pdf2(const CopulaModel& c, std::span<const double> v) {
  if (c.dim() != 2) throw ArgumentError("copula_pdf2 needs a bivariate copula");
  check_unit(v, 2);
  if (!(v[0] > 0.0 && v[0] < 1.0 && v[1] > 0.0 && v[1] < 1.0))
    throw DomainError("copula density needs v in the open unit square");
  return pdf2_unchecked(c, v[0], v[1]);
}

double conditional_cdf(const CopulaModel& c, double v1, double v2) {
  if (c.dim() != 2) throw ArgumentError("conditional_cdf needs a bivariate copula");
  if (!(v1 > 0.0 && v1 < 1.0)) throw DomainError("conditioning value must lie in (0,1)");
  if (!(v2 >= 0.0 && v2 <= 1.0)) throw ArgumentError("v2 must lie in [0,1]");
  if (v2 == 0.0) return 0.0;
  const double a = c.alpha().at_bits(0b11);
  const double l = c.lambda();
  const double w1 = c.w(0, v1), w2 = c.w(1, v2);
  const double g1 = 1.0 - (1.0 - l / c.lambdas()[0]) * (1.0 - w1);
  const double k = 1.0 + a * w1 * w2;
  return v2 * (1.0 + a * w2 * g1) * std::pow(k, -l - 1.0);
}

Jet copula_jet(const CopulaModel& c, std::span<const double> v, std::span<const int> dirs) {
  const int n = c.dim();
  check_unit(v, n);
  const int m = static_cast<int>(dirs.size());
  std::vector<int> dir_of(n, -1);
  for (int k = 0; k < m; ++k) {
    const int t = dirs[k];
    if (t < 0 || t >= n || dir_of[t] >= 0) throw ArgumentError("derivative coordinates must be distinct and in range");
    if (!(v[t] > 0.0 && v[t] < 1.0)) throw DomainError("differentiated coordinates must lie in (0,1)");
    dir_of[t] = k;
  }
  std::vector<Jet> w;
  w.reserve(n);
  Jet prod(m, 1.0);
  for (int t = 0; t < n; ++t) {
    if (dir_of[t] < 0) {
      w.emplace_back(m, c.w(t, v[t]));
      prod *= v[t];
    } else {
      const Jet x = Jet::variable(m, dir_of[t], v[t]);
      Jet s = pow(x, 1.0 / c.lambdas()[t]);
      s *= -1.0;
      s[0] = c.w(t, v[t]);
      w.push_back(std::move(s));
      prod = prod * x;
    }
  }
  Jet k(m, 1.0);
  for (std::uint32_t b : c.support()) {
    Jet term(m, c.alpha().at_bits(b));
    for (std::uint32_t r = b; r != 0; r &= r - 1) term = term * w[std::countr_zero(r)];
    k += term;
  }
  if (!(k.value() > 0.0)) throw ConsistencyError("copula kernel is not positive");
  return prod * pow(k, -c.lambda());
}

double copula_partial(const CopulaModel& c, std::span<const double> v, std::span<const int> dirs) {
  const Jet j = copula_jet(c, v, dirs);
  return j[(std::uint32_t{1} << dirs.size()) - 1];
}

double copula_pdf(const CopulaModel& c, std::span<const double> v) {
  if (c.dim() == 2) return copula_pdf2(c, v);
  std::vector<int> all(c.dim());
  for (int i = 0; i < c.dim(); ++i) all[i] = i;
  return copula_partial(c, v, all);
}

double rectangle_mass(const CopulaModel& c, std::span<const double> lo, std::span<const double> hi) {
  const int n = c.dim();
  check_unit(lo, n);
  check_unit(hi, n);
  std::vector<double> corner(n);
  double mass = 0.0;
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
    int lows = 0;
    for (int i = 0; i < n; ++i) {
      const bool use_lo = !((b >> i) & 1U);
      corner[i] = use_lo ? lo[i] : hi[i];
      lows += use_lo;
    }
    mass += (lows & 1 ? -1.0 : 1.0) * copula_cdf(c, corner);
  }
  return mass;
}

double min_rectangle_mass(const CopulaModel& c, int count, std::uint64_t seed) {
  const int n = c.dim();
  std::mt19937_64 g(seed);
  std::vector<double> lo(n), hi(n);
  double worst = std::numeric_limits<double>::infinity();
  for (int r = 0; r < count; ++r) {
    for (int i = 0; i < n; ++i) {
      const double a = uniform01(g), b = uniform01(g);
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }
    worst = std::min(worst, rectangle_mass(c, lo, hi));
  }
  return worst;
}

AssembledDistribution::AssembledDistribution(CopulaModel copula, std::vector<std::pair<double, double>> marginals)
    : copula_(std::move(copula)), marginals_(std::move(marginals)) {
  if (static_cast<int>(marginals_.size()) != copula_.dim())
    throw ArgumentError("need one marginal per copula coordinate");
  for (const auto& [p, shape] : marginals_)
    if (!(p > 0.0) || !(shape > 0.0) || !std::isfinite(p) || !std::isfinite(shape))
      throw ArgumentError("marginal scale and shape must be positive");
}

AssembledDistribution AssembledDistribution::from_model(const AffineModel& model, const CopulaBuildOptions& opt) {
  std::vector<std::pair<double, double>> marg;
  for (int i = 0; i < model.dim(); ++i) marg.emplace_back(model.poly.singleton(i), model.shapes.lambdas[i]);
  return {CopulaModel::build(model, opt), std::move(marg)};
}

double assembled_cdf(const AssembledDistribution& d, std::span<const double> x) {
  if (static_cast<int>(x.size()) != d.dim()) throw ArgumentError("point has wrong dimension");
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = gamma_cdf(d.marginals()[i].first, d.marginals()[i].second, x[i]);
  return copula_cdf(d.copula(), u);
}

double assembled_logpdf(const AssembledDistribution& d, std::span<const double> x) {
  const int n = d.dim();
  if (static_cast<int>(x.size()) != n) throw ArgumentError("point has wrong dimension");
  std::vector<double> u(n);
  double log_marg = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(x[i] > 0.0)) return -std::numeric_limits<double>::infinity();
    const auto [p, shape] = d.marginals()[i];
    u[i] = gamma_cdf(p, shape, x[i]);
    log_marg += gamma_marginal_logpdf(p, shape, x[i]);
  }
  double cop;
  if (n == 2) {
    cop = pdf2_unchecked(d.copula(), u[0], u[1]);
  } else {
    for (double& ui : u) ui = std::clamp(ui, 1e-300, 1.0 - 0x1.0p-53);
    cop = copula_pdf(d.copula(), u);
  }
  return std::log(cop) + log_marg;
}

}  // namespace gammacop
