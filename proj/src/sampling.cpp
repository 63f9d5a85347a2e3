#include "gammacop/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "gammacop/errors.hpp"

namespace gammacop {
namespace {

constexpr std::size_t kMaxWeights = 10'000'000;
constexpr int kCoefficientChecks = 50;

// Root of an increasing F on [0,1] with F(0) = 0, F(1) = 1: Newton steps
// kept inside a shrinking bisection bracket.
template <class F>
double invert_increasing(F f, double target, const char* what) {
  double lo = 0.0, hi = 1.0, v = target;
  for (int it = 0; it < 200; ++it) {
    const auto [val, deriv] = f(v);
    const double g = val - target;
    if (g == 0.0) return v;
    (g > 0.0 ? hi : lo) = v;
    double next = v - g / deriv;
    if (!(deriv > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - v) <= 1e-13 || hi - lo <= 1e-13) return next;
    v = next;
  }
  throw ConvergenceError(std::string(what) + ": conditional inversion did not converge", v, 0.5);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

double sample_gamma(double p, double shape, Rng& rng) {
  if (!(p > 0.0) || !(shape > 0.0)) throw ArgumentError("gamma scale and shape must be positive");
  if (shape < 1.0) {
    const double g = sample_gamma(1.0, shape + 1.0, rng);
    return p * g * std::exp(std::log(rng.uniform()) / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return p * d * v;
  }
}

BivariateGammaSampler::BivariateGammaSampler(double p1, double p2, double p12, double lambda)
    : p1_(p1), p2_(p2), p12_(p12), lambda_(lambda) {
  if (!(p1 > 0.0) || !(p2 > 0.0) || !(p12 > 0.0) || !(lambda > 0.0))
    throw PreconditionError("bivariate gamma sampler needs p1, p2, p12, lambda > 0");
  const double c = (p1 * p2 - p12) / (p12 * p12);
  if (c < 0.0) throw ExistenceError("bivariate gamma law does not exist: c < 0");
  r_ = 1.0 - p12 / (p1 * p2);

  double w = std::exp(lambda * std::log1p(-r_));
  double sum = 0.0;
  for (std::size_t k = 0;; ++k) {
    weights_.push_back(w);
    sum += w;
    cumulative_.push_back(sum);
    const double ratio = (lambda + k) * r_ / (k + 1.0);
    const double tail = ratio < 1.0 ? w * ratio / (1.0 - ratio) : 1.0;
    if (r_ == 0.0 || (tail < 1e-17 && static_cast<double>(k) > lambda * r_ / (1.0 - r_))) break;
    if (weights_.size() >= kMaxWeights) throw ConsistencyError("mixture weight table too long (r too close to 1)");
    w *= ratio;
  }
  weight_sum_ = sum;
  if (!(std::fabs(sum - 1.0) <= 1e-10))
    throw ConsistencyError("mixture weights sum to " + std::to_string(sum) + ", not 1");

  // Independent recomputation of the weights from the density's series coefficients.
  const double log_base = -lambda * std::log(p12) - 2.0 * std::lgamma(lambda);
  const double log_scale = 2.0 * std::log(p12) - std::log(p1) - std::log(p2);
  const int checks = static_cast<int>(std::min<std::size_t>(kCoefficientChecks, weights_.size()));
  for (int k = 0; k < checks && c > 0.0; ++k) {
    const double log_coef = log_base + k * std::log(c) - (std::lgamma(lambda + k) - std::lgamma(lambda)) -
                            std::lgamma(k + 1.0);
    const double log_w = log_coef + 2.0 * std::lgamma(lambda + k) + (lambda + k) * log_scale;
    if (log_w < -600.0) continue;
    const double ref = std::exp(log_w);
    max_coef_err_ = std::max(max_coef_err_, std::fabs(weights_[k] - ref) / ref);
  }
  if (!(max_coef_err_ <= 1e-10))
    throw ConsistencyError("mixture weights disagree with the density series coefficients");
}

BivariateGammaSampler::BivariateGammaSampler(const AffineModel& model)
    : BivariateGammaSampler(model.dim() == 2 ? model.poly.singleton(0) : throw ArgumentError("n = 2 required"),
                            model.poly.singleton(1), model.poly.top(), model.shapes.lambda) {}

int BivariateGammaSampler::draw_k(Rng& rng) const {
  // The table is truncated once the remaining mass is below 1e-17.
  const double u = rng.uniform() * weight_sum_;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cumulative_.begin(), cumulative_.size() - 1));
}

std::array<double, 2> BivariateGammaSampler::operator()(Rng& rng) const {
  const double shape = lambda_ + draw_k(rng);
  const double x1 = sample_gamma(p12_ / p2_, shape, rng);
  const double x2 = sample_gamma(p12_ / p1_, shape, rng);
  return {x1, x2};
}

MultifactorSampler::MultifactorSampler(const AffineModel& model)
    : y_(model),
      p1_(model.poly.singleton(0)),
      p2_(model.poly.singleton(1)),
      e1_(model.shapes.lambdas[0] - model.shapes.lambda),
      e2_(model.shapes.lambdas[1] - model.shapes.lambda) {}

std::array<double, 2> MultifactorSampler::operator()(Rng& rng) const {
  auto y = y_(rng);
  if (e1_ > 0.0) y[0] += sample_gamma(p1_, e1_, rng);
  if (e2_ > 0.0) y[1] += sample_gamma(p2_, e2_, rng);
  return y;
}

std::vector<double> sample_multifactor(const AffineModel& model, Rng& rng) {
  if (model.dim() != 2) throw ArgumentError("exact multi-factor sampling is available for n = 2");
  const auto x = MultifactorSampler(model)(rng);
  return {x[0], x[1]};
}

std::array<double, 2> sample_copula(const CopulaModel& c, Rng& rng) {
  if (c.dim() != 2) throw ArgumentError("sample_copula needs a bivariate copula");
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double v2 = invert_increasing(
      [&](double v) {
        const double pt[] = {u1, v};
        return std::pair{conditional_cdf(c, u1, v), copula_pdf2(c, pt)};
      },
      u2, "sample_copula");
  return {u1, v2};
}

std::vector<double> sample_copula_rosenblatt(const CopulaModel& c, Rng& rng) {
  const int n = c.dim();
  std::vector<double> v(n, 1.0);
  std::vector<int> dirs;
  v[0] = rng.uniform();
  dirs.push_back(0);
  for (int k = 1; k < n; ++k) {
    // Denominator: d^{k} C / dv_0..dv_{k-1} with v_k.. = 1, the joint density of V_0..V_{k-1}.
    const Jet den_jet = copula_jet(c, v, dirs);
    const double den = den_jet[(std::uint32_t{1} << k) - 1];
    if (!(den > 0.0)) throw ConsistencyError("non-positive conditioning density in Rosenblatt transform");
    dirs.push_back(k);
    const std::uint32_t prev = (std::uint32_t{1} << k) - 1, full = (std::uint32_t{1} << (k + 1)) - 1;
    const double u = rng.uniform();
    v[k] = invert_increasing(
        [&](double x) {
          v[k] = x;
          const Jet j = copula_jet(c, v, dirs);
          return std::pair{j[prev] / den, j[full] / den};
        },
        u, "sample_copula3");
  }
  return v;
}

std::array<double, 3> sample_copula3(const CopulaModel& c, Rng& rng) {
  if (c.dim() != 3) throw ArgumentError("sample_copula3 needs a trivariate copula");
  const auto v = sample_copula_rosenblatt(c, rng);
  return {v[0], v[1], v[2]};
}

std::array<double, 2> sample_copula_frailty(const MultifactorSampler& xs, const AffineModel& model, Rng& rng) {
  if (model.dim() != 2) throw ArgumentError("frailty copula sampling needs n = 2");
  const auto x = xs(rng);
  std::array<double, 2> u{};
  for (int i = 0; i < 2; ++i) {
    const double e = -std::log(rng.uniform());
    u[i] = std::exp(-model.shapes.lambdas[i] * std::log1p(model.poly.singleton(i) * e / x[i]));
  }
  return u;
}

}  // namespace gammacop
