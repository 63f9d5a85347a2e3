#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "gammacop/copulas.hpp"
#include "gammacop/polynomial.hpp"

namespace gammacop {

/// 64-bit Mersenne twister seeded from (seed, stream). Uniforms, normals and
/// gammas are produced by code in this library, so a given (seed, stream)
/// yields the same sequence with any standard library.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
  /// Standard normal (Marsaglia polar method).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Gamma variate with scale p (Marsaglia-Tsang; shape < 1 via U^{1/shape} boosting).
double sample_gamma(double p, double shape, Rng& rng);

/// Exact sampler for the bivariate gamma gamma_(P, lambda) as a negative
/// binomial mixture of independent gamma pairs:
///   K ~ NB(lambda, r),  X1 | K ~ Gamma(lambda + K, p12/p2),  X2 | K ~ Gamma(lambda + K, p12/p1).
class BivariateGammaSampler {
 public:
  /// Builds and self-checks the mixture weights; throws ConsistencyError if
  /// they do not sum to 1 or disagree with the density's series coefficients.
  BivariateGammaSampler(double p1, double p2, double p12, double lambda);
  explicit BivariateGammaSampler(const AffineModel& model);

  std::array<double, 2> operator()(Rng& rng) const;

  const std::vector<double>& weights() const { return weights_; }
  double weight_sum() const { return weight_sum_; }
  double max_coefficient_error() const { return max_coef_err_; }
  double r() const { return r_; }

 private:
  int draw_k(Rng& rng) const;

  double p1_, p2_, p12_, lambda_, r_;
  std::vector<double> weights_, cumulative_;
  double weight_sum_ = 0.0;
  double max_coef_err_ = 0.0;
};

/// gamma_(P, Lambda) for n = 2 as Y + Z with Y ~ gamma_(P, lambda) and
/// independent Z_i ~ Gamma(lambda_i - lambda, p_i).
class MultifactorSampler {
 public:
  explicit MultifactorSampler(const AffineModel& model);
  std::array<double, 2> operator()(Rng& rng) const;

 private:
  BivariateGammaSampler y_;
  double p1_, p2_, e1_, e2_;
};

std::vector<double> sample_multifactor(const AffineModel& model, Rng& rng);

/// Bivariate copula draw by conditional inversion.
std::array<double, 2> sample_copula(const CopulaModel& c, Rng& rng);

/// Trivariate copula draw by the Rosenblatt transform with exact conditionals.
std::array<double, 3> sample_copula3(const CopulaModel& c, Rng& rng);

/// Rosenblatt transform for any dimension.
std::vector<double> sample_copula_rosenblatt(const CopulaModel& c, Rng& rng);

/// Laplace-copula draw through the frailty representation: with
/// X ~ gamma_(P, Lambda) and iid unit exponentials E_i,
///   U_i = (1 + p_i E_i / X_i)^{-lambda_i}.
/// Bivariate only (needs an exact sampler for X).
std::array<double, 2> sample_copula_frailty(const MultifactorSampler& x, const AffineModel& model, Rng& rng);

}  // namespace gammacop
