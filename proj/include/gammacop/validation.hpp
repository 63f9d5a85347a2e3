#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gammacop/copulas.hpp"
#include "gammacop/polynomial.hpp"
#include "gammacop/quadrature.hpp"
#include "gammacop/specialfn.hpp"

namespace gammacop {

struct CheckEntry {
  std::string name;
  double target = 0.0;
  double computed = 0.0;
  /// Pass iff |computed - target| <= tolerance (or the check's own rule).
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckEntry> checks;
  /// True iff every check that ran passed.
  bool overall = true;

  void add(CheckEntry e);
  void skip(const std::string& name, const std::string& reason);
  void merge(const ValidationReport& other);
};

/// Integration box [0, hi]^n with hi_i the gamma(p_i, shape_i) upper quantile at `tail`.
struct Box {
  std::vector<double> lo, hi;
};
Box marginal_box(std::span<const std::pair<double, double>> marginals, double tail = 1e-10);
Box marginal_box(const AffineModel& model, double tail = 1e-10);

/// int exp(-theta . x) pdf(x) dx over the box (n = 1, 2 or 3).
QuadResult laplace_of_density(const std::function<double(std::span<const double>)>& logpdf,
                              std::span<const double> theta, const Box& box, double tol);

/// P(theta)^{-lambda} prod (1 + p_i theta_i)^{-(lambda_i - lambda)}.
double model_laplace_transform(const AffineModel& model, std::span<const double> theta);

/// phi(phi_1^{-1}(v_1), ..., phi_n^{-1}(v_n)) computed from the Laplace
/// transform itself, independently of the copula code.
double laplace_composition(const AffineModel& model, std::span<const double> v);

/// Relative residual of P(theta) = sum_T alpha_T (u - 1)^T u^{T complement}, u_i = 1 + p_i theta_i.
double basis_identity_residual(const AffinePolynomial& poly, std::span<const double> theta);

/// int_0^inf e^{-st} t^{lam-1} 0F1(;lam;a t) / Gamma(lam) dt against s^{-lam} e^{a/s}.
CheckEntry hladik_pair_check(double lam, double a, double s, double tol, const SeriesControl& ctl = {});

/// int_0^1 e^{delta u} u^{alpha-1} (1-u)^{beta-1} du against B(alpha,beta) 1F1(alpha; alpha+beta; delta).
CheckEntry beta_series_check(double alpha, double beta, double delta, double tol, const SeriesControl& ctl = {});

/// Finite-difference oracles (central differences with one Richardson step).
double fd_copula_partial1(const CopulaModel& c, double v1, double v2, double h = 1e-3);
double fd_copula_mixed2(const CopulaModel& c, double v1, double v2, double h = 1e-3);
/// Mixed partial over all coordinates of an n <= 3 copula.
double fd_copula_mixed(const CopulaModel& c, std::span<const double> v, double h = 1e-2);

struct ValidationOptions {
  /// Adds the Monte-Carlo dependence check, the 3-D density checks and the
  /// full rectangle count.
  bool full = false;
  std::uint64_t seed = 20240517;
  int rectangles_quick = 2000;
  int rectangles_full = 10000;
  long mc_samples = 1000000;
};

ValidationReport run_full_validation(const AffineModel& model, const ValidationOptions& opt = {},
                                     const SeriesControl& ctl = {});

/// Registered check names and the closed-form operations each one exercises.
struct CheckInfo {
  std::string name;
  std::vector<std::string> covers;
};
const std::vector<CheckInfo>& check_registry();

}  // namespace gammacop
