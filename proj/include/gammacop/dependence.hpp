#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "gammacop/copulas.hpp"
#include "gammacop/specialfn.hpp"

namespace gammacop {

enum class DependenceMethod { closed_form, quadrature, monte_carlo };

std::string to_string(DependenceMethod m);
DependenceMethod parse_dependence_method(const std::string& s);

struct DependenceResult {
  double value = 0.0;
  DependenceMethod method = DependenceMethod::closed_form;
  double est_error = 0.0;
  /// Spearman closed form only: |two-series discrepancy|; NaN otherwise.
  double cross_check_gap = std::numeric_limits<double>::quiet_NaN();
};

/// Kendall's tau of the bivariate Laplace copula from three 3F2 series.
DependenceResult kendall_tau_closed(double r12, double lambda, double l1, double l2, const SeriesControl& ctl = {});

/// Spearman's rho from 3 [3F2(1,1,lambda; 2l1+1, 2l2+1; r) - 1], cross-checked
/// against the shifted single series.
DependenceResult spearman_rho_closed(double r12, double lambda, double l1, double l2, const SeriesControl& ctl = {});

/// 1 - 4 int int dC/du dC/dv by nested tanh-sinh quadrature.
DependenceResult kendall_tau_quadrature(const CopulaModel& c, double tol = 1e-12);
/// 12 int int C - 3 by nested tanh-sinh quadrature.
DependenceResult spearman_rho_quadrature(const CopulaModel& c, double tol = 1e-12);

/// Sample Kendall tau (O(n log n), no ties expected) and Spearman rho.
double sample_kendall_tau(std::span<const double> x, std::span<const double> y);
double sample_spearman_rho(std::span<const double> x, std::span<const double> y);

struct RankDependence {
  DependenceResult tau;
  DependenceResult rho;
};

/// Rank statistics of (x, y) with standard errors from `batches` batch means.
RankDependence rank_dependence(std::span<const double> x, std::span<const double> y, int batches = 100);

/// Monte-Carlo tau and rho from `n` copula draws.
RankDependence dependence_monte_carlo(const CopulaModel& c, long n, std::uint64_t seed, std::uint64_t stream = 0);

/// r12 = -alpha_12 of a bivariate copula.
double copula_r12(const CopulaModel& c);

}  // namespace gammacop
