#pragma once

#include <cmath>
#include <span>

namespace gammacop {

/// Truncation policy shared by every series in the library.
struct SeriesControl {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  /// Per-index term budget.
  int max_terms = 400;
  /// Consecutive below-tolerance tail estimates required before stopping.
  int tail_window = 5;

  void validate() const;

  /// Defaults, with max_terms overridden by GAMMACOP_MAX_TERMS when set.
  static SeriesControl from_env();
};

/// A series sum held as mantissa * exp(log_scale), so that values beyond the
/// double range can still be combined in log space.
struct SeriesValue {
  double mantissa = 0.0;
  double log_scale = 0.0;
  /// Absolute error bound in mantissa units (tail estimate plus rounding).
  double abs_error = 0.0;
  long terms = 0;

  double value() const { return mantissa * std::exp(log_scale); }
  /// log|value|; -inf for an exact zero.
  double log_abs() const { return std::log(std::fabs(mantissa)) + log_scale; }
  double rel_error() const { return mantissa == 0.0 ? abs_error : abs_error / std::fabs(mantissa); }
};

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);
/// log (a)_k for a > 0.
double log_pochhammer(double a, int k);

/// Generalized hypergeometric pFq(upper; lower; z).
///
/// Converges for p <= q (entire), for p = q + 1 with |z| < 1, and at |z| = 1
/// when the parameter excess sum(lower) - sum(upper) is positive. A
/// non-positive integer upper parameter truncates the series. Throws
/// DomainError outside the convergence domain and ConvergenceError when the
/// term budget is exhausted.
SeriesValue pfq(std::span<const double> upper, std::span<const double> lower, double z,
                const SeriesControl& ctl = {});

/// 0F1(;b;z).
SeriesValue hyp0f1(double b, double z, const SeriesControl& ctl = {});
/// 1F1(a;b;z).
SeriesValue hyp1f1(double a, double b, double z, const SeriesControl& ctl = {});

/// Horn's confluent function
///   Phi3(a; b; x, y) = sum_{m,n} (a)_m / (b)_{m+n} x^m/m! y^n/n!.
SeriesValue horn_phi3(double a, double b, double x, double y, const SeriesControl& ctl = {});

/// Triple series
///   sum (a)_{m1} (b)_{m2} (c)_{m3} / [(a+c)_{m1+m3} (b+c)_{m2+m3}]
///       z1^{m1} z2^{m2} z3^{m3} / (m1! m2! m3!).
SeriesValue lauricella_fi(double a, double b, double c, double z1, double z2, double z3,
                          const SeriesControl& ctl = {});

/// Quadruple series
///   sum 1 / [(l1)_{m1+m2+m3} (l2)_{2 m1+m2+m4}] prod z_i^{m_i} / m_i!.
SeriesValue lauricella_fii(double l1, double l2, double z1, double z2, double z3, double z4,
                           const SeriesControl& ctl = {});

/// log B(a, b).
double log_beta(double a, double b);

/// Gamma(shape, scale p) cdf, upper tail, quantile and upper-tail quantile.
double gamma_cdf(double p, double shape, double x);
double gamma_sf(double p, double shape, double x);
double gamma_quantile(double p, double shape, double u);
double gamma_upper_quantile(double p, double shape, double tail);

}  // namespace gammacop
