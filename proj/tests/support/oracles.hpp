#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls into the library paths under test.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace oracle {

inline double log_poch(double a, int k) { return std::lgamma(a + k) - std::lgamma(a); }

// Direct truncated sums (positive parameters, non-negative arguments).
inline double phi3(double a, double b, double x, double y, int N = 80) {
  double s = 0.0;
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      double t = std::exp(-log_poch(b, m + n) - std::lgamma(m + 1.0) - std::lgamma(n + 1.0));
      if (m > 0) t *= std::exp(log_poch(a, m)) * std::pow(x, m);
      if (n > 0) t *= std::pow(y, n);
      s += t;
    }
  return s;
}

inline double lauricella_fi(double a, double b, double c, double z1, double z2, double z3, int N = 50) {
  double s = 0.0;
  for (int m1 = 0; m1 < N; ++m1)
    for (int m2 = 0; m2 < N; ++m2)
      for (int m3 = 0; m3 < N; ++m3) {
        double lt = log_poch(a, m1) + log_poch(b, m2) + log_poch(c, m3) - log_poch(a + c, m1 + m3) -
                    log_poch(b + c, m2 + m3) - std::lgamma(m1 + 1.0) - std::lgamma(m2 + 1.0) -
                    std::lgamma(m3 + 1.0);
        double t = std::exp(lt);
        if (m1) t *= std::pow(z1, m1);
        if (m2) t *= std::pow(z2, m2);
        if (m3) t *= std::pow(z3, m3);
        s += t;
      }
  return s;
}

inline double lauricella_fii(double l1, double l2, double z1, double z2, double z3, double z4, int N = 40) {
  double s = 0.0;
  const double z[4] = {z1, z2, z3, z4};
  for (int m1 = 0; m1 < N; ++m1)
    for (int m2 = 0; m2 < N; ++m2)
      for (int m3 = 0; m3 < N; ++m3)
        for (int m4 = 0; m4 < N; ++m4) {
          const int m[4] = {m1, m2, m3, m4};
          double lt = -log_poch(l1, m1 + m2 + m3) - log_poch(l2, 2 * m1 + m2 + m4);
          double t = 1.0;
          bool zero = false;
          for (int i = 0; i < 4; ++i) {
            lt -= std::lgamma(m[i] + 1.0);
            if (m[i]) {
              if (z[i] == 0.0) zero = true;
              t *= std::pow(z[i], m[i]);
            }
          }
          if (!zero) s += t * std::exp(lt);
        }
  return s;
}

// Multilinear power series in n variables (epsilon_i^2 = 0), coefficients
// indexed by subset mask, multiplied by subset convolution.
inline std::vector<double> subset_convolve(const std::vector<double>& f, const std::vector<double>& g) {
  std::vector<double> h(f.size(), 0.0);
  for (std::uint32_t s = 0; s < f.size(); ++s)
    for (std::uint32_t t = s;; t = (t - 1) & s) {
      h[s] += f[t] * g[s ^ t];
      if (t == 0) break;
    }
  return h;
}

// -log(1 - F) for F without constant term: sum_k F^k / k.
inline std::vector<double> neg_log_one_minus(const std::vector<double>& f) {
  const int n = std::countr_zero(f.size());
  std::vector<double> out(f.size(), 0.0), power = f;
  for (int k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < f.size(); ++i) out[i] += power[i] / k;
    power = subset_convolve(power, f);
  }
  return out;
}

inline double stirling2(int n, int k) {
  std::vector<std::vector<double>> s(n + 1, std::vector<double>(n + 1, 0.0));
  s[0][0] = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

// Kolmogorov limiting survival function with the Stephens small-sample
// correction.
inline double ks_pvalue(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lam = (sn + 0.12 + 0.11 / sn) * d;
  if (lam < 0.2) return 1.0;
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double t = 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lam * lam);
    s += t;
    if (std::fabs(t) < 1e-16) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

// One-sample KS statistic against a continuous cdf.
template <class Cdf>
double ks_statistic(std::vector<double> x, Cdf cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

inline double chi2_pvalue(const std::vector<double>& observed, const std::vector<double>& expected, int dof) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i];
    stat += (observed[i] - e) * (observed[i] - e) / e;
  }
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), stat));
}

inline double rel_err(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

}  // namespace oracle
