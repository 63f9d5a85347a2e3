#pragma once

#include <cstdint>
#include <vector>

namespace gammacop {

/// Truncated multilinear Taylor expansion in m nilpotent directions
/// (eps_i^2 = 0). Coefficient `c[U]` multiplies eps^U, so for a function f
/// evaluated at x + eps, c[U] is the mixed partial d^{|U|} f / dx_U.
class Jet {
 public:
  explicit Jet(int m, double value = 0.0);
  /// x + eps_i.
  static Jet variable(int m, int i, double x);

  int dirs() const { return m_; }
  double value() const { return c_[0]; }
  double operator[](std::uint32_t u) const { return c_[u]; }
  double& operator[](std::uint32_t u) { return c_[u]; }

  Jet& operator+=(const Jet& o);
  Jet& operator*=(double s);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }

  /// f(x) for f with derivatives derivs[k] = f^{(k)}(value), k = 0..m.
  Jet compose(const std::vector<double>& derivs) const;

 private:
  int m_;
  std::vector<double> c_;
};

/// x^p for x > 0.
Jet pow(const Jet& x, double p);

}  // namespace gammacop
