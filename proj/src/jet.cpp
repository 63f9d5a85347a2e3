#include "gammacop/jet.hpp"

#include <cmath>

#include "gammacop/errors.hpp"

namespace gammacop {

Jet::Jet(int m, double value) : m_(m), c_(std::size_t{1} << m, 0.0) {
  if (m < 0 || m > 16) throw ArgumentError("jet direction count out of range");
  c_[0] = value;
}

Jet Jet::variable(int m, int i, double x) {
  Jet j(m, x);
  j.c_[std::size_t{1} << i] = 1.0;
  return j;
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t u = 0; u < c_.size(); ++u) c_[u] += o.c_[u];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet out(a.m_);
  const std::uint32_t size = static_cast<std::uint32_t>(a.c_.size());
  for (std::uint32_t u = 0; u < size; ++u) {
    double s = a.c_[0] * b.c_[u];
    for (std::uint32_t t = u; t != 0; t = (t - 1) & u) s += a.c_[t] * b.c_[u ^ t];
    out.c_[u] = s;
  }
  return out;
}

Jet Jet::compose(const std::vector<double>& derivs) const {
  // f(x0 + h) = sum_k f^(k)(x0) h^k / k!, with h nilpotent of order m + 1.
  Jet h = *this;
  h.c_[0] = 0.0;
  Jet out(m_, derivs.at(0));
  Jet power(m_, 1.0);
  double fact = 1.0;
  for (int k = 1; k <= m_ && k < static_cast<int>(derivs.size()); ++k) {
    power = power * h;
    fact *= k;
    out += power * (derivs[k] / fact);
  }
  return out;
}

Jet pow(const Jet& x, double p) {
  const double x0 = x.value();
  if (!(x0 > 0.0)) throw DomainError("jet pow needs a positive base");
  std::vector<double> d(x.dirs() + 1);
  double coef = 1.0;
  for (int k = 0; k <= x.dirs(); ++k) {
    d[k] = coef * std::pow(x0, p - k);
    coef *= p - k;
  }
  return x.compose(d);
}

}  // namespace gammacop
