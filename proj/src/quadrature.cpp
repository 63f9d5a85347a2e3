#include "gammacop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace gammacop {

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol, &err);
  return {v, err};
}

QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
  boost::math::quadrature::tanh_sinh<double> q;
  double err = 0.0;
  const double v = q.integrate(f, a, b, tol, &err);
  return {v, err};
}

QuadResult integrate_2d(const std::function<double(double, double)>& f, double ax, double bx, double ay, double by,
                        double tol, int max_depth) {
  double inner_worst = 0.0;
  auto outer = [&](double x) {
    const QuadResult r = integrate_1d([&](double y) { return f(x, y); }, ay, by, tol, max_depth);
    inner_worst = std::max(inner_worst, r.error);
    return r.value;
  };
  const QuadResult r = integrate_1d(outer, ax, bx, tol, max_depth);
  return {r.value, r.error + inner_worst * (bx - ax)};
}

namespace {

struct Axis {
  std::vector<double> x, w;
};

template <int N>
Axis stretched_axis(double lo, double hi) {
  using gauss = boost::math::quadrature::gauss<double, N>;
  const auto& a = gauss::abscissa();
  const auto& wt = gauss::weights();
  std::vector<std::pair<double, double>> ref;  // nodes on [-1, 1]
  for (std::size_t k = 0; k < a.size(); ++k) {
    ref.emplace_back(a[k], wt[k]);
    if (a[k] != 0.0) ref.emplace_back(-a[k], wt[k]);
  }
  constexpr int panels = 3;
  Axis ax;
  for (int p = 0; p < panels; ++p) {
    const double t0 = static_cast<double>(p) / panels, h = 1.0 / panels;
    for (const auto& [r, w] : ref) {
      const double t = t0 + 0.5 * h * (r + 1.0);
      ax.x.push_back(lo + (hi - lo) * t * t);
      ax.w.push_back(0.5 * h * w * 2.0 * (hi - lo) * t);
    }
  }
  return ax;
}

template <int N>
double tensor_rule(const std::function<double(double, double, double)>& f, const double lo[3], const double hi[3]) {
  const Axis a = stretched_axis<N>(lo[0], hi[0]), b = stretched_axis<N>(lo[1], hi[1]),
             c = stretched_axis<N>(lo[2], hi[2]);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.x.size(); ++i)
    for (std::size_t j = 0; j < b.x.size(); ++j) {
      double inner = 0.0;
      for (std::size_t k = 0; k < c.x.size(); ++k) inner += c.w[k] * f(a.x[i], b.x[j], c.x[k]);
      sum += a.w[i] * b.w[j] * inner;
    }
  return sum;
}

}  // namespace

QuadResult integrate_3d(const std::function<double(double, double, double)>& f, const double lo[3], const double hi[3],
                        double tol) {
  const double i10 = tensor_rule<10>(f, lo, hi);
  const double i15 = tensor_rule<15>(f, lo, hi);
  if (std::fabs(i15 - i10) <= tol * std::fabs(i15)) return {i15, std::fabs(i15 - i10)};
  const double i20 = tensor_rule<20>(f, lo, hi);
  return {i20, std::fabs(i20 - i15)};
}

}  // namespace gammacop
