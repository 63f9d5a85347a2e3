#include "gammacop/specialfn.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gammacop/errors.hpp"

namespace gammacop {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRescaleAt = 1e280;
const double kLogRescale = 280.0 * std::log(10.0);

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Single-index series sum_k t_k with t_0 = 1 and t_{k+1} = t_k * ratio(k).
//
// `limit` is lim |ratio(k)| (|z| for p = q + 1, else 0). `excess` is the
// parameter excess, used for the algebraic tail at |z| = 1. The sum is kept
// linear and rescaled by 1e-280 whenever it would overflow.
template <class Ratio>
SeriesValue sum_single(Ratio ratio, double limit, double excess, const SeriesControl& ctl, const char* name) {
  double t = 1.0, sum = 1.0, abs_sum = 1.0, log_scale = 0.0;
  int below = 0;
  for (long k = 0;; ++k) {
    const double r = ratio(k);
    if (r == 0.0) return {sum, log_scale, 4.0 * kEps * abs_sum * (k + 1), k + 1};
    const double big_r = std::max(std::fabs(r), limit);
    double tail;
    if (big_r < 1.0)
      tail = std::fabs(t) * big_r / (1.0 - big_r);
    else if (limit >= 1.0 && excess > 0.0)
      tail = 2.0 * std::fabs(t) * static_cast<double>(k + 1) / excess;
    else
      tail = kInf;
    const double floor_abs = ctl.abs_tol * std::exp(-log_scale);
    if (tail <= std::max(ctl.rel_tol * std::fabs(sum), floor_abs))
      ++below;
    else
      below = 0;
    if (below >= ctl.tail_window) return {sum, log_scale, tail + 4.0 * kEps * abs_sum * std::sqrt(k + 1.0), k + 1};
    if (k + 1 >= ctl.max_terms)
      throw ConvergenceError(std::string(name) + ": term budget exhausted before convergence",
                             sum * std::exp(log_scale), tail * std::exp(log_scale));
    t *= r;
    sum += t;
    abs_sum += std::fabs(t);
    if (std::fabs(t) > kRescaleAt || std::fabs(sum) > kRescaleAt || abs_sum > kRescaleAt) {
      t *= 1.0 / kRescaleAt;
      sum *= 1.0 / kRescaleAt;
      abs_sum *= 1.0 / kRescaleAt;
      log_scale += kLogRescale;
    }
    if (!std::isfinite(t)) throw DomainError(std::string(name) + ": non-finite term");
  }
}

// Streaming sign-aware log-sum: value * exp(scale).
class LogAccumulator {
 public:
  void add(double sign, double log_abs) {
    if (log_abs == -kInf || sign == 0.0) return;
    if (log_abs > scale_) {
      const double shrink = std::exp(scale_ - log_abs);
      value_ *= shrink;
      abs_ *= shrink;
      scale_ = log_abs;
    }
    const double w = std::exp(log_abs - scale_);
    value_ += sign * w;
    abs_ += w;
  }
  double value() const { return value_; }
  double scale() const { return scale_ == -kInf ? 0.0 : scale_; }
  double log_abs_value() const { return std::log(std::fabs(value_)) + scale_; }
  double log_abs_total() const { return std::log(abs_) + scale_; }

 private:
  double value_ = 0.0;
  double abs_ = 0.0;
  double scale_ = -kInf;
};

// Driver for the outer (diagonal) sweep of a multi-index series. Each shell
// is the set of terms of one total outer degree.
class ShellSweep {
 public:
  ShellSweep(const SeriesControl& ctl, const char* name) : ctl_(ctl), name_(name) {}

  void add(double sign, double log_abs, double log_inner_err) {
    sum_.add(sign, log_abs);
    shell_.add(1.0, log_abs);
    err_.add(1.0, log_inner_err);
  }

  /// Close the current shell; true when the tail is below tolerance.
  bool close_shell(long degree) {
    const double s = shell_.value() > 0.0 ? shell_.log_abs_value() : -kInf;
    shell_ = LogAccumulator{};
    double q = kInf;
    if (s == -kInf)
      q = 0.0;
    else if (prev_ != -kInf && std::isfinite(prev_))
      q = std::exp(s - prev_);
    const double big_q = std::max(q, prev_q_);
    prev_q_ = q;
    prev_ = s;
    last_tail_log_ = kInf;
    if (big_q < 1.0) last_tail_log_ = s == -kInf ? -kInf : s + std::log(big_q / (1.0 - big_q));
    const double target = std::log(ctl_.rel_tol) + (sum_.value() != 0.0 ? sum_.log_abs_value() : -kInf);
    if (last_tail_log_ <= std::max(target, std::log(ctl_.abs_tol)))
      ++below_;
    else
      below_ = 0;
    ++shells_;
    if (below_ >= ctl_.tail_window) return true;
    if (degree + 1 >= ctl_.max_terms) {
      const double partial = sum_.value() * std::exp(sum_.scale());
      throw ConvergenceError(std::string(name_) + ": term budget exhausted before convergence", partial,
                             std::exp(last_tail_log_));
    }
    return false;
  }

  SeriesValue result() const {
    SeriesValue out;
    out.mantissa = sum_.value();
    out.log_scale = sum_.scale();
    const double tail = std::exp(last_tail_log_ - out.log_scale);
    const double inner = err_.value() == 0.0 ? 0.0 : std::exp(err_.log_abs_value() - out.log_scale);
    const double rounding = 8.0 * kEps * std::exp(sum_.log_abs_total() - out.log_scale);
    out.abs_error = (std::isfinite(tail) ? tail : 0.0) + inner + rounding;
    out.terms = shells_;
    return out;
  }

 private:
  const SeriesControl& ctl_;
  const char* name_;
  LogAccumulator sum_, shell_, err_;
  double prev_ = -kInf;
  double prev_q_ = 0.0;
  double last_tail_log_ = kInf;
  int below_ = 0;
  long shells_ = 0;
};

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

// log|inner| and log of inner's absolute error.
struct InnerLog {
  double sign;
  double log_abs;
  double log_err;
};

InnerLog inner_log(const SeriesValue& v) {
  return {sign_of(v.mantissa), v.log_abs(), std::log(v.abs_error) + v.log_scale};
}

// Lazily grown table of lgamma(m + 1).
class LogFactorials {
 public:
  double operator()(long m) {
    while (static_cast<long>(table_.size()) <= m) table_.push_back(std::lgamma(static_cast<double>(table_.size()) + 1.0));
    return table_[m];
  }

 private:
  std::vector<double> table_;
};

// log|(a)_k| and its sign, grown one factor at a time.
class PochhammerLog {
 public:
  explicit PochhammerLog(double a) : a_(a) { log_.push_back(0.0), sign_.push_back(1.0); }
  double log_abs(long k) { grow(k); return log_[k]; }
  double sign(long k) { grow(k); return sign_[k]; }

 private:
  void grow(long k) {
    while (static_cast<long>(log_.size()) <= k) {
      const double f = a_ + static_cast<double>(log_.size() - 1);
      log_.push_back(log_.back() + std::log(std::fabs(f)));
      sign_.push_back(sign_.back() * sign_of(f) * (f == 0.0 ? 0.0 : 1.0));
    }
  }
  double a_;
  std::vector<double> log_, sign_;
};

double log_abs_or_zero(double z) { return z == 0.0 ? -kInf : std::log(std::fabs(z)); }

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw ArgumentError("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw ArgumentError("abs_tol must be non-negative");
  if (max_terms < 1) throw ArgumentError("max_terms must be at least 1");
  if (tail_window < 1) throw ArgumentError("tail_window must be at least 1");
}

SeriesControl SeriesControl::from_env() {
  SeriesControl ctl;
  if (const char* env = std::getenv("GAMMACOP_MAX_TERMS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw ArgumentError("GAMMACOP_MAX_TERMS must be a positive integer");
    ctl.max_terms = static_cast<int>(v);
  }
  return ctl;
}

double pochhammer(double a, int k) {
  if (k < 0) throw ArgumentError("pochhammer index must be non-negative");
  if (a > 0.0 && k > 30) return std::exp(log_pochhammer(a, k));
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= a + j;
  return r;
}

double log_pochhammer(double a, int k) {
  if (!(a > 0.0)) throw DomainError("log_pochhammer needs a > 0");
  if (k < 0) throw ArgumentError("pochhammer index must be non-negative");
  return std::lgamma(a + k) - std::lgamma(a);
}

SeriesValue pfq(std::span<const double> upper, std::span<const double> lower, double z, const SeriesControl& ctl) {
  ctl.validate();
  const auto p = static_cast<long>(upper.size());
  const auto q = static_cast<long>(lower.size());

  // Truncation point from the least negative non-positive-integer upper parameter.
  double terminate_at = kInf;
  for (double a : upper)
    if (is_nonpositive_integer(a)) terminate_at = std::min(terminate_at, -a);
  for (double b : lower)
    if (is_nonpositive_integer(b) && !(terminate_at < -b))
      throw DomainError("pfq: lower parameter is a non-positive integer");

  double excess = 0.0;
  for (double b : lower) excess += b;
  for (double a : upper) excess -= a;

  if (z == 0.0) return {1.0, 0.0, 0.0, 1};
  const bool terminating = std::isfinite(terminate_at);
  double limit = 0.0;
  if (!terminating) {
    if (p > q + 1) throw DomainError("pfq: series diverges for p > q + 1");
    if (p == q + 1) {
      const double az = std::fabs(z);
      if (az > 1.0) throw DomainError("pfq: |z| > 1 outside the convergence disc");
      if (az == 1.0 && !(excess > 0.0))
        throw DomainError("pfq: |z| = 1 needs positive parameter excess sum(lower) - sum(upper)");
      limit = az;
    }
  }
  auto ratio = [&](long k) {
    double r = z / static_cast<double>(k + 1);
    for (double a : upper) r *= a + k;
    for (double b : lower) r /= b + k;
    return r;
  };
  return sum_single(ratio, limit, excess, ctl, "pfq");
}

SeriesValue hyp0f1(double b, double z, const SeriesControl& ctl) {
  if (is_nonpositive_integer(b)) throw DomainError("0F1: b is a non-positive integer");
  if (z == 0.0) return {1.0, 0.0, 0.0, 1};
  return sum_single([&](long k) { return z / ((b + k) * (k + 1)); }, 0.0, 0.0, ctl, "0F1");
}

SeriesValue hyp1f1(double a, double b, double z, const SeriesControl& ctl) {
  const double lower[] = {b};
  const double upper[] = {a};
  if (!is_nonpositive_integer(b) && !is_nonpositive_integer(a) && z != 0.0)
    return sum_single([&](long k) { return z * (a + k) / ((b + k) * (k + 1)); }, 0.0, 0.0, ctl, "1F1");
  return pfq(upper, lower, z, ctl);
}

SeriesValue horn_phi3(double a, double b, double x, double y, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(b)) throw DomainError("Phi3: b is a non-positive integer");
  if (x == 0.0 || a == 0.0) return hyp0f1(b, y, ctl);
  ShellSweep sweep(ctl, "Phi3");
  LogFactorials lf;
  PochhammerLog pa(a), pb(b);
  const double lx = log_abs_or_zero(x);
  for (long m = 0;; ++m) {
    const double sign = pa.sign(m) * pb.sign(m) * ((x < 0.0 && (m & 1)) ? -1.0 : 1.0);
    if (sign == 0.0) return sweep.close_shell(m), sweep.result();
    const double log_coef = pa.log_abs(m) - pb.log_abs(m) + m * lx - lf(m);
    const InnerLog in = inner_log(hyp0f1(b + m, y, ctl));
    sweep.add(sign * in.sign, log_coef + in.log_abs, log_coef + in.log_err);
    if (sweep.close_shell(m)) return sweep.result();
  }
}

SeriesValue lauricella_fi(double a, double b, double c, double z1, double z2, double z3, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(a + c) || is_nonpositive_integer(b + c))
    throw DomainError("F_I: a + c and b + c must not be non-positive integers");
  // Summing m1 and m2 in closed form leaves
  //   sum_{m3} (c)_{m3} / [(a+c)_{m3} (b+c)_{m3}] z3^{m3}/m3!
  //            * 1F1(a; a+c+m3; z1) * 1F1(b; b+c+m3; z2).
  ShellSweep sweep(ctl, "F_I");
  LogFactorials lf;
  PochhammerLog pc(c), pac(a + c), pbc(b + c);
  const double l3 = log_abs_or_zero(z3);
  for (long m = 0;; ++m) {
    double sign = pc.sign(m) * pac.sign(m) * pbc.sign(m) * ((z3 < 0.0 && (m & 1)) ? -1.0 : 1.0);
    if (m > 0 && z3 == 0.0) sign = 0.0;
    if (sign == 0.0) return sweep.close_shell(m), sweep.result();
    const double log_coef = pc.log_abs(m) - pac.log_abs(m) - pbc.log_abs(m) + (m == 0 ? 0.0 : m * l3) - lf(m);
    const SeriesValue f1 = hyp1f1(a, a + c + m, z1, ctl);
    const SeriesValue f2 = hyp1f1(b, b + c + m, z2, ctl);
    const InnerLog i1 = inner_log(f1), i2 = inner_log(f2);
    const double log_prod = i1.log_abs + i2.log_abs;
    // |d(f1 f2)| <= |f1| e2 + |f2| e1
    const double log_err = std::log(std::exp(i1.log_abs + i2.log_err - log_prod) +
                                    std::exp(i2.log_abs + i1.log_err - log_prod)) + log_prod;
    sweep.add(sign * i1.sign * i2.sign, log_coef + log_prod, log_coef + log_err);
    if (sweep.close_shell(m)) return sweep.result();
  }
}

SeriesValue lauricella_fii(double l1, double l2, double z1, double z2, double z3, double z4, const SeriesControl& ctl) {
  ctl.validate();
  if (!(l1 > 0.0) || !(l2 > 0.0)) throw DomainError("F_II: l1 and l2 must be positive");
  // Summing m3 and m4 in closed form leaves a double series over (m1, m2):
  //   z1^{m1} z2^{m2} / [m1! m2! (l1)_{m1+m2} (l2)_{2m1+m2}]
  //     * 0F1(; l1+m1+m2; z3) * 0F1(; l2+2m1+m2; z4),
  // swept by total degree d = m1 + m2.
  ShellSweep sweep(ctl, "F_II");
  LogFactorials lf;
  std::vector<InnerLog> f3, f4;
  auto inner3 = [&](long j) -> const InnerLog& {
    while (static_cast<long>(f3.size()) <= j) f3.push_back(inner_log(hyp0f1(l1 + f3.size(), z3, ctl)));
    return f3[j];
  };
  auto inner4 = [&](long j) -> const InnerLog& {
    while (static_cast<long>(f4.size()) <= j) f4.push_back(inner_log(hyp0f1(l2 + f4.size(), z4, ctl)));
    return f4[j];
  };
  const double lz1 = log_abs_or_zero(z1), lz2 = log_abs_or_zero(z2);
  for (long d = 0;; ++d) {
    const double lp1 = log_pochhammer(l1, static_cast<int>(d));
    bool any = false;
    for (long m1 = 0; m1 <= d; ++m1) {
      const long m2 = d - m1;
      if ((m1 > 0 && z1 == 0.0) || (m2 > 0 && z2 == 0.0)) continue;
      any = true;
      double sign = 1.0;
      if (z1 < 0.0 && (m1 & 1)) sign = -sign;
      if (z2 < 0.0 && (m2 & 1)) sign = -sign;
      const double log_coef = (m1 ? m1 * lz1 : 0.0) + (m2 ? m2 * lz2 : 0.0) - lf(m1) - lf(m2) - lp1 -
                              log_pochhammer(l2, static_cast<int>(d + m1));
      const InnerLog& a = inner3(d);
      const InnerLog& b = inner4(d + m1);
      const double log_prod = a.log_abs + b.log_abs;
      const double log_err = std::log(std::exp(a.log_abs + b.log_err - log_prod) +
                                      std::exp(b.log_abs + a.log_err - log_prod)) + log_prod;
      sweep.add(sign * a.sign * b.sign, log_coef + log_prod, log_coef + log_err);
    }
    if (!any) return sweep.close_shell(d), sweep.result();
    if (sweep.close_shell(d)) return sweep.result();
  }
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double gamma_cdf(double p, double shape, double x) {
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  return boost::math::gamma_p(shape, x / p);
}

double gamma_sf(double p, double shape, double x) {
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::gamma_q(shape, x / p);
}

double gamma_quantile(double p, double shape, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw ArgumentError("probability must lie in [0, 1]");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return kInf;
  return p * boost::math::gamma_p_inv(shape, u);
}

double gamma_upper_quantile(double p, double shape, double tail) {
  if (!(tail > 0.0 && tail <= 1.0)) throw ArgumentError("tail probability must lie in (0, 1]");
  if (tail == 1.0) return 0.0;
  return p * boost::math::gamma_q_inv(shape, tail);
}

}  // namespace gammacop
