#include "ellip/surface_area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ellip/gamma.hpp"
#include "ellip/symmetric.hpp"

namespace ellip {

namespace {

void check_inverse_axes(std::span<const double> q) {
  bool any = false;
  for (double v : q) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::domain_error("ratio_norm: inverse axes must be finite and nonnegative");
    }
    if (v > 0.0) any = true;
  }
  if (!any) throw std::domain_error("ratio_norm: q must have a nonzero coordinate");
}

double scaled_l2_norm(std::span<const double> q) {
  double m = 0.0;
  for (double v : q) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : q) {
    const double r = v / m;
    s += r * r;
  }
  return m * std::sqrt(s);
}

}  // namespace

RatioResult ratio_norm(std::span<const double> q, RatioMethod method,
                       const MonteCarloConfig& mc_cfg, const QuadratureConfig& quad_cfg) {
  check_inverse_axes(q);
  const int n = static_cast<int>(q.size());

  RatioResult result;
  if (method == RatioMethod::monte_carlo) {
    std::vector<double> qq(q.begin(), q.end());
    auto integrand = [qq = std::move(qq)](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t i = 0; i < qq.size(); ++i) {
        const double t = qq[i] * x[i];
        s += t * t;
      }
      return std::sqrt(s);
    };
    Estimate est = sphere_mean_homogeneous(integrand, 1.0, n, mc_cfg, MeanMode::gaussian);
    result.norm_value = est.value;
    result.std_error = n * est.std_error;
    result.method = "mc";
  } else {
    // scale so max q = 1; the norm is 1-homogeneous
    double scale = 0.0;
    for (double v : q) scale = std::max(scale, v);
    std::vector<double> q2(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double r = q[i] / scale;
      q2[i] = r * r;
    }
    // 1 - prod (1 + t q_j^2)^{-1/2} computed as -expm1(-1/2 sum log1p(t q_j^2))
    auto integrand = [&q2](double s) {
      const double w = s / (1.0 - s);
      const double t = w * w;
      double acc = 0.0;
      for (double v : q2) acc += std::log1p(t * v);
      return -std::expm1(-0.5 * acc) / (s * s);
    };
    const double integral = 2.0 * integrate_or_throw(integrand, 0.0, 1.0, quad_cfg);
    result.norm_value = scale *
                        std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n + 1))) *
                        integral / (2.0 * std::sqrt(std::numbers::pi));
    result.std_error = 0.0;
    result.method = "moment_integral";
  }
  result.ratio = n * result.norm_value;
  return result;
}

Estimate surface_area(const Ellipsoid& body, RatioMethod method,
                      const MonteCarloConfig& mc_cfg, const QuadratureConfig& quad_cfg) {
  if (body.is_degenerate()) {
    throw std::domain_error("surface_area: semi-axes must be positive");
  }
  const std::vector<double> q = body.inverse_axes();
  const RatioResult r = ratio_norm(q, method, mc_cfg, quad_cfg);
  const double volume = std::exp(body.log_volume());

  Estimate est;
  est.value = r.ratio * volume;
  est.std_error = r.std_error * volume;
  est.method = r.method;
  est.samples_used = method == RatioMethod::monte_carlo ? mc_cfg.samples : 0;
  return est;
}

RatioBounds ratio_bounds(int n) {
  if (n < 1) throw std::domain_error("ratio_bounds: n must be >= 1");
  const double c_n = std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n + 1))) /
                     std::sqrt(std::numbers::pi);
  return {c_n, 1.0 / std::sqrt(static_cast<double>(n))};
}

AsymptoticRatio ratio_asymptotic(std::span<const double> q) {
  check_inverse_axes(q);
  const int n = static_cast<int>(q.size());
  double m = 0.0;
  for (double v : q) m = std::max(m, std::abs(v));
  double s2 = 0.0, s4 = 0.0;
  for (double v : q) {
    const double r = v / m;
    s2 += r * r;
    s4 += r * r * r * r;
  }
  AsymptoticRatio out;
  out.value = n * std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n + 1))) * m *
              std::sqrt(0.5 * s2);
  out.diagnostic = s4 / (s2 * s2);
  return out;
}

LpIdentity lp_symmetric_identity(std::span<const double> axes, double p) {
  if (!(p >= 1.0)) throw std::domain_error("lp_symmetric_identity: requires p >= 1");
  const std::size_t n = axes.size();
  for (double a : axes) {
    if (!(a > 0.0)) throw std::domain_error("lp_symmetric_identity: axes must be positive");
  }

  // lhs = |q|_p with q_i = 1/a_i, scaled by the largest q
  double qmax = 0.0;
  for (double a : axes) qmax = std::max(qmax, 1.0 / a);
  double s = 0.0;
  for (double a : axes) s += std::pow(1.0 / (a * qmax), p);
  const double lhs = qmax * std::pow(s, 1.0 / p);

  // rhs = prod q_i * e_{n-1}(a^p)^{1/p}, all in log space
  std::vector<double> logs(n);
  double log_prod_q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    logs[i] = p * std::log(axes[i]);
    log_prod_q -= std::log(axes[i]);
  }
  const double log_e =
      log_elementary_symmetric_from_logs(logs, static_cast<int>(n) - 1);
  const double rhs = std::exp(log_prod_q + log_e / p);
  return {lhs, rhs};
}

}  // namespace ellip
