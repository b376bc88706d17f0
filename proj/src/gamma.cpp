#include "ellip/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ellip {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); sin(pi x) > 0 on (0, 1/2).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           log_gamma(1.0 - x);
  }
  double ser = kLanczosCoeff[0];
  for (int i = 1; i < 15; ++i) {
    ser += kLanczosCoeff[i] / (x - 1.0 + i);
  }
  const double t = x + kLanczosG - 0.5;
  return (x - 0.5) * std::log(t) - t +
         0.5 * std::log(2.0 * std::numbers::pi) + std::log(ser);
}

SignedLog SignedLog::from_value(double v) {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog SignedLog::operator*(const SignedLog& o) const {
  if (sign == 0 || o.sign == 0) return zero();
  return {log_abs + o.log_abs, sign * o.sign};
}

SignedLog SignedLog::operator/(const SignedLog& o) const {
  if (o.sign == 0) throw std::domain_error("SignedLog: division by zero");
  if (sign == 0) return zero();
  return {log_abs - o.log_abs, sign * o.sign};
}

SignedLog pochhammer(double x, int m) {
  if (m < 0) throw std::domain_error("pochhammer: order must be >= 0");
  SignedLog r = SignedLog::one();
  for (int j = 0; j < m; ++j) {
    const double f = x + j;
    if (f == 0.0) return SignedLog::zero();
    r.log_abs += std::log(std::abs(f));
    r.sign *= f > 0.0 ? 1 : -1;
  }
  return r;
}

double log_unit_sphere_area(int m) {
  if (m < 0) throw std::domain_error("unit_sphere_area: dimension must be >= 0");
  return std::log(2.0) + 0.5 * (m + 1) * std::log(std::numbers::pi) -
         log_gamma(0.5 * (m + 1));
}

double unit_sphere_area(int m) { return std::exp(log_unit_sphere_area(m)); }

double log_unit_ball_volume(int m) {
  if (m < 0) throw std::domain_error("unit_ball_volume: dimension must be >= 0");
  return 0.5 * m * std::log(std::numbers::pi) - log_gamma(0.5 * m + 1.0);
}

double unit_ball_volume(int m) { return std::exp(log_unit_ball_volume(m)); }

double log_gamma_ratio(double x, double y) {
  if (!(x > 0.0) || !(x + y > 0.0)) {
    throw std::domain_error("gamma_ratio: requires x > 0 and x + y > 0");
  }
  return log_gamma(x + y) - log_gamma(x);
}

double gamma_ratio(double x, double y) { return std::exp(log_gamma_ratio(x, y)); }

double gamma_ratio_asymptotic(double x, double y) {
  if (!(x > 0.0) || !(x + y > 0.0)) {
    throw std::domain_error("gamma_ratio_asymptotic: requires x > 0 and x + y > 0");
  }
  return std::pow(x + y, y);
}

double gamma_factor_asymptotic(int n, double d) {
  if (n + d <= 0.0) {
    throw std::domain_error("gamma_factor_asymptotic: requires n + d > 0");
  }
  return std::pow(2.0 / (n + d), 0.5 * d);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -kInf;
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (n <= 170) {
    // Exact while the result stays below 2^53: each partial product
    // C(n-k+i, i) is an integer, so the division is exact.
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
      r *= n - k + i;
      r /= i;
    }
    return std::round(r);
  }
  return std::exp(log_binomial(n, k));
}

}  // namespace ellip
