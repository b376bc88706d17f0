#pragma once

#include <cstdint>

namespace ellip {

/// log Gamma(x) for x > 0.
/// Lanczos approximation (g = 607/128, 15 coefficients); the scaled error
/// |err| / max(1, |log Gamma(x)|) stays below 1e-13 on [0.5, 1e6].
double log_gamma(double x);

/// A real number stored as sign * exp(log_abs). sign is -1, 0 or +1;
/// log_abs is -inf when the value is zero.
struct SignedLog {
  double log_abs;
  int sign;

  static SignedLog from_value(double v);
  static SignedLog zero() { return {-1.0 / 0.0, 0}; }
  static SignedLog one() { return {0.0, 1}; }

  double value() const;
  SignedLog operator*(const SignedLog& o) const;
  SignedLog operator/(const SignedLog& o) const;
};

/// Rising factorial (x)_m = x (x+1) ... (x+m-1), any real x, m >= 0.
SignedLog pochhammer(double x, int m);

/// Surface area of the unit m-sphere: omega_m = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
double unit_sphere_area(int m);
double log_unit_sphere_area(int m);

/// Volume of the unit m-ball: kappa_m = pi^{m/2} / Gamma(m/2 + 1) = omega_{m-1} / m.
double unit_ball_volume(int m);
double log_unit_ball_volume(int m);

/// Gamma(x+y) / Gamma(x), evaluated as a log-gamma difference.
/// Requires x > 0 and x + y > 0.
double gamma_ratio(double x, double y);
double log_gamma_ratio(double x, double y);

/// Large-x limit of gamma_ratio: (x+y)^y.
double gamma_ratio_asymptotic(double x, double y);

/// Large-n limit of Gamma(n/2) / Gamma((n+d)/2): (2/(n+d))^{d/2}.
double gamma_factor_asymptotic(int n, double d);

/// Binomial coefficient C(n, k); 0 outside the valid range.
double binomial(int n, int k);
double log_binomial(int n, int k);

}  // namespace ellip
