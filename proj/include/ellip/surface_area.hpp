#pragma once

#include <span>
#include <string>

#include "ellip/ellipsoid.hpp"
#include "ellip/quadrature.hpp"
#include "ellip/sphere_integration.hpp"

namespace ellip {

enum class RatioMethod { monte_carlo, moment_integral };

/// Isoperimetric ratio R(E) = surface/volume with its norm form
/// |q|_R = R(E)/n (the sphere mean of sqrt(sum q_i^2 u_i^2)).
struct RatioResult {
  double ratio;       // R(E) = n * norm_value
  double norm_value;  // |q|_R
  std::string method;
  double std_error;   // on ratio; 0 for the deterministic method
};

/// |q|_R for inverse semi-axes q (all q_i >= 0, not all zero).
///
/// monte_carlo: Gaussian-moment sampling of the degree-1 integrand.
/// moment_integral: the deterministic half-moment identity
///   |q|_R = (Gamma(n/2)/Gamma((n+1)/2)) (2 sqrt(pi))^{-1}
///           Int_0^inf t^{-3/2} (1 - prod_j (1 + t q_j^2)^{-1/2}) dt,
/// evaluated after t = (s/(1-s))^2, which compactifies the range and removes
/// the t^{-1/2} endpoint singularity.
RatioResult ratio_norm(std::span<const double> q, RatioMethod method,
                       const MonteCarloConfig& mc_cfg = {},
                       const QuadratureConfig& quad_cfg = {});

/// Surface area R(E) * kappa_n * prod a_i, with the volume factor
/// accumulated in log space.
Estimate surface_area(const Ellipsoid& body, RatioMethod method,
                      const MonteCarloConfig& mc_cfg = {},
                      const QuadratureConfig& quad_cfg = {});

/// Sharp dimensional constants c_n <= |q|_R / |q|_2 <= C_n:
/// c_n = Gamma(n/2)/(sqrt(pi) Gamma((n+1)/2)), C_n = 1/sqrt(n).
struct RatioBounds {
  double lower;  // c_n, attained at q with one nonzero coordinate
  double upper;  // C_n, attained at the ball
};
RatioBounds ratio_bounds(int n);

/// Large-n approximation n (Gamma(n/2)/Gamma((n+1)/2)) sqrt(sum q_i^2 / 2)
/// of the ratio, with the small-ratio applicability diagnostic
/// sum q_i^4 / (sum q_i^2)^2.
struct AsymptoticRatio {
  double value;
  double diagnostic;
};
AsymptoticRatio ratio_asymptotic(std::span<const double> q);

/// Both sides of |q|_p = prod q_i * e_{n-1}(a_1^p, ..., a_n^p)^{1/p}.
struct LpIdentity {
  double lhs;
  double rhs;
};
LpIdentity lp_symmetric_identity(std::span<const double> axes, double p);

}  // namespace ellip
