#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ellip/rng.hpp"

namespace ellip {

/// Monte Carlo execution plan. Identical (samples, master_seed, chunk_size)
/// produce bit-identical estimates regardless of the worker count: every
/// chunk owns the substream (master_seed, chunk_index) and the chunk partials
/// are reduced in index order. workers = 0 picks the hardware concurrency.
struct MonteCarloConfig {
  std::int64_t samples = 1'000'000;
  std::uint64_t master_seed = 0x85EB5EEDULL;
  std::int64_t chunk_size = 65536;
  int workers = 0;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 for deterministic methods
  std::string method;
  std::int64_t samples_used = 0;
};

/// One i.i.d. Gaussian vector with coordinate density e^{-x^2}/sqrt(pi)
/// (mean 0, variance 1/2).
std::vector<double> sample_gaussian_vector(int n, RandomStream& stream);

/// Deterministic chunked Monte Carlo mean of draw(stream) under the config's
/// substream contract. Returned std_error is the sample standard error.
Estimate monte_carlo_mean(const MonteCarloConfig& cfg,
                          const std::function<double(RandomStream&)>& draw);

enum class MeanMode {
  gaussian,  // Gamma(n/2)/Gamma((n+d)/2) * E[f(X)], X i.i.d. variance-1/2 Gaussians
  direct,    // average of f over normalized Gaussian directions (any f)
};

using SphereFn = std::function<double(std::span<const double>)>;

/// Mean value of a positively d-homogeneous f over the unit sphere S^{n-1}.
/// Requires n + d > 0 so the Gamma factor exists.
Estimate sphere_mean_homogeneous(const SphereFn& f, double degree, int n,
                                 const MonteCarloConfig& cfg = {},
                                 MeanMode mode = MeanMode::gaussian);

/// E|X|^p = Gamma((p+1)/2)/sqrt(pi) for the variance-1/2 Gaussian; p > -1.
double gaussian_abs_moment(double p);

enum class LpMeanMode { exact_mc, asymptotic };

/// Sphere mean of the L^p norm. exact_mc samples the degree-1 homogeneous
/// integrand; asymptotic evaluates
/// (Gamma(n/2)/Gamma((n+1)/2)) * (n Gamma((p+1)/2)/sqrt(pi))^{1/p}.
Estimate lp_sphere_mean(int n, double p, const MonteCarloConfig& cfg = {},
                        LpMeanMode mode = LpMeanMode::exact_mc);

}  // namespace ellip
