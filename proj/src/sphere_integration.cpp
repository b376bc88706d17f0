#include "ellip/sphere_integration.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ellip/gamma.hpp"

namespace ellip {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct ChunkStat {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::int64_t count = 0;
};

}  // namespace

std::vector<double> sample_gaussian_vector(int n, RandomStream& stream) {
  if (n < 1) throw std::domain_error("sample_gaussian_vector: n must be >= 1");
  std::vector<double> x(n);
  stream.fill_gaussian(x, kInvSqrt2);
  return x;
}

Estimate monte_carlo_mean(const MonteCarloConfig& cfg,
                          const std::function<double(RandomStream&)>& draw) {
  if (cfg.samples < 1) throw std::domain_error("MonteCarloConfig: samples must be >= 1");
  if (cfg.chunk_size < 1) throw std::domain_error("MonteCarloConfig: chunk_size must be >= 1");

  const std::int64_t n_chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<ChunkStat> stats(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](std::int64_t ci) {
    RandomStream stream(cfg.master_seed, static_cast<std::uint64_t>(ci));
    const std::int64_t begin = ci * cfg.chunk_size;
    const std::int64_t count = std::min(cfg.chunk_size, cfg.samples - begin);
    ChunkStat st;
    for (std::int64_t s = 0; s < count; ++s) {
      const double v = draw(stream);
      st.sum += v;
      st.sum_sq += v * v;
    }
    st.count = count;
    stats[static_cast<std::size_t>(ci)] = st;
  };

  int workers = cfg.workers > 0 ? cfg.workers
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<std::int64_t>(workers, n_chunks));

  if (workers == 1) {
    for (std::int64_t ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t ci = next.fetch_add(1); ci < n_chunks; ci = next.fetch_add(1)) {
          run_chunk(ci);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // ordered reduction: independent of the worker count
  double sum = 0.0, sum_sq = 0.0;
  std::int64_t count = 0;
  for (const ChunkStat& st : stats) {
    sum += st.sum;
    sum_sq += st.sum_sq;
    count += st.count;
  }

  Estimate est;
  est.samples_used = count;
  est.value = sum / static_cast<double>(count);
  if (count > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * est.value) / static_cast<double>(count - 1));
    est.std_error = std::sqrt(var / static_cast<double>(count));
  }
  return est;
}

Estimate sphere_mean_homogeneous(const SphereFn& f, double degree, int n,
                                 const MonteCarloConfig& cfg, MeanMode mode) {
  if (n < 1) throw std::domain_error("sphere_mean_homogeneous: n must be >= 1");
  if (n + degree <= 0.0) {
    throw std::domain_error("sphere_mean_homogeneous: requires n + degree > 0");
  }

  Estimate est;
  if (mode == MeanMode::gaussian) {
    est = monte_carlo_mean(cfg, [&f, n](RandomStream& stream) {
      thread_local std::vector<double> x;
      x.resize(static_cast<std::size_t>(n));
      stream.fill_gaussian(x, kInvSqrt2);
      return f(x);
    });
    const double factor = std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n + degree)));
    est.value *= factor;
    est.std_error *= factor;
    est.method = "mc.gaussian";
  } else {
    est = monte_carlo_mean(cfg, [&f, n](RandomStream& stream) {
      thread_local std::vector<double> x;
      x.resize(static_cast<std::size_t>(n));
      stream.fill_gaussian(x, kInvSqrt2);
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      const double inv = 1.0 / std::sqrt(r2);
      for (double& v : x) v *= inv;
      return f(x);
    });
    est.method = "mc.direct";
  }
  return est;
}

double gaussian_abs_moment(double p) {
  if (!(p > -1.0)) throw std::domain_error("gaussian_abs_moment: requires p > -1");
  return std::exp(log_gamma(0.5 * (p + 1.0))) / std::sqrt(std::numbers::pi);
}

Estimate lp_sphere_mean(int n, double p, const MonteCarloConfig& cfg, LpMeanMode mode) {
  if (n < 1) throw std::domain_error("lp_sphere_mean: n must be >= 1");
  if (!(p >= 1.0)) throw std::domain_error("lp_sphere_mean: requires p >= 1");

  if (mode == LpMeanMode::asymptotic) {
    Estimate est;
    est.value = std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n + 1))) *
                std::pow(n * gaussian_abs_moment(p), 1.0 / p);
    est.method = "asymptotic";
    return est;
  }

  auto lp_norm = [p](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
  };
  return sphere_mean_homogeneous(lp_norm, 1.0, n, cfg, MeanMode::gaussian);
}

}  // namespace ellip
