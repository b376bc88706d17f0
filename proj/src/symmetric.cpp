#include "ellip/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ellip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

void check_range(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw std::out_of_range("elementary_symmetric: k out of [0, n]");
  }
}

}  // namespace

double elementary_symmetric(std::span<const double> values, int k) {
  const std::size_t n = values.size();
  check_range(n, k);
  if (k == 0) return 1.0;

  // Wide dynamic range on nonnegative inputs: intermediate terms of the plain
  // recurrence can overflow even when e_k itself is representable.
  double lo = kInf, hi = 0.0;
  bool nonneg = true;
  for (double v : values) {
    if (v < 0.0) nonneg = false;
    if (v > 0.0) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (nonneg && hi > 0.0 && hi / lo > 1e100) {
    return std::exp(log_elementary_symmetric(values, k));
  }

  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = values[i];
    const int top = std::min<int>(k, static_cast<int>(i) + 1);
    for (int j = top; j >= 1; --j) {
      e[j] += v * e[j - 1];
    }
  }
  return e[k];
}

std::vector<double> elementary_symmetric_all(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = std::min(n, i + 1); j >= 1; --j) {
      e[j] += values[i] * e[j - 1];
    }
  }
  return e;
}

double log_elementary_symmetric_from_logs(std::span<const double> log_values, int k) {
  const std::size_t n = log_values.size();
  check_range(n, k);
  if (k == 0) return 0.0;

  // Center on the geometric mean of the nonzero entries, then run the
  // recurrence entirely in log space; restore k * mean at the end.
  double mean = 0.0;
  std::size_t finite = 0;
  for (double lv : log_values) {
    if (lv != -kInf) {
      mean += lv;
      ++finite;
    }
  }
  if (finite < static_cast<std::size_t>(k)) return -kInf;
  mean /= static_cast<double>(finite);

  std::vector<double> e(static_cast<std::size_t>(k) + 1, -kInf);
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lv = log_values[i] - mean;
    const int top = std::min<int>(k, static_cast<int>(i) + 1);
    for (int j = top; j >= 1; --j) {
      e[j] = log_sum_exp(e[j], lv + e[j - 1]);
    }
  }
  return e[k] + k * mean;
}

double log_elementary_symmetric(std::span<const double> values, int k) {
  std::vector<double> logs(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) {
      throw std::domain_error("log_elementary_symmetric: values must be nonnegative");
    }
    logs[i] = values[i] == 0.0 ? -kInf : std::log(values[i]);
  }
  return log_elementary_symmetric_from_logs(logs, k);
}

}  // namespace ellip
