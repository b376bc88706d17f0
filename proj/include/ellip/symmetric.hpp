#pragma once

#include <span>
#include <vector>

namespace ellip {

/// Elementary symmetric polynomial e_k(values) via the one-row recurrence
/// e_j <- e_j + v * e_{j-1}, O(n k). e_0 = 1. Inputs with a dynamic range
/// wider than 1e100 (all nonnegative) are routed through the log-space path.
double elementary_symmetric(std::span<const double> values, int k);

/// All of e_0 ... e_n in one sweep.
std::vector<double> elementary_symmetric_all(std::span<const double> values);

/// log e_k for nonnegative inputs given as log(values); entries may be -inf
/// (zero values). Log-sum-exp recurrence around the geometric mean, so widely
/// scaled inputs neither overflow nor underflow. Returns -inf when e_k = 0.
double log_elementary_symmetric_from_logs(std::span<const double> log_values, int k);

/// Convenience wrapper: takes plain nonnegative values.
double log_elementary_symmetric(std::span<const double> values, int k);

}  // namespace ellip
