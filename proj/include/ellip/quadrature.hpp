#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace ellip {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
};

struct QuadratureResult {
  double value;
  double error_estimate;
  int subdivisions;
  bool converged;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, const QuadratureResult& partial)
      : std::runtime_error(what), partial_result(partial) {}
  QuadratureResult partial_result;
};

/// Adaptive Gauss-Kronrod 15(7) on [a, b], worst-interval-first refinement.
/// Stops when the summed error estimate falls below
/// max(abs_tol, rel_tol * |integral|). Endpoints are never evaluated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureConfig& cfg = {});

/// Same, but throws QuadratureError with diagnostics when the tolerance is
/// not met within the subdivision budget.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, const QuadratureConfig& cfg = {});

}  // namespace ellip
