#pragma once

#include <span>
#include <vector>

namespace ellip {

/// The ellipsoid { x : sum_i x_i^2 / a_i^2 <= 1 } given by its semi-axes.
/// Non-degenerate ellipsoids require every a_i > 0; the degenerate factory
/// admits a_i = 0 for operations that explicitly support flat bodies.
class Ellipsoid {
 public:
  static Ellipsoid from_axes(std::vector<double> axes);
  static Ellipsoid degenerate_from_axes(std::vector<double> axes);

  int dim() const { return static_cast<int>(axes_.size()); }
  std::span<const double> semi_axes() const { return axes_; }
  bool is_degenerate() const { return degenerate_; }

  /// q_i = 1/a_i; requires a non-degenerate body.
  std::vector<double> inverse_axes() const;

  /// log(kappa_n * prod a_i); -inf for degenerate bodies.
  double log_volume() const;
  double volume() const;

 private:
  Ellipsoid(std::vector<double> axes, bool degenerate);
  std::vector<double> axes_;
  bool degenerate_;
};

}  // namespace ellip
