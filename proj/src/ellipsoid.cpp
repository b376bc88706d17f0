#include "ellip/ellipsoid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ellip/gamma.hpp"

namespace ellip {

Ellipsoid::Ellipsoid(std::vector<double> axes, bool degenerate)
    : axes_(std::move(axes)), degenerate_(degenerate) {}

Ellipsoid Ellipsoid::from_axes(std::vector<double> axes) {
  if (axes.empty()) throw std::invalid_argument("Ellipsoid: needs at least one axis");
  for (double a : axes) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("Ellipsoid: semi-axes must be positive and finite");
    }
  }
  return Ellipsoid(std::move(axes), false);
}

Ellipsoid Ellipsoid::degenerate_from_axes(std::vector<double> axes) {
  if (axes.empty()) throw std::invalid_argument("Ellipsoid: needs at least one axis");
  bool degenerate = false;
  for (double a : axes) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("Ellipsoid: semi-axes must be nonnegative and finite");
    }
    if (a == 0.0) degenerate = true;
  }
  return Ellipsoid(std::move(axes), degenerate);
}

std::vector<double> Ellipsoid::inverse_axes() const {
  if (degenerate_) {
    throw std::domain_error("Ellipsoid: inverse axes undefined for degenerate bodies");
  }
  std::vector<double> q(axes_.size());
  for (std::size_t i = 0; i < axes_.size(); ++i) q[i] = 1.0 / axes_[i];
  return q;
}

double Ellipsoid::log_volume() const {
  if (degenerate_) return -std::numeric_limits<double>::infinity();
  double s = log_unit_ball_volume(dim());
  for (double a : axes_) s += std::log(a);
  return s;
}

double Ellipsoid::volume() const { return std::exp(log_volume()); }

}  // namespace ellip
