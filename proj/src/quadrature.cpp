#include "ellip/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace ellip {

namespace {

// 15-point Kronrod nodes on [0, 1] (symmetric) with Kronrod weights and the
// embedded 7-point Gauss weights on the shared nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
  double a, b;
  double value;
  double error;
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kNodes[i];
    const double fsum = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
    kronrod += kKronrodW[i] * fsum;
    // odd positions (including the midpoint) carry the embedded 7-point Gauss rule
    if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
  }
  return {a, b, kronrod * h, std::abs(kronrod - gauss) * h};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureConfig& cfg) {
  auto cmp = [](const Segment& x, const Segment& y) { return x.error < y.error; };
  std::priority_queue<Segment, std::vector<Segment>, decltype(cmp)> heap(cmp);

  Segment whole = evaluate(f, a, b);
  double total = whole.value;
  double total_err = whole.error;
  heap.push(whole);
  int subdivisions = 0;

  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         subdivisions < cfg.max_subdivisions && !heap.empty()) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) continue;  // interval exhausted
    Segment left = evaluate(f, worst.a, mid);
    Segment right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  const bool converged =
      total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
  return {total, total_err, subdivisions, converged};
}

double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, const QuadratureConfig& cfg) {
  QuadratureResult r = integrate_adaptive(f, a, b, cfg);
  if (!r.converged) {
    throw QuadratureError(
        "adaptive quadrature failed: error estimate " + std::to_string(r.error_estimate) +
            " after " + std::to_string(r.subdivisions) + " subdivisions (value " +
            std::to_string(r.value) + ")",
        r);
  }
  return r.value;
}

}  // namespace ellip
