// Test-only reference calculations, deliberately independent of the library's
// implementation paths: a scalar point-mass RK4, bracketing root finders, and
// Simpson quadrature. Expected values in the test files were produced by
// these and then frozen.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

struct PointMassState {
  double t = 0.0;
  double x = 0.0, z = 0.0;
  double vx = 0.0, vz = 0.0;
};

/// Fixed-step RK4 of a point mass under constant gravity, integrated until
/// t_end. Independent of pitshot::simulator (scalar, no quaternions).
inline PointMassState propagate_point_mass(double v0, double theta, double g,
                                           double dt, double t_end) {
  PointMassState s;
  s.vx = v0 * std::cos(theta);
  s.vz = v0 * std::sin(theta);
  // Acceleration is constant, so the RK4 stage structure collapses; keep the
  // full form anyway to stay a faithful reference integrator.
  while (s.t < t_end - 1e-15) {
    const double step = std::min(dt, t_end - s.t);
    const auto acc = [&]() { return -g; };
    const double k1v = acc(), k1x = s.vz;
    const double k2v = acc(), k2x = s.vz + 0.5 * step * k1v;
    const double k3v = acc(), k3x = s.vz + 0.5 * step * k2v;
    const double k4v = acc(), k4x = s.vz + step * k3v;
    s.z += step / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    s.vz += step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    s.x += step * s.vx;
    s.t += step;
  }
  return s;
}

/// Bisection for f(t) = 0 on [lo, hi]; requires a sign change.
inline double bisect(const std::function<double(double)>& f, double lo,
                     double hi, double tol = 1e-13) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw std::runtime_error("bisect: no sign change");
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

/// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    sum += f(a + h * i) * (i % 2 == 0 ? 2.0 : 4.0);
  }
  return sum * h / 3.0;
}

inline double normal_pdf(double x, double sigma) {
  return std::exp(-0.5 * x * x / (sigma * sigma)) /
         (sigma * std::sqrt(2.0 * std::acos(-1.0)));
}

}  // namespace oracle
