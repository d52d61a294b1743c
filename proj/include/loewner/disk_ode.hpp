#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "loewner/driving.hpp"
#include "loewner/geometry.hpp"

namespace loewner {

/// Herglotz vector field G(z, t) = (tau(t) - z)(1 - conj(tau(t)) z) p(z, t) on the disk.
struct DiskField {
  std::function<Complex(double)> tau;
  std::function<Complex(Complex, double)> p;
  /// Times where the field may be discontinuous; the solver restarts there.
  std::vector<double> breakpoints;
  /// Set for the chordal field; enables the pole-proximity check.
  std::optional<DrivingFunction> driving;

  /// tau = 0, p = 1: G(z) = -z.
  static DiskField linear();
  static DiskField constant(Complex tau, Complex p);
  /// Radial equation dw/dt = -w (e^{iu} + w)/(e^{iu} - w).
  static DiskField radial(std::function<double(double)> u);
  /// Cayley conjugate of the chordal equation: tau = 1,
  /// p = (1 - u)(1 - z)/(4(z - u)) with u(t) = (lambda - i)/(lambda + i) on the circle.
  static DiskField chordal(const DrivingFunction& driving);
};

/// Boundary point of the chordal field at time t.
Complex chordal_pole(const DrivingFunction& driving, double t);

Complex disk_field_eval(const DiskField& field, Complex z, double t);

struct DiskSolveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double boundary_guard = 1e-12;  ///< LeftDomain once |w| >= 1 - guard
};

/// Integrates dw/dt = G(w, t), w(s) = z0, up to t with adaptive Dormand-Prince.
Complex solve_disk_ode(const DiskField& field, Complex z0, double s, double t, const DiskSolveOptions& options = {});

}  // namespace loewner
