#pragma once

#include <span>
#include <vector>

#include "loewner/driving.hpp"
#include "loewner/map.hpp"

namespace loewner {

/// lambda + sqrt((w - lambda)^2 -+ 2 capacity) with the half-plane branch.
Complex elementary_step(Complex w, double lambda, double capacity, SlitDirection direction);

struct SolveOptions {
  std::size_t substeps = 64;   ///< substeps per knot interval for linear drivings
  double collision = 1e-9;     ///< StepCollision threshold on |w - lambda|
};

/// Erase steps realising Phi_{s,t} in application order.  Constant drivings
/// use one exact step per knot interval; linear drivings are resampled with
/// `substeps` midpoint values per interval.
std::vector<prim::SlitStep> erase_schedule(const DrivingFunction& driving, double s, double t,
                                           const SolveOptions& options = {});

/// Phi_{s,t}(z) for each point by exact erase steps.
std::vector<Complex> solve_phi(const DrivingFunction& driving, double s, double t, std::span<const Complex> points,
                               const SolveOptions& options = {});

struct RkOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
};

/// Phi_{s,t}(z) by adaptive Dormand-Prince integration of dw/dt = 1/(lambda(t) - w),
/// restarted at every knot.
std::vector<Complex> solve_phi_rk(const DrivingFunction& driving, double s, double t,
                                  std::span<const Complex> points, const RkOptions& options = {});

/// Phi_{s,t} as a map on the half-plane carrying the exact tail z - (t - s)/z.
Map evolution_operator(const DrivingFunction& driving, double s, double t, const SolveOptions& options = {});

struct TraceSample {
  double t = 0.0;
  Complex tip;
};

/// Tips of the trace at the requested (strictly increasing) times.  Step k
/// covers [t_{k-1}, t_k] with the driving value lambda(t_k-); the tip at t_n
/// is e_1 o ... o e_{n-1}(lambda_n + i sqrt(2 Delta_n)) with erase steps e_k.
std::vector<TraceSample> trace_from_driving(const DrivingFunction& driving, std::span<const double> grid);

/// Vertical-slit zipper.  The first point is taken as the root when it lies
/// on the real line within 1e-9; otherwise the root is implicit.  Returns a
/// piecewise-constant driving in capacity time.
DrivingFunction extract_driving(std::span<const Complex> polyline);
DrivingFunction extract_driving(std::span<const TraceSample> trace);

}  // namespace loewner
