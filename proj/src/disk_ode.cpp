#include "loewner/disk_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "loewner/error.hpp"

namespace loewner {

DiskField DiskField::linear() { return constant(0.0, 1.0); }

DiskField DiskField::constant(Complex tau, Complex p) {
  if (!(std::abs(tau) <= 1.0)) fail(ErrorCode::InvalidArgument, "field point tau must lie in the closed disk");
  if (p.real() < -1e-12) fail(ErrorCode::InvalidArgument, "field needs Re p >= 0");
  DiskField f;
  f.tau = [tau](double) { return tau; };
  f.p = [p](Complex, double) { return p; };
  return f;
}

DiskField DiskField::radial(std::function<double(double)> u) {
  DiskField f;
  f.tau = [](double) { return Complex(0.0, 0.0); };
  f.p = [u = std::move(u)](Complex z, double t) {
    const Complex e = std::polar(1.0, u(t));
    return (e + z) / (e - z);
  };
  return f;
}

Complex chordal_pole(const DrivingFunction& driving, double t) {
  const double lam = driving(t);
  return (Complex(lam, 0.0) - kI) / (Complex(lam, 0.0) + kI);
}

DiskField DiskField::chordal(const DrivingFunction& driving) {
  DiskField f;
  f.tau = [](double) { return Complex(1.0, 0.0); };
  f.driving = driving;
  f.p = [driving](Complex z, double t) {
    const Complex u = chordal_pole(driving, t);
    return (1.0 - u) * (1.0 - z) / (4.0 * (z - u));
  };
  for (const Knot& k : driving.knots())
    if (k.t > 0.0) f.breakpoints.push_back(k.t);
  return f;
}

Complex disk_field_eval(const DiskField& field, Complex z, double t) {
  if (!(std::abs(z) < 1.0)) fail(ErrorCode::DomainError, "disk field evaluated outside the unit disk");
  if (field.driving && std::abs(z - chordal_pole(*field.driving, t)) < 1e-10)
    fail(ErrorCode::PoleProximity, "point within 1e-10 of the moving boundary pole at t = " + std::to_string(t));
  const Complex tau = field.tau(t);
  return (tau - z) * (1.0 - std::conj(tau) * z) * field.p(z, t);
}

Complex solve_disk_ode(const DiskField& field, Complex z0, double s, double t, const DiskSolveOptions& options) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 2>;
  if (!(std::abs(z0) < 1.0)) fail(ErrorCode::DomainError, "solve_disk_ode: z0 must lie in the unit disk");
  if (!(s <= t)) fail(ErrorCode::InvalidArgument, "solve_disk_ode: need s <= t");
  if (s == t) return z0;
  std::vector<double> edges{s};
  for (double b : field.breakpoints)
    if (b > s && b < t) edges.push_back(b);
  std::sort(edges.begin() + 1, edges.end());
  edges.push_back(t);

  State x{z0.real(), z0.imag()};
  const double limit = 1.0 - options.boundary_guard;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k], b = edges[k + 1];
    const double mid = 0.5 * (a + b);
    const bool piecewise_constant = field.driving && field.driving->mode() == DrivingMode::PiecewiseConstant;
    auto rhs = [&](const State& y, State& dy, double tau) {
      const Complex w(y[0], y[1]);
      // Trial stages may probe just outside the disk; accepted states are guarded by the observer.
      if (!(std::abs(w) < 1.0)) {
        dy = {0.0, 0.0};
        return;
      }
      const Complex g = disk_field_eval(field, w, piecewise_constant ? mid : tau);
      dy[0] = g.real();
      dy[1] = g.imag();
    };
    auto observer = [&](const State& y, double tau) {
      if (std::hypot(y[0], y[1]) >= limit)
        fail(ErrorCode::LeftDomain, "trajectory reached |w| >= 1 - " + std::to_string(options.boundary_guard) +
                                        " at t = " + std::to_string(tau));
    };
    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_adaptive(stepper, rhs, x, a, b, (b - a) / 64.0, observer);
  }
  return {x[0], x[1]};
}

}  // namespace loewner
