#include "loewner/chordal.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include <boost/numeric/odeint.hpp>

#include "loewner/error.hpp"

namespace loewner {
namespace {

void check_interval(const DrivingFunction& driving, double s, double t) {
  if (driving.empty()) fail(ErrorCode::InvalidArgument, "driving function is empty");
  if (!(s >= 0.0 && s <= t && t <= driving.horizon()))
    fail(ErrorCode::InvalidArgument, "need 0 <= s <= t <= T (s = " + std::to_string(s) +
                                         ", t = " + std::to_string(t) + ")");
}

std::vector<double> segment_edges(const DrivingFunction& driving, double s, double t) {
  std::vector<double> edges{s};
  for (double b : driving.breakpoints(s, t)) edges.push_back(b);
  edges.push_back(t);
  return edges;
}

// Knot interval [t_k, t_{k+1}] (or [t_last, T]) containing [a, b].
std::pair<double, double> knot_interval(const DrivingFunction& driving, double a, double b) {
  double lo = 0.0, hi = driving.horizon();
  for (const Knot& k : driving.knots()) {
    if (k.t <= a) lo = k.t;
    if (k.t >= b) {
      hi = k.t;
      break;
    }
  }
  return {lo, hi};
}

}  // namespace

Complex elementary_step(Complex w, double lambda, double capacity, SlitDirection direction) {
  if (!(capacity >= 0.0)) fail(ErrorCode::InvalidArgument, "elementary_step: capacity must be >= 0");
  if (capacity == 0.0) return w;
  return apply_primitive(prim::SlitStep{lambda, capacity, direction}, w).value;
}

std::vector<prim::SlitStep> erase_schedule(const DrivingFunction& driving, double s, double t,
                                           const SolveOptions& options) {
  check_interval(driving, s, t);
  if (options.substeps == 0) fail(ErrorCode::InvalidArgument, "substeps must be >= 1");
  std::vector<prim::SlitStep> steps;
  if (s == t) return steps;
  const auto edges = segment_edges(driving, s, t);
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k], b = edges[k + 1];
    if (driving.mode() == DrivingMode::PiecewiseConstant) {
      steps.push_back({driving(a), b - a, SlitDirection::Erase});
      continue;
    }
    // Cells are anchored to the enclosing knot interval, so splitting [s, t]
    // at an interior time only changes the one cell that contains it.
    const auto [ka, kb] = knot_interval(driving, a, b);
    const double n = static_cast<double>(options.substeps);
    const double h = (kb - ka) / n;
    auto cell_edge = [&](double j) { return j >= n ? kb : ka + h * j; };
    double j = std::floor((a - ka) / h);
    if (cell_edge(j + 1.0) <= a) j += 1.0;
    for (double lo = a; lo < b; j += 1.0) {
      const double hi = std::min(b, cell_edge(j + 1.0));
      if (hi > lo) steps.push_back({driving(0.5 * (lo + hi)), hi - lo, SlitDirection::Erase});
      lo = hi;
    }
  }
  return steps;
}

std::vector<Complex> solve_phi(const DrivingFunction& driving, double s, double t, std::span<const Complex> points,
                               const SolveOptions& options) {
  const auto steps = erase_schedule(driving, s, t, options);
  std::vector<Complex> out(points.begin(), points.end());
  for (Complex& w : out) {
    if (!strictly_inside(Region::UpperHalfPlane, w))
      fail(ErrorCode::DomainError, "solve_phi: starting point not in the upper half-plane");
    for (const auto& step : steps) {
      if (std::abs(w - step.lambda) < options.collision)
        fail(ErrorCode::StepCollision, "point absorbed by the hull (|w - lambda| < " +
                                           std::to_string(options.collision) + ")");
      w = apply_primitive(step, w).value;
    }
  }
  return out;
}

std::vector<Complex> solve_phi_rk(const DrivingFunction& driving, double s, double t,
                                  std::span<const Complex> points, const RkOptions& options) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 2>;
  check_interval(driving, s, t);
  const auto edges = segment_edges(driving, s, t);
  std::vector<Complex> out(points.begin(), points.end());
  for (Complex& w : out) {
    if (!strictly_inside(Region::UpperHalfPlane, w))
      fail(ErrorCode::DomainError, "solve_phi_rk: starting point not in the upper half-plane");
    if (s == t) continue;
    State x{w.real(), w.imag()};
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      const double a = edges[k], b = edges[k + 1];
      const double mid = 0.5 * (a + b);
      auto rhs = [&](const State& y, State& dy, double tau) {
        // Constant drivings are evaluated at the segment midpoint so the knot value is never mixed in.
        const double lam = driving.mode() == DrivingMode::PiecewiseConstant ? driving(mid) : driving(tau);
        const Complex v = 1.0 / (lam - Complex(y[0], y[1]));
        dy[0] = v.real();
        dy[1] = v.imag();
      };
      auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, odeint::runge_kutta_dopri5<State>());
      odeint::integrate_adaptive(stepper, rhs, x, a, b, (b - a) / 64.0);
    }
    w = Complex(x[0], x[1]);
  }
  return out;
}

Map evolution_operator(const DrivingFunction& driving, double s, double t, const SolveOptions& options) {
  const auto steps = erase_schedule(driving, s, t, options);
  std::vector<Primitive> prims(steps.begin(), steps.end());
  return Map::sequence(std::move(prims), Region::UpperHalfPlane, Region::UpperHalfPlane,
                       Tail{1.0, 0.0, -(t - s)});
}

std::vector<TraceSample> trace_from_driving(const DrivingFunction& driving, std::span<const double> grid) {
  if (driving.empty()) fail(ErrorCode::InvalidArgument, "trace_from_driving: driving function is empty");
  std::vector<double> times;
  const bool prepend = grid.empty() || grid.front() > 0.0;
  if (prepend) times.push_back(0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] >= 0.0 && grid[k] <= driving.horizon()))
      fail(ErrorCode::InvalidArgument, "trace grid leaves [0, T]");
    if (k > 0 && !(grid[k] > grid[k - 1])) fail(ErrorCode::MonotoneViolation, "trace grid must be increasing");
    times.push_back(grid[k]);
  }
  std::vector<double> lam(times.size()), cap(times.size());
  for (std::size_t n = 1; n < times.size(); ++n) {
    lam[n] = driving.left_limit(times[n]);
    cap[n] = times[n] - times[n - 1];
  }
  std::vector<TraceSample> out;
  out.reserve(grid.size());
  for (std::size_t n = prepend ? 1 : 0; n < times.size(); ++n) {
    Complex tip;
    if (n == 0) {
      tip = driving(0.0);
    } else {
      tip = Complex(lam[n], std::sqrt(2.0 * cap[n]));
      for (std::size_t k = n - 1; k >= 1; --k) tip = elementary_step(tip, lam[k], cap[k], SlitDirection::Erase);
    }
    out.push_back({times[n], tip});
  }
  return out;
}

DrivingFunction extract_driving(std::span<const Complex> polyline) {
  if (polyline.empty()) fail(ErrorCode::InvalidArgument, "extract_driving: empty polyline");
  std::vector<Complex> pts(polyline.begin(), polyline.end());
  for (const Complex& z : pts) {
    require_finite(z, "extract_driving");
    if (z.imag() < -1e-9) fail(ErrorCode::SelfIntersection, "trace point below the real line");
  }
  const std::size_t first = std::abs(pts.front().imag()) <= 1e-9 ? 1 : 0;
  std::vector<Knot> knots;
  double capacity = 0.0;
  for (std::size_t k = first; k < pts.size(); ++k) {
    const Complex z = pts[k];
    if (z.imag() < -1e-9)
      fail(ErrorCode::SelfIntersection, "zipped point left the half-plane at index " + std::to_string(k));
    const double lambda = z.real();
    const double y = std::max(z.imag(), 0.0);
    const double delta = 0.5 * y * y;
    if (delta == 0.0) continue;
    knots.push_back({capacity, lambda});
    capacity += delta;
    for (std::size_t j = k + 1; j < pts.size(); ++j) pts[j] = elementary_step(pts[j], lambda, delta, SlitDirection::Grow);
  }
  if (knots.empty()) return DrivingFunction();
  return DrivingFunction(std::move(knots), DrivingMode::PiecewiseConstant, capacity);
}

DrivingFunction extract_driving(std::span<const TraceSample> trace) {
  std::vector<Complex> pts;
  pts.reserve(trace.size());
  for (const TraceSample& s : trace) pts.push_back(s.tip);
  return extract_driving(std::span<const Complex>(pts));
}

}  // namespace loewner
