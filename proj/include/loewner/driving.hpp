#pragma once

#include <functional>
#include <string_view>
#include <vector>

namespace loewner {

enum class DrivingMode { PiecewiseConstant, PiecewiseLinear };

std::string_view to_string(DrivingMode m);
DrivingMode driving_mode_from_string(std::string_view s);

struct Knot {
  double t = 0.0;
  double lambda = 0.0;
};

/// Real driving term lambda(t) on [0, T] in capacity time.
///
/// Knots are strictly increasing in t and start at 0.  In constant mode the
/// value of knot k holds on [t_k, t_{k+1}); in linear mode values are
/// interpolated and the last value is held up to the horizon.  An empty
/// driving (no knots, horizon 0) is the result of extracting a one-point trace.
class DrivingFunction {
 public:
  DrivingFunction() = default;
  DrivingFunction(std::vector<Knot> knots, DrivingMode mode, double horizon);

  static DrivingFunction constant(double value, double horizon);
  /// Samples f at n + 1 equally spaced knots on [0, horizon].
  static DrivingFunction sampled(const std::function<double(double)>& f, double horizon, std::size_t n,
                                 DrivingMode mode = DrivingMode::PiecewiseLinear);

  double operator()(double t) const;
  /// Left limit lambda(t-); equals lambda(t) in linear mode.
  double left_limit(double t) const;

  const std::vector<Knot>& knots() const { return knots_; }
  DrivingMode mode() const { return mode_; }
  double horizon() const { return horizon_; }
  bool empty() const { return knots_.empty(); }

  /// Knot times strictly inside (a, b).
  std::vector<double> breakpoints(double a, double b) const;

 private:
  std::size_t interval(double t) const;

  std::vector<Knot> knots_;
  DrivingMode mode_ = DrivingMode::PiecewiseConstant;
  double horizon_ = 0.0;
};

}  // namespace loewner
