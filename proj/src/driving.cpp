#include "loewner/driving.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/error.hpp"

namespace loewner {

std::string_view to_string(DrivingMode m) { return m == DrivingMode::PiecewiseConstant ? "const" : "linear"; }

DrivingMode driving_mode_from_string(std::string_view s) {
  if (s == "const" || s == "constant" || s == "piecewise_constant") return DrivingMode::PiecewiseConstant;
  if (s == "linear" || s == "piecewise_linear") return DrivingMode::PiecewiseLinear;
  fail(ErrorCode::InvalidArgument, "unknown interpolation mode '" + std::string(s) + "'");
}

DrivingFunction::DrivingFunction(std::vector<Knot> knots, DrivingMode mode, double horizon)
    : knots_(std::move(knots)), mode_(mode), horizon_(horizon) {
  if (knots_.empty()) {
    if (horizon_ != 0.0) fail(ErrorCode::InvalidArgument, "driving without knots must have horizon 0");
    return;
  }
  if (knots_.front().t != 0.0) fail(ErrorCode::InvalidArgument, "first driving knot must be at t = 0");
  for (std::size_t k = 0; k < knots_.size(); ++k) {
    if (!std::isfinite(knots_[k].t) || !std::isfinite(knots_[k].lambda))
      fail(ErrorCode::InvalidArgument, "driving knots must be finite");
    if (k > 0 && !(knots_[k].t > knots_[k - 1].t))
      fail(ErrorCode::MonotoneViolation, "driving knot times must be strictly increasing (at index " +
                                             std::to_string(k) + ")");
  }
  if (!std::isfinite(horizon_) || !(horizon_ > 0.0) || horizon_ < knots_.back().t)
    fail(ErrorCode::InvalidArgument, "driving horizon must be positive and cover every knot");
}

DrivingFunction DrivingFunction::constant(double value, double horizon) {
  return DrivingFunction({{0.0, value}}, DrivingMode::PiecewiseConstant, horizon);
}

DrivingFunction DrivingFunction::sampled(const std::function<double(double)>& f, double horizon, std::size_t n,
                                         DrivingMode mode) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "sampled driving needs n >= 1");
  std::vector<Knot> knots(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = horizon * static_cast<double>(k) / static_cast<double>(n);
    knots[k] = {t, f(t)};
  }
  return DrivingFunction(std::move(knots), mode, horizon);
}

std::size_t DrivingFunction::interval(double t) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t, [](double v, const Knot& k) { return v < k.t; });
  return static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - knots_.begin() - 1, 0));
}

double DrivingFunction::operator()(double t) const {
  if (knots_.empty()) fail(ErrorCode::InvalidArgument, "evaluating an empty driving function");
  if (!(t >= 0.0 && t <= horizon_ * (1.0 + 1e-14) + 1e-300))
    fail(ErrorCode::InvalidArgument, "driving evaluated outside [0, T] at t = " + std::to_string(t));
  const std::size_t k = interval(t);
  if (mode_ == DrivingMode::PiecewiseConstant || k + 1 == knots_.size()) return knots_[k].lambda;
  const Knot& a = knots_[k];
  const Knot& b = knots_[k + 1];
  const double x = (t - a.t) / (b.t - a.t);
  return a.lambda + x * (b.lambda - a.lambda);
}

double DrivingFunction::left_limit(double t) const {
  if (mode_ == DrivingMode::PiecewiseLinear || t <= 0.0) return (*this)(t);
  const std::size_t k = interval(t);
  if (knots_[k].t == t && k > 0) return knots_[k - 1].lambda;
  return knots_[k].lambda;
}

std::vector<double> DrivingFunction::breakpoints(double a, double b) const {
  std::vector<double> out;
  for (const Knot& k : knots_)
    if (k.t > a && k.t < b) out.push_back(k.t);
  return out;
}

}  // namespace loewner
