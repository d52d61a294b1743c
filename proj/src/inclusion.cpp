#include "loewner/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loewner/chordal.hpp"
#include "loewner/error.hpp"
#include "loewner/function_classes.hpp"
#include "loewner/parallel.hpp"

namespace loewner {

std::string_view to_string(DomainKind k) {
  switch (k) {
    case DomainKind::ScaledDisks: return "scaled_disks";
    case DomainKind::TranslatedHalfPlanes: return "translated_half_planes";
    case DomainKind::SlitHalfPlane: return "slit_half_plane";
    case DomainKind::SpiralCutDisk: return "spiral_cut_disk";
  }
  return "unknown";
}

DomainFamily DomainFamily::scaled_disks(std::function<double(double)> gamma, Complex basepoint) {
  DomainFamily f;
  f.kind_ = DomainKind::ScaledDisks;
  f.basepoint_ = basepoint;
  f.contains_ = [gamma](double t, Complex w) { return std::abs(w) < gamma(t); };
  f.radius_ = [gamma](double t, Complex w) {
    const double r = gamma(t);
    if (!(r > 0.0) || !(std::abs(w) < r)) fail(ErrorCode::OracleFailure, "basepoint outside the scaled disk");
    return (r * r - std::norm(w)) / r;
  };
  return f;
}

DomainFamily DomainFamily::translated_half_planes(double c, Complex basepoint) {
  if (!(c >= 0.0)) fail(ErrorCode::InvalidArgument, "translated half-planes need c >= 0");
  DomainFamily f;
  f.kind_ = DomainKind::TranslatedHalfPlanes;
  f.basepoint_ = basepoint;
  f.contains_ = [c](double t, Complex w) { return w.imag() > -c * t; };
  f.radius_ = [c](double t, Complex w) {
    const double dist = w.imag() + c * t;
    if (!(dist > 0.0)) fail(ErrorCode::OracleFailure, "basepoint outside the half-plane");
    return 2.0 * dist;
  };
  return f;
}

namespace {

// Inverse of Phi_{t,T}: grow steps with the latest step applied first.
Jet slit_uniformizer(const DrivingFunction& driving, double t, double horizon, Complex w) {
  const auto steps = erase_schedule(driving, t, horizon);
  Jet acc{w, 1.0};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Jet j = apply_primitive(prim::SlitStep{it->lambda, it->capacity, SlitDirection::Grow}, acc.value);
    acc = {j.value, j.derivative * acc.derivative};
  }
  return acc;
}

}  // namespace

DomainFamily DomainFamily::slit_half_plane(const DrivingFunction& driving, double horizon, Complex basepoint) {
  if (driving.empty() || !(horizon > 0.0) || horizon > driving.horizon())
    fail(ErrorCode::InvalidArgument, "slit family needs 0 < horizon <= driving horizon");
  DomainFamily f;
  f.kind_ = DomainKind::SlitHalfPlane;
  f.basepoint_ = basepoint;
  f.driving_ = driving;
  f.horizon_ = horizon;
  f.contains_ = [driving, horizon](double t, Complex w) {
    return w.imag() > 0.0 && slit_uniformizer(driving, t, horizon, w).value.imag() > 1e-12;
  };
  f.radius_ = [driving, horizon](double t, Complex w) {
    if (!(w.imag() > 0.0)) fail(ErrorCode::OracleFailure, "basepoint not in the upper half-plane");
    const Jet j = slit_uniformizer(driving, t, horizon, w);
    if (!(j.value.imag() > 1e-12) || std::abs(j.derivative) == 0.0)
      fail(ErrorCode::OracleFailure, "basepoint lies on the hull at t = " + std::to_string(t));
    return 2.0 * j.value.imag() / std::abs(j.derivative);
  };
  return f;
}

DomainFamily DomainFamily::spiral_cut_disk(Complex basepoint) {
  DomainFamily f;
  f.kind_ = DomainKind::SpiralCutDisk;
  f.basepoint_ = basepoint;
  f.contains_ = [](double t, Complex w) {
    const double rho = std::abs(w);
    if (!(rho < 1.0)) return false;
    if (rho < 0.5) return true;
    const double tau = 1.0 / (1.0 - rho) - 2.0;
    if (tau < t) return true;
    const double diff = std::remainder(std::arg(w) - tau, 2.0 * std::numbers::pi);
    return std::abs(diff) > 1e-12;
  };
  f.radius_ = [](double, Complex) -> double {
    fail(ErrorCode::OracleFailure, "no conformal radius oracle for spiral-cut disks");
  };
  return f;
}

std::size_t DomainFamily::nesting_violations(std::span<const double> grid, std::span<const Complex> probes) const {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j)
      for (const Complex& w : probes)
        if (contains(grid[i], w) && !contains(grid[j], w)) ++bad;
  return bad;
}

double RadiusProfile::monotonicity_defect() const {
  double worst = 0.0;
  for (std::size_t k = 1; k < samples.size(); ++k)
    worst = std::max(worst, samples[k - 1].second - samples[k].second);
  return worst;
}

std::vector<double> RadiusProfile::values() const {
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(s.second);
  return v;
}

RadiusProfile radius_profile(const DomainFamily& fam, std::span<const double> grid, unsigned threads) {
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1])) fail(ErrorCode::MonotoneViolation, "radius grid must be increasing");
  RadiusProfile p;
  p.basepoint = fam.basepoint();
  p.samples.resize(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) { p.samples[k] = {grid[k], fam.radius(grid[k])}; });
  return p;
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
  if (n == 0 || !(t1 > t0)) fail(ErrorCode::InvalidArgument, "uniform grid needs n >= 1 and t0 < t1");
  std::vector<double> g(n + 1);
  for (std::size_t k = 0; k <= n; ++k) g[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(n);
  g[n] = t1;
  return g;
}

namespace {

double span_of(const RadiusProfile& p) {
  if (p.samples.size() < 2) fail(ErrorCode::InvalidArgument, "profile needs at least two samples");
  return p.samples.back().first - p.samples.front().first;
}

}  // namespace

ChainReport check_admissible(const RadiusProfile& coarse, const RadiusProfile& fine, double d,
                             const AcProxyOptions& options) {
  const double length = span_of(coarse);
  if (std::abs(span_of(fine) - length) > 1e-12 * std::max(1.0, length))
    fail(ErrorCode::InvalidArgument, "profiles must cover the same interval");
  ChainReport r;
  r.order = d;
  r.proxy = ac_proxy_samples(coarse.values(), fine.values(), length, d, options);
  r.continuity_modulus = r.proxy.fine.max_jump;
  r.monotonicity_defect = std::max(coarse.monotonicity_defect(), fine.monotonicity_defect());
  r.inclusion_chain = r.proxy.continuous;
  r.admissible = r.inclusion_chain && r.proxy.absolutely_continuous;
  return r;
}

ChainReport check_inclusion_chain(const RadiusProfile& coarse, const RadiusProfile& fine,
                                  const AcProxyOptions& options) {
  ChainReport r = check_admissible(coarse, fine, 1.0, options);
  r.admissible = false;
  return r;
}

ChainReport check_family(const DomainFamily& fam, double t0, double t1, double d, const AcProxyOptions& options,
                         unsigned threads) {
  const auto g0 = uniform_grid(t0, t1, options.coarse_intervals);
  const auto g1 = uniform_grid(t0, t1, options.coarse_intervals * options.refinement);
  return check_admissible(radius_profile(fam, g0, threads), radius_profile(fam, g1, threads), d, options);
}

std::vector<std::pair<double, double>> reparametrize(const RadiusProfile& profile,
                                                     const std::function<double(double)>& g,
                                                     std::span<const double> grid, double tolerance) {
  const auto& s = profile.samples;
  if (s.size() < 2) fail(ErrorCode::InvalidArgument, "reparametrize needs a profile with two samples");
  std::vector<std::pair<double, double>> out;
  for (double t : grid) {
    const double target = g(t);
    if (target < s.front().second - tolerance || target > s.back().second + tolerance)
      fail(ErrorCode::RangeMismatch, "target value " + std::to_string(target) + " outside the radius range");
    if (target <= s.front().second) {
      out.emplace_back(t, s.front().first);
      continue;
    }
    std::size_t k = 1;
    while (k < s.size() && s[k].second < target) ++k;
    if (k == s.size()) {
      out.emplace_back(t, s.back().first);
      continue;
    }
    const auto& [ta, ma] = s[k - 1];
    const auto& [tb, mb] = s[k];
    const double x = mb > ma ? (target - ma) / (mb - ma) : 1.0;
    out.emplace_back(t, ta + x * (tb - ta));
  }
  return out;
}

std::vector<std::pair<double, double>> reparametrize(const DomainFamily& fam, const std::function<double(double)>& g,
                                                     std::span<const double> grid, double theta_max,
                                                     double tolerance) {
  const double lo_value = fam.radius(0.0), hi_value = fam.radius(theta_max);
  std::vector<std::pair<double, double>> out;
  for (double t : grid) {
    const double target = g(t);
    if (target < lo_value - tolerance || target > hi_value + tolerance)
      fail(ErrorCode::RangeMismatch, "target value " + std::to_string(target) + " outside the radius range");
    if (target <= lo_value) {
      out.emplace_back(t, 0.0);
      continue;
    }
    // Smallest theta with mu(theta) >= target.
    double lo = 0.0, hi = theta_max;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, theta_max); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (fam.radius(mid) >= target) hi = mid;
      else lo = mid;
    }
    out.emplace_back(t, hi);
  }
  return out;
}

double cantor_function(double x) {
  x = std::clamp(x, 0.0, 1.0);
  if (x == 1.0) return 1.0;
  double r = 0.0, s = 0.5;
  for (int k = 0; k < 40; ++k) {
    x *= 3.0;
    const int digit = static_cast<int>(x);
    x -= digit;
    if (digit == 1) return r + s;
    r += s * (digit / 2);
    s *= 0.5;
  }
  return r;
}

DomainFamily cantor_family() {
  return DomainFamily::scaled_disks([](double t) { return 1.0 + cantor_function(std::min(t, 1.0)); });
}

Complex spiral_curve(double tau) {
  if (!(tau >= 0.0)) fail(ErrorCode::InvalidArgument, "spiral parameter must be >= 0");
  return std::polar(1.0 - 1.0 / (tau + 2.0), tau);
}

ChordalProbeReport chordal_admissibility_probe(const DomainFamily& fam, std::span<const double> times,
                                               double tolerance) {
  if (fam.kind() != DomainKind::SlitHalfPlane || !fam.driving())
    fail(ErrorCode::PreconditionFailed, "chordal admissibility probe needs a slit half-plane family");
  ChordalProbeReport r;
  r.all_parabolic = true;
  for (double t : times) {
    const ClassCResult c = class_C_check(conjugate_by_cayley(evolution_operator(*fam.driving(), 0.0, t)));
    r.derivatives.emplace_back(t, c.derivative);
    if (!c.member || std::abs(c.derivative - 1.0) > tolerance) r.all_parabolic = false;
  }
  return r;
}

}  // namespace loewner
