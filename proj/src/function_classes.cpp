#include "loewner/function_classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "loewner/error.hpp"
#include "loewner/extrapolation.hpp"

namespace loewner {
namespace {

std::vector<double> ray_levels(const LimitOptions& o) {
  if (o.levels < 4 || !(o.ratio > 1.0) || !(o.y_max > 0.0))
    fail(ErrorCode::InvalidArgument, "limit options need >= 4 levels, ratio > 1 and y_max > 0");
  std::vector<double> ys(static_cast<std::size_t>(o.levels));
  for (int k = 0; k < o.levels; ++k) ys[static_cast<std::size_t>(k)] = o.y_max / std::pow(o.ratio, o.levels - 1 - k);
  return ys;
}

LimitEstimate settle(std::span<const Complex> samples, double ratio, double tolerance, const char* what) {
  const Extrapolated e = richardson(samples, ratio, 2);
  if (e.error > 10.0 * tolerance)
    fail(ErrorCode::Unstable, std::string(what) + ": estimated extrapolation error " + std::to_string(e.error));
  return {e.value.real(), e.error};
}

// Real parts only, in powers of 1/y^2: odd powers of 1/(iy) are imaginary when
// the expansion coefficients are real moments of a compactly supported measure.
LimitEstimate settle_even(std::span<const Complex> samples, double ratio, double tolerance, const char* what) {
  std::vector<Complex> re;
  for (const Complex& s : samples) re.emplace_back(s.real(), 0.0);
  const Extrapolated e = richardson(re, ratio * ratio, static_cast<int>(re.size()) - 2);
  if (e.error > 10.0 * tolerance)
    fail(ErrorCode::Unstable, std::string(what) + ": estimated extrapolation error " + std::to_string(e.error));
  return {e.value.real(), e.error};
}

Map half_plane_side(const Map& m) {
  if (m.domain() == Region::UpperHalfPlane) return m;
  if (m.domain() == Region::UnitDisk) return conjugate_by_cayley(m);
  fail(ErrorCode::InvalidArgument, "map must be declared on the disk or the half-plane");
}

}  // namespace

LimitEstimate angular_derivative_at_infinity(const Map& f, const LimitOptions& options) {
  if (f.domain() != Region::UpperHalfPlane)
    fail(ErrorCode::InvalidArgument, "angular_derivative_at_infinity needs a half-plane map");
  std::vector<Complex> samples;
  for (double y : ray_levels(options)) samples.push_back(f(Complex(0.0, y)) / Complex(0.0, y));
  LimitEstimate e = settle(samples, options.ratio, options.tolerance, "angular derivative at infinity");
  e.value = std::max(e.value, 0.0);
  return e;
}

LimitEstimate ell(const Map& g, const EllOptions& options) {
  if (g.domain() != Region::UpperHalfPlane) fail(ErrorCode::InvalidArgument, "ell needs a half-plane map");
  if (options.use_tail && g.tail()) {
    const Tail& t = *g.tail();
    if (std::abs(t.a - 1.0) > 1e-14 || std::abs(t.b) > 1e-14)
      fail(ErrorCode::Diverging, "tail a z + b + c/z with (a, b) != (1, 0): z(z - G(z)) is unbounded");
    return {-t.c.real(), 0.0};
  }
  const auto ys = ray_levels(options.limit);
  std::vector<Complex> samples;
  for (double y : ys) {
    const Complex z(0.0, y);
    samples.push_back(z * (z - g(z)));
  }
  const double first = std::abs(samples.front()), last = std::abs(samples.back());
  if (last > 1e-300 && first > 1e-300) {
    const double exponent = std::log(last / first) / std::log(ys.back() / ys.front());
    if (exponent > options.divergence_exponent && last > 1.0)
      fail(ErrorCode::Diverging, "z(z - G(z)) grows like y^" + std::to_string(exponent));
  }
  return settle_even(samples, options.limit.ratio, options.limit.tolerance, "ell");
}

P0Report is_P0(const Map& g, const P0Options& options) {
  if (g.domain() != Region::UpperHalfPlane) fail(ErrorCode::InvalidArgument, "is_P0 needs a half-plane map");
  if (options.points < 3 || !(options.y_max > options.y_min * 100.0))
    fail(ErrorCode::InvalidArgument, "is_P0 grid must span more than two decades");
  P0Report r;
  const double lmin = std::log(options.y_min), lmax = std::log(options.y_max);
  std::vector<double> ys(options.points), gap(options.points), q(options.points);
  bool in_half_plane = true;
  for (std::size_t k = 0; k < options.points; ++k) {
    ys[k] = std::exp(lmin + (lmax - lmin) * static_cast<double>(k) / static_cast<double>(options.points - 1));
    const Complex z(0.0, ys[k]);
    const Complex f = g(z);
    if (!(f.imag() > 0.0)) in_half_plane = false;
    gap[k] = std::abs(f - z);
    q[k] = ys[k] * (f.imag() - ys[k]);
  }
  r.sup = *std::max_element(q.begin(), q.end());
  r.final_gap = gap.back();
  // Index two decades below y_max.
  const double lref = lmax - 2.0 * std::log(10.0);
  std::size_t ref = 0;
  while (ref + 1 < options.points && std::log(ys[ref + 1]) <= lref + 1e-12) ++ref;
  const double scale = std::max(1.0, std::abs(q[ref]));
  const bool gap_ok = gap.back() <= options.gap_decay * gap[ref] || gap.back() <= 1e-12 * options.y_max;
  const bool bounded = q.back() - q[ref] <= 0.1 * scale;
  if (!in_half_plane) r.reason = "F leaves the upper half-plane on the sampling ray";
  else if (!gap_ok) r.reason = "F(iy) - iy does not tend to 0";
  else if (!bounded) r.reason = "y (Im F(iy) - y) grows along the ray";
  r.member = in_half_plane && gap_ok && bounded;
  const double gap_margin = gap[ref] > 0.0 ? 1.0 - gap.back() / (options.gap_decay * gap[ref]) : 1.0;
  const double growth_margin = 1.0 - std::max(0.0, q.back() - q[ref]) / (0.1 * scale);
  const double margin = r.member ? std::min(gap_margin, growth_margin) : -std::min(gap_margin, growth_margin);
  r.confidence = std::clamp(gap.back() <= 1e-12 * options.y_max ? std::max(margin, growth_margin) : margin, 0.0, 1.0);
  return r;
}

Map build_from_measure(const MeasureSpec& mu, const QuadratureOptions& quadrature) {
  return Map::measure_integral(mu, quadrature);
}

Map build_nevanlinna(double beta, double alpha, const MeasureSpec& mu, const QuadratureOptions& quadrature) {
  return Map::nevanlinna(beta, alpha, mu, quadrature);
}

ClassCResult class_C_check(const Map& phi, const LimitOptions& options) {
  if (phi.domain() != Region::UnitDisk) fail(ErrorCode::InvalidArgument, "class_C_check needs a disk map");
  const LimitEstimate c = angular_derivative_at_infinity(conjugate_by_cayley(phi), options);
  ClassCResult r;
  r.half_plane_derivative = c.value;
  r.error = c.error;
  r.member = c.value > 1e-8;
  r.derivative = r.member ? 1.0 / c.value : std::numeric_limits<double>::infinity();
  r.in_C0 = r.member && r.derivative <= 1.0 + 1e-12;
  return r;
}

CtildeResult class_Ctilde_check(const Map& phi, const CtildeOptions& options) {
  const Map g = half_plane_side(phi);
  if (options.radii.empty() || options.rays < 2) fail(ErrorCode::InvalidArgument, "Ctilde fit needs samples");
  constexpr int kTerms = 5;
  const double ref = options.radii.front();
  const std::size_t n = options.radii.size() * options.rays;
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), kTerms);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n));
  std::vector<Complex> ws;
  Eigen::Index row = 0;
  for (double radius : options.radii) {
    for (std::size_t k = 0; k < options.rays; ++k) {
      const double theta = std::numbers::pi / 6.0 +
                           (2.0 * std::numbers::pi / 3.0) * static_cast<double>(k) /
                               static_cast<double>(options.rays - 1);
      const Complex w = std::polar(radius, theta);
      const Complex u = w / ref;  // columns scaled to order one at the innermost radius
      a(row, 0) = u;
      for (int j = 1; j < kTerms; ++j) a(row, j) = std::pow(1.0 / u, j - 1);
      rhs(row) = g(w);
      ws.push_back(w);
      ++row;
    }
  }
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(rhs);
  CtildeResult r;
  r.tail = Tail{x(0) / ref, x(1), x(2) * ref};
  const Eigen::VectorXcd res = a * x - rhs;
  for (Eigen::Index k = 0; k < res.size(); ++k) r.residual = std::max(r.residual, std::abs(res(k)));
  const double scale = 1.0 + std::abs(r.tail.a) + std::abs(r.tail.b) + std::abs(r.tail.c);
  if (r.residual > options.residual_tolerance * scale)
    fail(ErrorCode::FitResidual, "a w + b + c/w model misfits (residual " + std::to_string(r.residual) + ")");
  r.member = r.tail.a.real() > 1e-12 && std::abs(r.tail.a.imag()) <= options.imag_tolerance * scale &&
             std::abs(r.tail.b.imag()) <= options.imag_tolerance;
  return r;
}

LimitEstimate disk_ell_from_expansion(const Map& phi, const DiskEllOptions& options) {
  if (phi.domain() != Region::UnitDisk) fail(ErrorCode::InvalidArgument, "disk_ell_from_expansion needs a disk map");
  if (options.levels < 4 || !(options.h0 > 0.0 && options.h0 < 1.0))
    fail(ErrorCode::InvalidArgument, "disk expansion options need >= 4 levels and 0 < h0 < 1");
  std::vector<Complex> samples;
  for (int k = 0; k < options.levels; ++k) {
    const double h = options.h0 / std::pow(options.ratio, k);
    const Complex z(1.0 - h, 0.0);
    samples.push_back((phi(z) - z) * (-4.0) / std::pow(z - 1.0, 3));
  }
  const LimitEstimate e = settle(samples, options.ratio, options.tolerance, "disk expansion coefficient");
  const Complex c = richardson(samples, options.ratio, 2).value;
  const double slack = 10.0 * options.tolerance * std::max(1.0, std::abs(c));
  if (std::abs(c.imag()) > slack || c.real() < -slack)
    fail(ErrorCode::PreconditionFailed, "expansion coefficient " + std::to_string(c.real()) + " + " +
                                            std::to_string(c.imag()) + "i is not a nonnegative real");
  return e;
}

BurnsKrantzResult burns_krantz_check(const Map& phi, double identity_tolerance) {
  if (phi.domain() != Region::UnitDisk) fail(ErrorCode::InvalidArgument, "burns_krantz_check needs a disk map");
  BurnsKrantzResult r;
  r.ell = ell(conjugate_by_cayley(phi)).value;
  r.applicable = std::abs(r.ell) <= 1e-9;
  if (!r.applicable) return r;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const Complex z = std::polar(0.95 * (i + 1) / 10.0, 2.0 * std::numbers::pi * (j + 0.5 * i) / 10.0);
      r.sup_deviation = std::max(r.sup_deviation, std::abs(phi(z) - z));
    }
  }
  if (r.sup_deviation > identity_tolerance)
    fail(ErrorCode::RigidityViolation, "ell vanishes but the map deviates from the identity by " +
                                           std::to_string(r.sup_deviation));
  return r;
}

GrowthCheck caratheodory_growth_check(const Map& p, Complex z0, std::span<const Complex> points, double slack) {
  const Complex p0 = p(z0);
  if (!(p0.real() > 0.0) || std::abs(p0.imag()) > 1e-10 * std::max(1.0, std::abs(p0)))
    fail(ErrorCode::PreconditionFailed, "growth estimate needs p(z0) real and positive");
  GrowthCheck r;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const Complex& z : points) {
    const double rho = pseudo_hyperbolic(z, z0);
    const double bound = p0.real() * (1.0 + rho) / (1.0 - rho);
    const double margin = bound - std::abs(p(z));
    r.worst_margin = std::min(r.worst_margin, margin);
    if (margin < -slack * std::max(1.0, bound)) r.pass = false;
    ++r.samples;
  }
  return r;
}

GrowthCheck caratheodory_growth_check(const Map& p, Complex z0, std::size_t count, std::uint64_t seed,
                                      double slack) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-5.0, 5.0), logy(std::log(1e-2), std::log(1e2));
  std::vector<Complex> pts(count);
  for (auto& z : pts) {
    const double x = re(rng);
    z = Complex(x, std::exp(logy(rng)));
  }
  return caratheodory_growth_check(p, z0, pts, slack);
}

ClassReport classify(const Map& m) {
  const Map g = half_plane_side(m);
  ClassReport r;
  r.tail = g.tail();
  try {
    const LimitEstimate a = angular_derivative_at_infinity(g);
    r.angular_derivative_infinity = a.value;
    r.diagnostics["angular_derivative_error"] = a.error;
    r.in_P = std::abs(a.value - 1.0) <= 1e-6;
  } catch (const Error& e) {
    r.notes.push_back(e.what());
  }
  try {
    const LimitEstimate l = ell(g);
    if (l.value >= -1e-9) r.ell = std::max(l.value, 0.0);
    else r.notes.push_back("ell estimate is negative; treated as undefined");
    r.diagnostics["ell_error"] = l.error;
  } catch (const Error& e) {
    r.notes.push_back(e.what());
  }
  const P0Report p0 = is_P0(g);
  r.in_P0 = r.in_P && p0.member;
  r.diagnostics["p0_sup"] = p0.sup;
  r.diagnostics["p0_final_gap"] = p0.final_gap;
  r.diagnostics["p0_confidence"] = p0.confidence;
  if (!p0.reason.empty()) r.notes.push_back("P0 proxy: " + p0.reason);
  const Map disk = conjugate_by_cayley(g);
  try {
    const ClassCResult c = class_C_check(disk);
    r.c_conjugate = c.member;
    r.diagnostics["boundary_derivative_at_1"] = c.member ? c.derivative : -1.0;
  } catch (const Error& e) {
    r.notes.push_back(e.what());
  }
  if (r.c_conjugate) {
    try {
      const CtildeResult ct = class_Ctilde_check(g);
      r.ctilde_conjugate = ct.member;
      r.diagnostics["ctilde_residual"] = ct.residual;
      if (!r.tail) r.tail = ct.tail;
    } catch (const Error& e) {
      r.notes.push_back(e.what());
    }
  }
  return r;
}

}  // namespace loewner
