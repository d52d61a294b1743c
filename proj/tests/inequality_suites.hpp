#pragma once

// Randomized inequality suites shared by the property tests and the
// acceptance runner.  Each returns the number of violations beyond the slack.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "loewner/chordal.hpp"
#include "loewner/function_classes.hpp"
#include "support.hpp"

namespace suites {

using loewner::Complex;
using loewner::Map;
using support::Gen;

inline constexpr double kSlack = 1e-10;

inline Map random_measure_map(Gen& g) {
  std::vector<loewner::Atom> atoms;
  const int n = g.integer(1, 4);
  for (int k = 0; k < n; ++k) atoms.push_back({g.uniform(-3.0, 3.0), g.uniform(0.01, 2.0)});
  return loewner::build_from_measure(loewner::MeasureSpec(atoms));
}

inline loewner::DrivingFunction random_step_driving(Gen& g, double horizon = 1.0, int max_pieces = 6) {
  std::vector<loewner::Knot> knots;
  const int n = g.integer(1, max_pieces);
  for (int k = 0; k < n; ++k) knots.push_back({horizon * k / n, g.uniform(-2.0, 2.0)});
  return loewner::DrivingFunction(knots, loewner::DrivingMode::PiecewiseConstant, horizon);
}

enum class DiskMaps {
  Moebius,  ///< l_y o (c e^{i theta}) o l_x
  Slit,     ///< conjugated chordal slit maps
  Mixed,
};

/// Univalent self-map of the disk fixing 0, with phi'(0) > 0 when `positive`.
inline Map random_disk_map(Gen& g, bool positive, DiskMaps kind = DiskMaps::Mixed) {
  using loewner::Region;
  const bool moebius = kind == DiskMaps::Moebius || (kind == DiskMaps::Mixed && g.integer(0, 1) == 0);
  Map psi;
  if (moebius) {
    psi = compose(Map::affine(std::polar(g.uniform(0.05, 1.0), g.uniform(0.0, 6.3)), 0.0, Region::UnitDisk),
                  Map::disk_automorphism(g.disk(0.9)));
  } else {
    const double t = g.uniform(0.01, 1.0);
    psi = loewner::conjugate_by_cayley(loewner::evolution_operator(random_step_driving(g), 0.0, t));
  }
  Map phi = compose(Map::disk_automorphism(psi(0.0)), psi);
  if (positive) phi = compose(loewner::rotation(-std::arg(phi.derivative(0.0))), phi);
  return phi;
}

/// Im(f(z) - z) >= 0 for measure maps and chordal transition maps.
inline std::size_t positivity_violations(std::uint64_t seed, int cases) {
  Gen g(seed);
  std::size_t bad = 0;
  for (int trial = 0; trial < cases; ++trial) {
    const Complex z = g.upper(5.0, 1e-3, 5.0);
    const Map f = trial % 2 == 0 ? random_measure_map(g)
                                 : loewner::evolution_operator(random_step_driving(g), 0.0, g.uniform(0.0, 1.0));
    if ((f(z) - z).imag() < -kSlack) ++bad;
  }
  return bad;
}

struct DistortionCounts {
  std::size_t general = 0;   ///< |phi - z| <= |1 - a| + sqrt(1 - |a|^2)
  std::size_t positive = 0;  ///< |phi - z| <= 3 sqrt(1 - a) for a = phi'(0) > 0
};

inline DistortionCounts distortion_violations(std::uint64_t seed, int cases, DiskMaps kind) {
  Gen g(seed);
  DistortionCounts bad;
  for (int trial = 0; trial < cases; ++trial) {
    const bool positive = kind == DiskMaps::Slit || trial % 2 == 0;
    const Map phi = random_disk_map(g, positive, kind);
    const Complex a1 = phi.derivative(0.0);
    const Complex z = g.disk(0.99);
    const double lhs = std::abs(phi(z) - z);
    if (lhs > std::abs(1.0 - a1) + std::sqrt(std::max(0.0, 1.0 - std::norm(a1))) + kSlack) ++bad.general;
    if (positive && lhs > 3.0 * std::sqrt(std::max(0.0, 1.0 - a1.real())) + kSlack) ++bad.positive;
  }
  return bad;
}

/// |f - g| <= 6/(1 - r)^3 sqrt(g'(0)(g'(0) - f'(0))) on |z| <= r for f = g o phi.
inline std::size_t nested_pair_violations(std::uint64_t seed, int cases, double r) {
  Gen g(seed);
  std::size_t bad = 0;
  for (int trial = 0; trial < cases; ++trial) {
    // Scaled, rotated Koebe function: univalent for |a| <= 1.
    const Complex w = g.upper(2.0, -2.0, 2.0);
    const double c = g.uniform(0.1, 3.0);
    const Complex a = g.disk(1.0);
    auto gfun = [&](Complex z) { return w + c * z / ((1.0 - a * z) * (1.0 - a * z)); };
    const Map phi = random_disk_map(g, true);
    const double fprime = c * phi.derivative(0.0).real();
    const Complex z = g.disk(r);
    const double lhs = std::abs(gfun(phi(z)) - gfun(z));
    if (lhs > 6.0 / std::pow(1.0 - r, 3) * std::sqrt(std::max(0.0, c * (c - fprime))) + kSlack) ++bad;
  }
  return bad;
}

/// (1 + rho)/(1 - rho) <= 9|z|/(2b) for |z| > 2b, |arg z - pi/2| <= pi/3.
inline std::size_t sector_violations(std::uint64_t seed, int cases) {
  Gen g(seed);
  std::size_t bad = 0;
  for (int trial = 0; trial < cases; ++trial) {
    const double b = g.uniform(0.01, 5.0);
    const double modulus = 2.0 * b * std::exp(g.uniform(1e-9, 5.0));
    const double arg = std::numbers::pi / 2.0 + g.uniform(-std::numbers::pi / 3.0, std::numbers::pi / 3.0);
    const Complex z = std::polar(modulus, arg);
    const double rho = loewner::pseudo_hyperbolic(z, Complex(0.0, b));
    if ((1.0 + rho) / (1.0 - rho) > 9.0 * std::abs(z) / (2.0 * b) + kSlack) ++bad;
  }
  return bad;
}

struct GrowthCounts {
  std::size_t samples = 0;
  std::size_t violations = 0;
};

/// Growth bound for p = sum_k -i M_k with M_k real Moebius self-maps of the
/// half-plane sending i to the imaginary axis, so Re p >= 0 and p(i) > 0.
inline GrowthCounts growth_violations(std::uint64_t seed, int cases) {
  using loewner::Jet;
  using loewner::kI;
  using loewner::MoebiusParams;
  Gen g(seed);
  GrowthCounts out;
  const int functions = 20;
  for (int trial = 0; trial < functions; ++trial) {
    std::vector<MoebiusParams> parts;
    const int n = g.integer(1, 3);
    for (int k = 0; k < n; ++k) {
      const double sign = g.integer(0, 1) == 0 ? 1.0 : -1.0;
      const double a = sign * g.uniform(0.1, 3.0), d = sign * g.uniform(0.1, 3.0), c = g.uniform(-3.0, 3.0);
      parts.push_back({a, -a * c / d, c, d, std::nullopt});
    }
    const Map p = Map::generic("p", loewner::Region::UpperHalfPlane, loewner::Region::Plane, [parts](Complex z) {
      Jet j{0.0, 0.0};
      for (const MoebiusParams& m : parts) {
        const Complex den = m.c * z + m.d;
        j.value += -kI * m(z);
        j.derivative += -kI * (m.a * m.d - m.b * m.c) / (den * den);
      }
      return j;
    });
    const std::size_t count = static_cast<std::size_t>(cases / functions + (trial < cases % functions ? 1 : 0));
    const loewner::GrowthCheck r = loewner::caratheodory_growth_check(p, kI, count, seed * 1000 + trial, kSlack);
    out.samples += r.samples;
    if (!r.pass) ++out.violations;
  }
  return out;
}

/// Largest |l(G1 o G2) - l(G1) - l(G2)| with numerically extrapolated capacities.
inline double additivity_defect(std::uint64_t seed, int pairs) {
  using loewner::SlitDirection;
  Gen g(seed);
  loewner::EllOptions numeric;
  numeric.use_tail = false;
  double worst = 0.0;
  for (int trial = 0; trial < pairs; ++trial) {
    const Map a = trial % 3 == 0 ? Map::slit_step(g.uniform(-1.0, 1.0), g.uniform(0.05, 1.0), SlitDirection::Erase)
                                 : random_measure_map(g);
    const Map b = random_measure_map(g);
    const double lhs = loewner::ell(compose(a, b), numeric).value;
    worst = std::max(worst, std::abs(lhs - loewner::ell(a, numeric).value - loewner::ell(b, numeric).value));
  }
  return worst;
}

/// |Phi_{s,t}(z) - Phi_{s,u}(z)| <= (t - u)/Im z over random drivings and s <= u <= t.
inline std::size_t capacity_bound_violations(std::uint64_t seed, int cases) {
  Gen g(seed);
  std::size_t bad = 0;
  for (int trial = 0; trial < cases; ++trial) {
    const loewner::DrivingFunction d = random_step_driving(g);
    double s = g.uniform(0.0, 1.0), u = g.uniform(0.0, 1.0), t = g.uniform(0.0, 1.0);
    if (s > u) std::swap(s, u);
    if (u > t) std::swap(u, t);
    if (s > u) std::swap(s, u);
    const Complex pts[] = {g.upper(3.0, 0.05, 3.0)};
    const Complex a = loewner::solve_phi(d, s, t, pts)[0], b = loewner::solve_phi(d, s, u, pts)[0];
    if (std::abs(a - b) > (t - u) / pts[0].imag() + kSlack) ++bad;
  }
  return bad;
}

}  // namespace suites
