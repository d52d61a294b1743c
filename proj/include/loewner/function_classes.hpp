#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loewner/map.hpp"

namespace loewner {

/// Geometric sampling ray iy with y_k = y_max / ratio^(levels-1-k).
struct LimitOptions {
  double y_max = 1000.0;
  double ratio = 4.0;
  int levels = 4;
  double tolerance = 1e-6;  ///< Unstable once the extrapolants differ by more than 10x this
};

struct LimitEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// lim f(iy)/(iy) as y -> infinity.
LimitEstimate angular_derivative_at_infinity(const Map& f, const LimitOptions& options = {});

struct EllOptions {
  LimitOptions limit;
  bool use_tail = true;               ///< return the exact tail coefficient when the map carries one
  double divergence_exponent = 0.5;   ///< Diverging when |y(y - ... )| grows faster than y^this
};

/// lim z(z - G(z)) along the imaginary axis.  Extrapolates Re z(z - G(z)) in
/// powers of 1/y^2, which assumes a compactly supported representing measure.
LimitEstimate ell(const Map& g, const EllOptions& options = {});

struct P0Options {
  double y_min = 1e-2;
  double y_max = 1e4;
  std::size_t points = 61;
  double gap_decay = 0.2;  ///< |F(iy) - iy| must shrink by this factor over the last two decades
};

/// Numerical proxy for the class of half-plane self-maps with
/// F(iy) - iy -> 0 and sup_y y (Im F(iy) - y) finite.  Non-certifying.
struct P0Report {
  bool member = false;
  double sup = 0.0;         ///< largest sampled y (Im F(iy) - y)
  double final_gap = 0.0;   ///< |F(iy) - iy| at y_max
  double confidence = 0.0;  ///< in [0, 1]; low values flag an inconclusive grid
  std::string reason;
};

P0Report is_P0(const Map& g, const P0Options& options = {});

/// z + integral dmu(x)/(x - z).
Map build_from_measure(const MeasureSpec& mu, const QuadratureOptions& quadrature = {});
/// beta z + alpha + integral (1/(x - z) - x/(1 + x^2)) dmu(x).
Map build_nevanlinna(double beta, double alpha, const MeasureSpec& mu, const QuadratureOptions& quadrature = {});

struct ClassCResult {
  bool member = false;
  double derivative = 0.0;  ///< phi'(1); infinity when not a member
  bool in_C0 = false;       ///< member with phi'(1) <= 1
  double half_plane_derivative = 0.0;  ///< angular derivative at infinity of H o phi o H^{-1}
  double error = 0.0;
};

/// Regular contact point test at 1 for a disk self-map.
ClassCResult class_C_check(const Map& phi, const LimitOptions& options = {});

struct CtildeOptions {
  std::vector<double> radii{1e2, 1e3, 1e4};
  std::size_t rays = 5;           ///< equally spaced arguments in [pi/6, 5pi/6]
  double imag_tolerance = 1e-6;   ///< bound on |Im b|
  double residual_tolerance = 1e-6;
};

struct CtildeResult {
  bool member = false;
  Tail tail;
  double residual = 0.0;
};

/// Fits H o phi o H^{-1} = a w + b + c/w + d/w^2 + e/w^3 by least squares on
/// Stolz-cone samples; member iff a > 0 and b is real.  Throws FitResidual.
CtildeResult class_Ctilde_check(const Map& phi, const CtildeOptions& options = {});

struct DiskEllOptions {
  double h0 = 0.1;
  double ratio = 4.0;
  int levels = 4;
  double tolerance = 1e-5;
};

/// Coefficient c of phi(z) = z - c (z - 1)^3 / 4 + ... along the radius to 1.
/// Throws PreconditionFailed when c is not a nonnegative real number.
LimitEstimate disk_ell_from_expansion(const Map& phi, const DiskEllOptions& options = {});

struct BurnsKrantzResult {
  bool applicable = false;  ///< ell within 1e-9 of zero
  double ell = 0.0;
  double sup_deviation = 0.0;
};

/// If ell(phi) vanishes, asserts phi = id on a 100-point grid of radius <= 0.95.
/// Throws RigidityViolation when the deviation exceeds `identity_tolerance`.
BurnsKrantzResult burns_krantz_check(const Map& phi, double identity_tolerance = 1e-8);

struct GrowthCheck {
  bool pass = true;
  double worst_margin = 0.0;  ///< min over samples of bound - |p(z)|
  std::size_t samples = 0;
};

/// |p(z)| <= p(z0) (1 + r)/(1 - r) with r the pseudo-hyperbolic distance, for
/// p with nonnegative real part and p(z0) real positive.
GrowthCheck caratheodory_growth_check(const Map& p, Complex z0, std::span<const Complex> points,
                                      double slack = 1e-10);
/// Same on `count` random half-plane points drawn from a seeded generator.
GrowthCheck caratheodory_growth_check(const Map& p, Complex z0, std::size_t count, std::uint64_t seed,
                                      double slack = 1e-10);

struct ClassReport {
  std::optional<double> angular_derivative_infinity;  ///< empty when the estimate is unstable
  std::optional<double> ell;                          ///< empty when undefined (diverging)
  bool in_P = false;
  bool in_P0 = false;
  bool c_conjugate = false;
  bool ctilde_conjugate = false;
  std::optional<Tail> tail;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> notes;
};

/// Runs every estimator on a half-plane map (disk maps are conjugated first).
ClassReport classify(const Map& m);

}  // namespace loewner
