#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loewner/ac_proxy.hpp"
#include "loewner/driving.hpp"
#include "loewner/geometry.hpp"

namespace loewner {

enum class DomainKind { ScaledDisks, TranslatedHalfPlanes, SlitHalfPlane, SpiralCutDisk };

std::string_view to_string(DomainKind k);

/// Nested family of simply connected domains Omega_t with a membership
/// predicate and a conformal-radius oracle.
class DomainFamily {
 public:
  /// gamma(t) * disk.
  static DomainFamily scaled_disks(std::function<double(double)> gamma, Complex basepoint = 0.0);
  /// {Im w > -c t}.
  static DomainFamily translated_half_planes(double c, Complex basepoint = kI);
  /// Phi_{t,T}(half-plane): the half-plane minus the hull grown over [t, T].
  static DomainFamily slit_half_plane(const DrivingFunction& driving, double horizon, Complex basepoint);
  /// disk minus the spiral C([t, inf)).  Membership only; no radius oracle.
  static DomainFamily spiral_cut_disk(Complex basepoint = 0.0);

  DomainKind kind() const { return kind_; }
  Complex basepoint() const { return basepoint_; }
  bool contains(double t, Complex w) const { return contains_(t, w); }
  /// r(Omega_t, w); throws OracleFailure when w is not in Omega_t or no oracle exists.
  double radius(double t, Complex w) const { return radius_(t, w); }
  double radius(double t) const { return radius_(t, basepoint_); }

  /// Driving and horizon of a slit family.
  const std::optional<DrivingFunction>& driving() const { return driving_; }
  double horizon() const { return horizon_; }

  /// Probe points of Omega_s that are missing from Omega_t for some s <= t on the grid.
  std::size_t nesting_violations(std::span<const double> grid, std::span<const Complex> probes) const;

 private:
  DomainKind kind_ = DomainKind::ScaledDisks;
  Complex basepoint_;
  std::function<bool(double, Complex)> contains_;
  std::function<double(double, Complex)> radius_;
  std::optional<DrivingFunction> driving_;
  double horizon_ = 0.0;
};

struct RadiusProfile {
  std::vector<std::pair<double, double>> samples;  ///< (t, mu)
  Complex basepoint;
  /// Largest decrease between consecutive samples (0 when nondecreasing).
  double monotonicity_defect() const;
  std::vector<double> values() const;
};

RadiusProfile radius_profile(const DomainFamily& fam, std::span<const double> grid, unsigned threads = 1);

/// Uniform grid of n intervals on [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

struct ChainReport {
  bool inclusion_chain = false;   ///< continuity proxy
  bool admissible = false;        ///< continuity and AC^d proxy
  double order = 1.0;
  double continuity_modulus = 0.0;  ///< max jump on the fine grid
  double monotonicity_defect = 0.0;
  AcProxyReport proxy;
};

/// Continuity proxy from two uniform profiles of the same interval (fine refines coarse).
ChainReport check_inclusion_chain(const RadiusProfile& coarse, const RadiusProfile& fine,
                                  const AcProxyOptions& options = {});
/// Continuity plus AC^d proxy.
ChainReport check_admissible(const RadiusProfile& coarse, const RadiusProfile& fine, double d,
                             const AcProxyOptions& options = {});
/// Samples the family on the coarse and fine grids of `options` and runs check_admissible.
ChainReport check_family(const DomainFamily& fam, double t0, double t1, double d, const AcProxyOptions& options = {},
                         unsigned threads = 1);

/// h(t) = inf{theta : mu(theta) = g(t)} from a sampled profile with linear
/// interpolation.  Throws RangeMismatch when g leaves the range of mu.
std::vector<std::pair<double, double>> reparametrize(const RadiusProfile& profile,
                                                     const std::function<double(double)>& g,
                                                     std::span<const double> grid, double tolerance = 1e-9);
/// Same, by bisection on the radius oracle over [0, theta_max].
std::vector<std::pair<double, double>> reparametrize(const DomainFamily& fam, const std::function<double(double)>& g,
                                                     std::span<const double> grid, double theta_max,
                                                     double tolerance = 1e-9);

/// Standard Cantor function by ternary expansion (depth 40).
double cantor_function(double x);
/// Scaled disks with gamma(t) = 1 + C(min(t, 1)).
DomainFamily cantor_family();

/// e^{i tau}(1 - 1/(tau + 2)).
Complex spiral_curve(double tau);

struct ChordalProbeReport {
  std::vector<std::pair<double, double>> derivatives;  ///< (t, phi'(1))
  bool all_parabolic = false;                          ///< every derivative within tolerance of 1
};

/// Boundary derivative at 1 of the Cayley conjugate of Phi_{0,t} for a slit family.
ChordalProbeReport chordal_admissibility_probe(const DomainFamily& fam, std::span<const double> times,
                                               double tolerance = 1e-4);

}  // namespace loewner
