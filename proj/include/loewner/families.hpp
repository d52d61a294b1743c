#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loewner/ac_proxy.hpp"
#include "loewner/driving.hpp"
#include "loewner/map.hpp"

namespace loewner {

/// Two-parameter family (s, t) -> phi_{s,t}.  `fixed_point` is the declared
/// Denjoy-Wolff point in disk coordinates; for half-plane families the point
/// 1 stands for infinity.
class FamilyHandle {
 public:
  using Maker = std::function<Map(double s, double t)>;

  /// Probes phi_{s,s} = id within 1e-12 at a few s unless `probe_ef1` is false;
  /// throws PreconditionFailed on violation.
  FamilyHandle(Maker maker, Region region, std::optional<Complex> fixed_point = std::nullopt, double order = 1.0,
               bool memoize = false, bool probe_ef1 = true);

  Map operator()(double s, double t) const;
  Region region() const { return region_; }
  const std::optional<Complex>& fixed_point() const { return fixed_point_; }
  double order() const { return order_; }
  /// phi_{s,t} on the disk (Cayley-conjugated for half-plane families).
  Map disk_map(double s, double t) const;

 private:
  struct Memo;
  Maker maker_;
  Region region_;
  std::optional<Complex> fixed_point_;
  double order_;
  std::shared_ptr<Memo> memo_;
};

/// One-parameter family t -> f_t of univalent maps from the disk into the plane.
struct ChainHandle {
  std::function<Map(double t)> maker;
  bool normalized = false;  ///< f_0(0) = 0 and f_0'(0) = 1 declared
  Map operator()(double t) const { return maker(t); }
};

struct Triple {
  double s, u, t;
};

struct EfOptions {
  double ef1_tolerance = 1e-12;
  double ef2_tolerance = 1e-7;
  std::size_t ef3_steps = 64;  ///< t-grid for the Lipschitz modulus on [0, max t]
};

struct EfReport {
  double ef1 = 0.0;
  double ef2 = 0.0;
  std::vector<double> ef3_modulus;  ///< per probe, max |phi_{0,t_{k+1}} - phi_{0,t_k}| / dt (proxy)
  bool ef1_pass = false;
  bool ef2_pass = false;
};

EfReport verify_ef_axioms(const FamilyHandle& fam, std::span<const Complex> probes, std::span<const Triple> triples,
                          const EfOptions& options = {});

struct AssociationReport {
  double residual = 0.0;          ///< max |f_t(phi_{s,t}(z)) - f_s(z)|
  std::size_t range_probe_failures = 0;  ///< f_s(z) without a disk preimage under f_t
};

/// `pairs` are (s, t) with s <= t; probes lie in the disk.
AssociationReport verify_chain_association(const ChainHandle& chain, const FamilyHandle& fam,
                                           std::span<const Complex> probes,
                                           std::span<const std::pair<double, double>> pairs,
                                           bool probe_ranges = false);

/// |phi'_{s,t}(z)| / (1 - |phi_{s,t}(z)|^2) on the disk side; s = 0 gives beta_t(z).
double beta(const FamilyHandle& fam, Complex z, double t, double s = 0.0);

struct BetaLimitOptions {
  double t0 = 1.0;
  double ratio = 4.0;
  int levels = 16;
  double plane_threshold = 1e-8;
};

struct BetaLimit {
  double value = 0.0;      ///< Aitken estimate of lim beta_t(z), clamped at 0
  bool plane = false;      ///< limit vanishes: the chain fills the plane
  std::vector<std::pair<double, double>> samples;
};

BetaLimit beta_limit(const FamilyHandle& fam, Complex z, const BetaLimitOptions& options = {});

/// 1/beta, or empty (the plane) when beta <= threshold.
std::optional<double> standard_range_radius(double beta_limit, double plane_threshold = 1e-8);

/// g_t(z) = h(beta f_t(z)) / beta; evaluation throws DomainEscape once beta f_t(z) leaves the disk.
ChainHandle alternate_chain(const ChainHandle& chain, const Map& h, double beta);

/// |f_{s0}'(z0)| / beta_{s0,t}(z0): conformal radius of f_t(disk) at f_{s0}(z0).
double conformal_radius_along_chain(const ChainHandle& chain, const FamilyHandle& fam, Complex z0, double t,
                                    double s0 = 0.0);

/// Nondecreasing real schedule with lambda(0) = 0, linear between knots and
/// constant after the last one.  Throws ScheduleInvalid.
class DerivativeSchedule {
 public:
  DerivativeSchedule(std::vector<Knot> knots, double order = 1.0);
  static DerivativeSchedule zero() { return DerivativeSchedule({{0.0, 0.0}}); }
  double operator()(double t) const;
  /// (e^lambda - 1)/(e^lambda + 1).
  double a(double t) const;
  double order() const { return order_; }
  const std::vector<Knot>& knots() const { return knots_; }

 private:
  std::vector<Knot> knots_;
  double order_;
};

/// phi_{s,t} = h_t^{-1} o psi_{s,t} o h_s with h_t(z) = tau l_{a(t)}(conj(tau) z),
/// giving boundary derivative exp(lambda(s) - lambda(t)) at tau.
FamilyHandle conjugate_family(const FamilyHandle& fam, const DerivativeSchedule& schedule, Complex tau);

struct GoryainovBaOptions {
  double horizon = 1.0;
  std::size_t grid = 32;       ///< v(t) table resolution
  std::size_t samples = 200;   ///< random (s, u, t, z) for the capacity bound
  std::uint64_t seed = 0;
  double slack = 1e-10;
  double order = 1.0;
  AcProxyOptions ac;
};

struct GoryainovBaReport {
  bool in_P0 = false;
  bool v_defined = false;
  std::vector<std::pair<double, double>> v_table;
  bool monotone = false;
  std::size_t bound_violations = 0;
  double worst_margin = 0.0;
  std::size_t bound_checks = 0;
  bool ac_proxy = false;
  std::string note;
};

GoryainovBaReport goryainov_ba_check(const FamilyHandle& fam, const GoryainovBaOptions& options = {});

struct LipschitzReport {
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
};

/// |psi_{s,t}(z) - psi_{s,u}(z)| <= (1+r)/(1-r) |b(t) - b(u)|, r = r_H(i b(s), z),
/// b(t) = Im psi_{0,t}(i), for a half-plane family with psi_{0,t}(i) on the imaginary axis.
LipschitzReport parabolic_lipschitz_check(const FamilyHandle& fam, double horizon, std::size_t samples,
                                          std::uint64_t seed, double slack = 1e-10);

namespace families {

FamilyHandle radial();                          ///< e^{s-t} z
ChainHandle radial_chain();                     ///< e^t z
FamilyHandle chordal(const DrivingFunction& driving, Region region = Region::UpperHalfPlane);
FamilyHandle translation(Region region = Region::UpperHalfPlane);  ///< w + i(t - s)
ChainHandle translation_chain();                ///< H(z) - i t
FamilyHandle broken();                          ///< l_{t-s}, violates the composition law
FamilyHandle scaled_radial();                   ///< c(s)/c(t) z with c(t) = 2 - e^{-t}
ChainHandle scaled_radial_chain();              ///< c(t) z
/// Phi_{t,T} o H: disk onto the half-plane minus the hull grown over [t, T].
ChainHandle slit_chain(const DrivingFunction& driving, double horizon);
/// fam(v(s), v(t)) for a nondecreasing clock v.
FamilyHandle reparametrized(const FamilyHandle& fam, std::function<double(double)> clock);

}  // namespace families

}  // namespace loewner
