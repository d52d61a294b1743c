#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loewner/geometry.hpp"
#include "loewner/measure.hpp"

namespace loewner {

/// Value and first derivative of a holomorphic map at one point.
struct Jet {
  Complex value;
  Complex derivative;
};

/// Exact asymptotics a z + b + c/z + o(1/z) at infinity of a half-plane map.
struct Tail {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
};

/// (a z + b)/(c z + d), optionally declared to be a self-map of the disk or
/// of the half-plane.
struct MoebiusParams {
  Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};
  std::optional<Region> self_map_of;

  /// Throws InvalidArgument when ad - bc vanishes or the self-map declaration
  /// does not send three boundary samples to the boundary within 1e-10.
  void validate() const;
  MoebiusParams inverse() const;
  Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
};

enum class SlitDirection {
  Erase,  ///< lambda + sqrt((w - lambda)^2 - 2 capacity): exact flow of dw/dt = 1/(lambda - w)
  Grow,   ///< lambda + sqrt((w - lambda)^2 + 2 capacity): inverse, unzips a vertical slit
};

struct QuadratureOptions {
  std::size_t initial_nodes = 32;
  std::size_t max_nodes_per_piece = 4096;
  std::size_t max_total_nodes = 1 << 16;
  double agreement = 1e-10;
};

namespace prim {

struct Affine {
  Complex a, b;
};
struct Moebius {
  MoebiusParams params;
};
struct Cayley {};
struct CayleyInverse {};
struct SlitStep {
  double lambda;
  double capacity;
  SlitDirection direction;
};
/// z + integral dmu(x)/(x - z)
struct MeasureIntegral {
  std::shared_ptr<const MeasureSpec> measure;
  QuadratureOptions quadrature;
};
/// beta z + alpha + integral (1/(x - z) - x/(1 + x^2)) dmu(x)
struct Nevanlinna {
  double beta;
  double alpha;
  std::shared_ptr<const MeasureSpec> measure;
  QuadratureOptions quadrature;
  double offset;  // cached integral of x/(1+x^2) dmu
};
/// (z - x)/(1 - conj(x) z)
struct DiskAutomorphism {
  Complex x;
};
struct Generic {
  std::string name;
  std::function<Jet(Complex)> fn;
  Region domain;
  Region codomain;
  bool assume_univalent;
};

}  // namespace prim

using Primitive = std::variant<prim::Affine, prim::Moebius, prim::Cayley, prim::CayleyInverse, prim::SlitStep,
                               prim::MeasureIntegral, prim::Nevanlinna, prim::DiskAutomorphism, prim::Generic>;

/// Propagates a jet through one primitive (chain rule applied by the caller).
Jet apply_primitive(const Primitive& p, Complex z);

/// Immutable composable holomorphic map.  Internally a flat sequence of
/// primitives applied first-to-last, so every grouping of a composition
/// evaluates bit-identically.  Copies share storage.
class Map {
 public:
  /// Identity on the upper half-plane.
  Map();

  static Map identity(Region domain);
  static Map affine(Complex a, Complex b, Region domain = Region::UpperHalfPlane);
  static Map moebius(const MoebiusParams& params, Region domain = Region::Plane);
  static Map cayley();
  static Map cayley_inverse();
  static Map slit_step(double lambda, double capacity, SlitDirection direction);
  static Map disk_automorphism(Complex x);
  static Map measure_integral(MeasureSpec measure, QuadratureOptions quadrature = {});
  static Map nevanlinna(double beta, double alpha, MeasureSpec measure, QuadratureOptions quadrature = {});
  static Map generic(std::string name, Region domain, Region codomain, std::function<Jet(Complex)> fn,
                     bool assume_univalent = false);
  /// Builds a map from a primitive sequence (first element applied first).
  /// Half-plane maps get their tail folded from the steps unless one is given.
  static Map sequence(std::vector<Primitive> steps, Region domain, Region codomain,
                      std::optional<Tail> tail = std::nullopt);

  Complex operator()(Complex z) const { return jet(z).value; }
  Complex derivative(Complex z) const { return jet(z).derivative; }
  /// Rejects points not strictly inside domain() with DomainError.
  Jet jet(Complex z) const;

  Region domain() const { return data_->domain; }
  Region codomain() const { return data_->codomain; }
  const std::optional<Tail>& tail() const { return data_->tail; }
  std::span<const Primitive> steps() const { return data_->steps; }
  bool is_identity() const { return data_->steps.empty(); }
  /// False when the map contains a generic callable that was not declared univalent.
  bool univalent_by_construction() const;

  friend Map compose(const Map& outer, const Map& inner);

 private:
  struct Data {
    std::vector<Primitive> steps;
    Region domain = Region::UpperHalfPlane;
    Region codomain = Region::UpperHalfPlane;
    std::optional<Tail> tail;
  };
  explicit Map(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// outer ∘ inner.  Adjacent Cayley / inverse-Cayley pairs at the junction
/// cancel, so the flattened sequence is a reduced word and every grouping of
/// a composition yields the same steps.
Map compose(const Map& outer, const Map& inner);

/// Composes f_1 ∘ f_2 ∘ ... ∘ f_n (first argument outermost).
Map compose_all(std::span<const Map> maps);

/// Tail of outer ∘ inner when both tails are known and inner fixes infinity.
std::optional<Tail> compose_tails(const std::optional<Tail>& outer, const std::optional<Tail>& inner);

/// H ∘ m ∘ H^{-1} for a disk map, H^{-1} ∘ m ∘ H for a half-plane map.
Map conjugate_by_cayley(const Map& m);

/// Rotation z -> e^{i theta} z of the unit disk.
Map rotation(double theta);

struct InvertOptions {
  int max_iterations = 100;
  double tolerance = 1e-12;
  double min_derivative = 1e-14;
};

/// Solves m(z) = w by damped Newton iteration from `seed`; the iterates are
/// kept inside m.domain().  Throws NoConvergence or DerivativeVanishes.
Complex invert_numeric(const Map& m, Complex w, Complex seed, const InvertOptions& options = {});

}  // namespace loewner
