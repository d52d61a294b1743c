#pragma once

#include <vector>

#include "loewner/geometry.hpp"

namespace loewner {

struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

/// Polynomial density sum_k coeffs[k] x^k on [lo, hi].
struct DensityPiece {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> coeffs;

  double operator()(double x) const;
  double integral() const;
};

/// Finite positive measure on the real line: point masses plus an optional
/// piecewise-polynomial density with bounded support.
class MeasureSpec {
 public:
  MeasureSpec() = default;
  MeasureSpec(std::vector<Atom> atoms, std::vector<DensityPiece> density = {});

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityPiece>& density() const { return density_; }
  double total_mass() const { return total_mass_; }
  bool empty() const { return atoms_.empty() && density_.empty(); }

  /// Integral of x/(1+x^2) dmu, the real offset appearing in the Nevanlinna form.
  double nevanlinna_offset() const;

  static MeasureSpec delta(double x, double mass) { return MeasureSpec({{x, mass}}); }

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityPiece> density_;
  double total_mass_ = 0.0;
};

}  // namespace loewner
