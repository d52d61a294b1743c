#include "loewner/measure.hpp"

#include <cmath>
#include <string>

#include "loewner/error.hpp"
#include "loewner/quadrature.hpp"

namespace loewner {

double DensityPiece::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double DensityPiece::integral() const {
  double acc_hi = 0.0, acc_lo = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const double c = coeffs[k] / static_cast<double>(k + 1);
    acc_hi = acc_hi * hi + c;
    acc_lo = acc_lo * lo + c;
  }
  return acc_hi * hi - acc_lo * lo;
}

MeasureSpec::MeasureSpec(std::vector<Atom> atoms, std::vector<DensityPiece> density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
  double total = 0.0;
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.location) || !std::isfinite(a.mass) || !(a.mass > 0.0))
      fail(ErrorCode::InvalidArgument, "measure atoms need finite location and positive mass");
    total += a.mass;
  }
  for (const DensityPiece& p : density_) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || !(p.hi > p.lo))
      fail(ErrorCode::InvalidArgument, "density piece needs a bounded interval lo < hi");
    if (p.coeffs.empty()) fail(ErrorCode::InvalidArgument, "density piece has no coefficients");
    constexpr int kProbe = 64;
    for (int k = 0; k <= kProbe; ++k) {
      const double x = p.lo + (p.hi - p.lo) * k / kProbe;
      if (p(x) < -1e-14) fail(ErrorCode::InvalidArgument, "density is negative at x = " + std::to_string(x));
    }
    total += p.integral();
  }
  if (!std::isfinite(total)) fail(ErrorCode::InvalidArgument, "measure has infinite mass");
  total_mass_ = total;
}

double MeasureSpec::nevanlinna_offset() const {
  double acc = 0.0;
  for (const Atom& a : atoms_) acc += a.mass * a.location / (1.0 + a.location * a.location);
  const auto rule = gauss_legendre(64);
  for (const DensityPiece& p : density_) {
    const double half = 0.5 * (p.hi - p.lo), mid = 0.5 * (p.hi + p.lo);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = mid + half * rule.nodes[k];
      acc += half * rule.weights[k] * p(x) * x / (1.0 + x * x);
    }
  }
  return acc;
}

}  // namespace loewner
