#include "loewner/geometry.hpp"

#include <cmath>
#include <string>

#include "loewner/error.hpp"

namespace loewner {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::UnitDisk:
      return "disk";
    case Region::UpperHalfPlane:
      return "half_plane";
    case Region::Plane:
      return "plane";
  }
  return "?";
}

Region region_from_string(std::string_view s) {
  if (s == "disk" || s == "D") return Region::UnitDisk;
  if (s == "half_plane" || s == "H") return Region::UpperHalfPlane;
  if (s == "plane" || s == "C") return Region::Plane;
  fail(ErrorCode::ParseError, "unknown region '" + std::string(s) + "'");
}

bool strictly_inside(Region r, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  switch (r) {
    case Region::UnitDisk:
      return std::abs(z) < 1.0;
    case Region::UpperHalfPlane:
      return z.imag() > 0.0;
    case Region::Plane:
      return true;
  }
  return false;
}

void require_finite(Complex z, std::string_view what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorCode::DomainError, std::string(what) + ": non-finite point");
}

Complex cayley(Complex z) {
  require_finite(z, "cayley");
  if (std::abs(z) >= 1.0 - 1e-14) fail(ErrorCode::DomainError, "cayley: |z| >= 1 - 1e-14");
  return kI * (1.0 + z) / (1.0 - z);
}

Complex cayley_derivative(Complex z) {
  const Complex d = 1.0 - z;
  return 2.0 * kI / (d * d);
}

Complex cayley_inverse(Complex w) {
  require_finite(w, "cayley_inverse");
  if (!(w.imag() > 0.0)) fail(ErrorCode::DomainError, "cayley_inverse: Im w <= 0");
  return (w - kI) / (w + kI);
}

Complex cayley_inverse_derivative(Complex w) {
  const Complex d = w + kI;
  return 2.0 * kI / (d * d);
}

Complex cayley_inverse_closed(Complex w) {
  require_finite(w, "cayley_inverse_closed");
  if (w.imag() < 0.0) fail(ErrorCode::DomainError, "cayley_inverse_closed: Im w < 0");
  return (w - kI) / (w + kI);
}

double pseudo_hyperbolic(Complex z, Complex w) {
  if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
    fail(ErrorCode::DomainError, "pseudo_hyperbolic: points must lie in the upper half-plane");
  return std::abs((z - w) / (z - std::conj(w)));
}

Complex half_plane_sqrt(Complex q, double sign_hint) {
  Complex r = std::sqrt(q);
  if (r.imag() < 0.0) {
    r = -r;
  } else if (r.imag() == 0.0 && sign_hint < 0.0) {
    r = -r;
  }
  if (r.imag() == 0.0) r = Complex(r.real(), 0.0);  // drop -0.0
  return r;
}

}  // namespace loewner
