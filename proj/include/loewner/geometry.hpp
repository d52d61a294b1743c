#pragma once

#include <complex>
#include <string_view>

namespace loewner {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

enum class Region { UnitDisk, UpperHalfPlane, Plane };

std::string_view to_string(Region r);
Region region_from_string(std::string_view s);

/// True when z lies strictly inside r (finite components required).
bool strictly_inside(Region r, Complex z);

/// Throws DomainError unless z has finite components.
void require_finite(Complex z, std::string_view what);

/// Cayley map H(z) = i(1+z)/(1-z) from the unit disk onto the upper
/// half-plane.  Rejects |z| >= 1 - 1e-14.
Complex cayley(Complex z);
Complex cayley_derivative(Complex z);

/// H^{-1}(w) = (w - i)/(w + i).  Rejects Im w <= 0.
Complex cayley_inverse(Complex w);
Complex cayley_inverse_derivative(Complex w);

/// Boundary correspondence of H^{-1} on the closed half-plane (real x maps to
/// the unit circle).  Used where the formula is needed on the boundary.
Complex cayley_inverse_closed(Complex w);

/// Pseudo-hyperbolic distance |(z - w)/(z - conj w)| in the upper half-plane.
double pseudo_hyperbolic(Complex z, Complex w);

/// Square root landing in the closed upper half-plane.  When q is a positive
/// real number the two roots are both real; `sign_hint` (the real part of the
/// pre-image offset) selects the root continuous from the half-plane side.
Complex half_plane_sqrt(Complex q, double sign_hint = 1.0);

}  // namespace loewner
