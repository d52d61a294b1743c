#pragma once

#include <span>

#include "loewner/geometry.hpp"

namespace loewner {

struct Extrapolated {
  Complex value;
  /// Error estimate of `value`: the last difference scaled by the next order.
  double error = 0.0;
};

/// Richardson extrapolation of samples A(h_k) with h_k = h_0 / ratio^k,
/// ordered coarse to fine.  Eliminates the error terms h^1 ... h^orders and
/// needs at least orders + 2 samples.
Extrapolated richardson(std::span<const Complex> samples, double ratio, int orders = 2);

}  // namespace loewner
