#pragma once

#include <cstddef>
#include <span>

namespace loewner {

/// Gauss-Legendre rule on [-1, 1].  Rules are computed once per order and
/// cached for the lifetime of the process; the returned views stay valid.
struct GaussLegendreRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t order);

}  // namespace loewner
