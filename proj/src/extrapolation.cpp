#include "loewner/extrapolation.hpp"

#include <cmath>
#include <vector>

#include "loewner/error.hpp"

namespace loewner {

Extrapolated richardson(std::span<const Complex> samples, double ratio, int orders) {
  if (orders < 0 || samples.size() < static_cast<std::size_t>(orders) + 2)
    fail(ErrorCode::InvalidArgument, "richardson: need at least orders + 2 samples");
  if (!(ratio > 1.0)) fail(ErrorCode::InvalidArgument, "richardson: ratio must exceed 1");
  std::vector<Complex> table(samples.begin(), samples.end());
  for (int j = 1; j <= orders; ++j) {
    const double f = std::pow(ratio, j);
    std::vector<Complex> next;
    for (std::size_t k = 1; k < table.size(); ++k) next.push_back((f * table[k] - table[k - 1]) / (f - 1.0));
    table = std::move(next);
  }
  const std::size_t n = table.size();
  // The leftover term is of order `orders + 1`; the two last entries differ by
  // about (ratio^(orders+1) - 1) times the error of the final one.
  return {table[n - 1], std::abs(table[n - 1] - table[n - 2]) / (std::pow(ratio, orders + 1) - 1.0)};
}

}  // namespace loewner
