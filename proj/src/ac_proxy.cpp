#include "loewner/ac_proxy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "loewner/error.hpp"

namespace loewner {

AcGridMetrics ac_grid_metrics(std::span<const double> values, double length, double d) {
  if (values.size() < 2) fail(ErrorCode::InvalidArgument, "ac_grid_metrics: need at least two samples");
  const std::size_t n = values.size() - 1;
  const double h = length / static_cast<double>(n);
  std::vector<double> dm(n);
  AcGridMetrics m;
  for (std::size_t k = 0; k < n; ++k) {
    dm[k] = std::abs(values[k + 1] - values[k]);
    m.variation += dm[k];
    m.max_jump = std::max(m.max_jump, dm[k]);
  }
  std::vector<double> sorted = dm;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double acc = 0.0;
  std::size_t count = 0;
  while (count < n && acc < 0.9 * m.variation) acc += sorted[count++];
  m.concentration = static_cast<double>(std::max<std::size_t>(count, 1)) / static_cast<double>(n);
  if (std::isinf(d)) {
    for (double x : dm) m.norm = std::max(m.norm, x / h);
    m.max_fraction = 0.0;
  } else {
    double total = 0.0, biggest = 0.0;
    for (double x : dm) {
      const double c = std::pow(x / h, d) * h;
      total += c;
      biggest = std::max(biggest, c);
    }
    m.norm = std::pow(total, 1.0 / d);
    m.max_fraction = biggest / std::max(total, 1e-300);
  }
  return m;
}

AcProxyReport ac_proxy(const std::function<double(double)>& f, double a, double b, double d,
                       const AcProxyOptions& options) {
  if (!(b > a)) fail(ErrorCode::InvalidArgument, "ac_proxy: need a < b");
  if (options.coarse_intervals < 2 || options.refinement < 2)
    fail(ErrorCode::InvalidArgument, "ac_proxy: grid too small");
  auto sample = [&](std::size_t n) {
    std::vector<double> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = f(a + (b - a) * static_cast<double>(k) / static_cast<double>(n));
    return v;
  };
  const std::size_t n0 = options.coarse_intervals, n1 = n0 * options.refinement;
  return ac_proxy_samples(sample(n0), sample(n1), b - a, d, options);
}

AcProxyReport ac_proxy_samples(std::span<const double> coarse, std::span<const double> fine, double length, double d,
                               const AcProxyOptions& options) {
  if (!(d >= 1.0)) fail(ErrorCode::InvalidArgument, "ac_proxy: exponent d must be >= 1");
  if (!(fine.size() > coarse.size())) fail(ErrorCode::InvalidArgument, "ac_proxy: fine grid must be finer");
  AcProxyReport r;
  r.coarse = ac_grid_metrics(coarse, length, d);
  r.fine = ac_grid_metrics(fine, length, d);

  const double scale = std::max(1.0, r.coarse.variation);
  r.continuous = r.fine.max_jump <= options.jump_ratio * r.coarse.max_jump || r.fine.max_jump <= 1e-12 * scale;

  r.absolutely_continuous = true;
  auto reject = [&](const char* why) {
    if (r.absolutely_continuous) r.reason = why;
    r.absolutely_continuous = false;
  };
  const bool flat = r.coarse.variation <= 1e-14 * scale;
  if (!flat) {
    if (r.fine.concentration < options.concentration_ratio * r.coarse.concentration)
      reject("variation concentrates on a shrinking set");
    if (r.fine.norm > options.norm_ratio * r.coarse.norm) reject("discrete L^d norm grows under refinement");
    if (!std::isinf(d) && r.fine.max_fraction > options.max_fraction_ratio * r.coarse.max_fraction)
      reject("single-cell share of the L^d mass does not decay");
  }
  if (!r.continuous && r.reason.empty()) r.reason = "largest jump does not shrink under refinement";
  return r;
}

}  // namespace loewner
