#pragma once

#include <functional>
#include <span>
#include <string>

namespace loewner {

/// Thresholds of the grid-refinement proxy for absolute continuity with an
/// L^d derivative.  Every metric is computed on a coarse uniform grid and on
/// a grid `refinement` times finer; verdicts compare the two.
struct AcProxyOptions {
  std::size_t coarse_intervals = 1000;
  std::size_t refinement = 4;
  double concentration_ratio = 0.8;  ///< fail when the 90%-variation support shrinks below this factor
  double norm_ratio = 1.02;          ///< fail when the discrete L^d norm grows by more than this factor
  double max_fraction_ratio = 0.7;   ///< fail when the largest single-cell share decays slower than this
  double jump_ratio = 0.8;           ///< continuity passes when the largest jump shrinks by this factor
};

struct AcGridMetrics {
  double concentration = 0.0;  ///< length fraction of the fewest cells carrying 90% of the variation
  double norm = 0.0;           ///< discrete L^d norm of the difference quotients
  double max_fraction = 0.0;   ///< largest single-cell share of sum |D|^d h (finite d only)
  double max_jump = 0.0;
  double variation = 0.0;
};

struct AcProxyReport {
  AcGridMetrics coarse;
  AcGridMetrics fine;
  bool continuous = false;
  bool absolutely_continuous = false;  ///< AC with L^d derivative, in the proxy sense
  std::string reason;                  ///< first failing metric, empty on success
  bool admissible() const { return continuous && absolutely_continuous; }
};

AcGridMetrics ac_grid_metrics(std::span<const double> values, double length, double d);

/// Verdict from samples on two uniform grids of the same interval.
AcProxyReport ac_proxy_samples(std::span<const double> coarse, std::span<const double> fine, double length, double d,
                               const AcProxyOptions& options = {});

/// Proxy verdict for a monotone (or any real) function on [a, b]; d may be
/// infinity.  Non-certifying: a finite grid cannot prove absolute continuity.
AcProxyReport ac_proxy(const std::function<double(double)>& f, double a, double b, double d,
                       const AcProxyOptions& options = {});

}  // namespace loewner
