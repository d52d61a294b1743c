#include "loewner/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>

#include "loewner/chordal.hpp"
#include "loewner/error.hpp"
#include "loewner/function_classes.hpp"

namespace loewner {

struct FamilyHandle::Memo {
  std::mutex mutex;
  std::map<std::pair<double, double>, Map> cache;
};

FamilyHandle::FamilyHandle(Maker maker, Region region, std::optional<Complex> fixed_point, double order,
                           bool memoize, bool probe_ef1)
    : maker_(std::move(maker)), region_(region), fixed_point_(fixed_point), order_(order) {
  if (!maker_) fail(ErrorCode::InvalidArgument, "family needs a maker");
  if (region_ == Region::Plane) fail(ErrorCode::InvalidArgument, "family maps must act on the disk or half-plane");
  if (!(order_ >= 1.0)) fail(ErrorCode::InvalidArgument, "family order must lie in [1, inf]");
  if (memoize) memo_ = std::make_shared<Memo>();
  if (!probe_ef1) return;
  const Map id = maker_(0.0, 0.0);
  const std::vector<Complex> probes = region_ == Region::UnitDisk
                                          ? std::vector<Complex>{{0.0, 0.0}, {0.3, 0.2}, {-0.1, -0.5}, {0.7, 0.0}}
                                          : std::vector<Complex>{{0.0, 1.0}, {1.0, 2.0}, {-0.5, 0.3}, {3.0, 0.1}};
  for (const Complex& z : probes)
    if (std::abs(id(z) - z) > 1e-12) fail(ErrorCode::PreconditionFailed, "family violates phi_{s,s} = id at s = 0");
}

Map FamilyHandle::operator()(double s, double t) const {
  if (!(s <= t)) fail(ErrorCode::InvalidArgument, "family evaluated with s > t");
  if (!memo_) return maker_(s, t);
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->cache.find({s, t});
    if (it != memo_->cache.end()) return it->second;
  }
  Map m = maker_(s, t);
  std::lock_guard lock(memo_->mutex);
  return memo_->cache.emplace(std::make_pair(s, t), m).first->second;
}

Map FamilyHandle::disk_map(double s, double t) const {
  Map m = (*this)(s, t);
  return region_ == Region::UnitDisk ? m : conjugate_by_cayley(m);
}

EfReport verify_ef_axioms(const FamilyHandle& fam, std::span<const Complex> probes, std::span<const Triple> triples,
                          const EfOptions& options) {
  EfReport r;
  double t_max = 0.0;
  for (const Triple& tr : triples) {
    if (!(tr.s <= tr.u && tr.u <= tr.t)) fail(ErrorCode::InvalidArgument, "EF triples must satisfy s <= u <= t");
    t_max = std::max(t_max, tr.t);
    for (double x : {tr.s, tr.u, tr.t}) {
      const Map id = fam(x, x);
      for (const Complex& z : probes) r.ef1 = std::max(r.ef1, std::abs(id(z) - z));
    }
    const Map a = fam(tr.s, tr.u), b = fam(tr.u, tr.t), c = fam(tr.s, tr.t);
    for (const Complex& z : probes) r.ef2 = std::max(r.ef2, std::abs(b(a(z)) - c(z)));
  }
  r.ef3_modulus.assign(probes.size(), 0.0);
  if (t_max > 0.0 && options.ef3_steps > 0) {
    const double dt = t_max / static_cast<double>(options.ef3_steps);
    std::vector<Complex> prev(probes.begin(), probes.end());
    for (std::size_t k = 1; k <= options.ef3_steps; ++k) {
      const Map m = fam(0.0, dt * static_cast<double>(k));
      for (std::size_t j = 0; j < probes.size(); ++j) {
        const Complex v = m(probes[j]);
        r.ef3_modulus[j] = std::max(r.ef3_modulus[j], std::abs(v - prev[j]) / dt);
        prev[j] = v;
      }
    }
  }
  r.ef1_pass = r.ef1 <= options.ef1_tolerance;
  r.ef2_pass = r.ef2 <= options.ef2_tolerance;
  return r;
}

AssociationReport verify_chain_association(const ChainHandle& chain, const FamilyHandle& fam,
                                           std::span<const Complex> probes,
                                           std::span<const std::pair<double, double>> pairs, bool probe_ranges) {
  AssociationReport r;
  for (const auto& [s, t] : pairs) {
    const Map phi = fam.disk_map(s, t);
    const Map fs = chain(s), ft = chain(t);
    for (const Complex& z : probes) {
      const Complex w = fs(z);
      r.residual = std::max(r.residual, std::abs(ft(phi(z)) - w));
      if (!probe_ranges) continue;
      try {
        invert_numeric(ft, w, z);
      } catch (const Error&) {
        ++r.range_probe_failures;
      }
    }
  }
  return r;
}

double beta(const FamilyHandle& fam, Complex z, double t, double s) {
  if (!(std::abs(z) < 1.0)) fail(ErrorCode::DomainError, "beta needs a point of the unit disk");
  const Jet j = fam.disk_map(s, t).jet(z);
  return std::abs(j.derivative) / (1.0 - std::norm(j.value));
}

BetaLimit beta_limit(const FamilyHandle& fam, Complex z, const BetaLimitOptions& options) {
  if (options.levels < 3 || !(options.ratio > 1.0) || !(options.t0 > 0.0))
    fail(ErrorCode::InvalidArgument, "beta_limit needs >= 3 levels, ratio > 1 and t0 > 0");
  BetaLimit r;
  for (int k = 0; k < options.levels; ++k) {
    const double t = options.t0 * std::pow(options.ratio, k);
    r.samples.emplace_back(t, beta(fam, z, t));
    // Already at the underflow scale; later levels would only break the map.
    if (k >= 2 && r.samples.back().second < 1e-100) break;
  }
  const std::size_t n = r.samples.size();
  const double x0 = r.samples[n - 3].second, x1 = r.samples[n - 2].second, x2 = r.samples[n - 1].second;
  const double d1 = x1 - x0, d2 = x2 - x1, den = d2 - d1;
  double est = x2;
  if (std::abs(den) > 1e-300 && std::isfinite(den)) {
    const double aitken = x2 - d2 * d2 / den;
    if (std::isfinite(aitken)) est = aitken;
  }
  r.value = std::max(est, 0.0);
  r.plane = r.value <= options.plane_threshold;
  return r;
}

std::optional<double> standard_range_radius(double beta_limit, double plane_threshold) {
  if (!(beta_limit >= 0.0)) fail(ErrorCode::InvalidArgument, "beta limit must be nonnegative");
  if (beta_limit <= plane_threshold) return std::nullopt;
  return 1.0 / beta_limit;
}

ChainHandle alternate_chain(const ChainHandle& chain, const Map& h, double beta) {
  if (!(beta > 0.0)) fail(ErrorCode::InvalidArgument, "alternate chain needs beta > 0");
  if (h.domain() != Region::UnitDisk) fail(ErrorCode::InvalidArgument, "alternate chain needs h on the disk");
  ChainHandle g;
  g.normalized = chain.normalized;
  g.maker = [chain, h, beta](double t) {
    const Map f = chain(t);
    return Map::generic(
        "alternate", Region::UnitDisk, Region::Plane,
        [f, h, beta](Complex z) {
          const Jet jf = f.jet(z);
          const Complex w = beta * jf.value;
          if (!(std::abs(w) < 1.0))
            fail(ErrorCode::DomainEscape, "beta f_t(z) left the unit disk (|beta f_t| = " +
                                              std::to_string(std::abs(w)) + ")");
          const Jet jh = h.jet(w);
          return Jet{jh.value / beta, jh.derivative * jf.derivative};
        },
        true);
  };
  return g;
}

double conformal_radius_along_chain(const ChainHandle& chain, const FamilyHandle& fam, Complex z0, double t,
                                    double s0) {
  if (!(s0 <= t)) fail(ErrorCode::InvalidArgument, "conformal radius needs s0 <= t");
  const double df = std::abs(chain(s0).derivative(z0));
  return df / beta(fam, z0, t, s0);
}

DerivativeSchedule::DerivativeSchedule(std::vector<Knot> knots, double order)
    : knots_(std::move(knots)), order_(order) {
  if (knots_.empty() || knots_.front().t != 0.0)
    fail(ErrorCode::ScheduleInvalid, "schedule needs a first knot at t = 0");
  if (std::abs(knots_.front().lambda) > 1e-14) fail(ErrorCode::ScheduleInvalid, "schedule needs lambda(0) = 0");
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (!(knots_[k].t > knots_[k - 1].t)) fail(ErrorCode::ScheduleInvalid, "schedule knot times must increase");
    if (!std::isfinite(knots_[k].lambda) || knots_[k].lambda < knots_[k - 1].lambda)
      fail(ErrorCode::ScheduleInvalid, "schedule lambda must be nondecreasing");
  }
  if (!(order_ >= 1.0)) fail(ErrorCode::ScheduleInvalid, "schedule order must lie in [1, inf]");
}

double DerivativeSchedule::operator()(double t) const {
  if (t <= 0.0) return knots_.front().lambda;
  if (t >= knots_.back().t) return knots_.back().lambda;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t, [](double v, const Knot& k) { return v < k.t; });
  const Knot& b = *it;
  const Knot& a = *(it - 1);
  return a.lambda + (t - a.t) / (b.t - a.t) * (b.lambda - a.lambda);
}

double DerivativeSchedule::a(double t) const {
  const double e = std::exp((*this)(t));
  return std::isinf(e) ? 1.0 : (e - 1.0) / (e + 1.0);
}

FamilyHandle conjugate_family(const FamilyHandle& fam, const DerivativeSchedule& schedule, Complex tau) {
  if (std::abs(std::abs(tau) - 1.0) > 1e-12) fail(ErrorCode::InvalidArgument, "conjugation point must lie on the circle");
  if (!fam.fixed_point() || std::abs(*fam.fixed_point() - tau) > 1e-12)
    fail(ErrorCode::PreconditionFailed, "conjugate_family needs a family whose common fixed point is tau");
  const double theta = std::arg(tau);
  auto h = [theta](double a) { return compose(rotation(theta), compose(Map::disk_automorphism(a), rotation(-theta))); };
  auto maker = [fam, schedule, h](double s, double t) {
    const Map inner = h(schedule.a(s));
    const Map outer_inverse = h(-schedule.a(t));
    return compose(outer_inverse, compose(fam.disk_map(s, t), inner));
  };
  return FamilyHandle(maker, Region::UnitDisk, tau, std::max(fam.order(), schedule.order()));
}

GoryainovBaReport goryainov_ba_check(const FamilyHandle& fam, const GoryainovBaOptions& options) {
  if (fam.region() != Region::UpperHalfPlane) fail(ErrorCode::InvalidArgument, "Goryainov-Ba check needs a half-plane family");
  if (options.grid < 2 || !(options.horizon > 0.0)) fail(ErrorCode::InvalidArgument, "bad Goryainov-Ba grid");
  GoryainovBaReport r;
  const double T = options.horizon;
  r.in_P0 = is_P0(fam(0.0, T)).member;
  auto v = [&](double t) { return ell(fam(0.0, t)).value; };
  try {
    for (std::size_t k = 0; k <= options.grid; ++k) {
      const double t = T * static_cast<double>(k) / static_cast<double>(options.grid);
      r.v_table.emplace_back(t, v(t));
    }
    r.v_defined = true;
  } catch (const Error& e) {
    r.note = e.what();
    return r;
  }
  r.monotone = true;
  for (std::size_t k = 1; k < r.v_table.size(); ++k)
    if (r.v_table[k].second < r.v_table[k - 1].second - 1e-12) r.monotone = false;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0), xs(-3.0, 3.0), logy(std::log(0.05), std::log(3.0));
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < options.samples; ++k) {
    double a = T * unit(rng), b = T * unit(rng), c = T * unit(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const Complex z(xs(rng), std::exp(logy(rng)));
    const double bound = (v(c) - v(b)) / z.imag();
    const double margin = bound - std::abs(fam(a, c)(z) - fam(a, b)(z));
    r.worst_margin = std::min(r.worst_margin, margin);
    if (margin < -options.slack) ++r.bound_violations;
    ++r.bound_checks;
  }
  r.ac_proxy = ac_proxy(v, 0.0, T, options.order, options.ac).absolutely_continuous;
  return r;
}

LipschitzReport parabolic_lipschitz_check(const FamilyHandle& fam, double horizon, std::size_t samples,
                                          std::uint64_t seed, double slack) {
  if (fam.region() != Region::UpperHalfPlane) fail(ErrorCode::InvalidArgument, "Lipschitz check needs a half-plane family");
  auto b = [&](double t) {
    const Complex v = fam(0.0, t)(kI);
    if (std::abs(v.real()) > 1e-9 * std::max(1.0, std::abs(v)))
      fail(ErrorCode::PreconditionFailed, "phi_{0,t}(0) is not real for this family");
    return v.imag();
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0), xs(-3.0, 3.0), logy(std::log(0.05), std::log(5.0));
  LipschitzReport r;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    double s = horizon * unit(rng), u = horizon * unit(rng), t = horizon * unit(rng);
    if (s > u) std::swap(s, u);
    if (u > t) std::swap(u, t);
    if (s > u) std::swap(s, u);
    const Complex zeta(xs(rng), std::exp(logy(rng)));
    const double rho = pseudo_hyperbolic(Complex(0.0, b(s)), zeta);
    const double bound = (1.0 + rho) / (1.0 - rho) * std::abs(b(t) - b(u));
    const double margin = bound - std::abs(fam(s, t)(zeta) - fam(s, u)(zeta));
    r.worst_margin = std::min(r.worst_margin, margin);
    if (margin < -slack * std::max(1.0, bound)) ++r.violations;
    ++r.checks;
  }
  return r;
}

namespace families {

namespace {
Map plane_valued(Primitive p) { return Map::sequence({std::move(p)}, Region::UnitDisk, Region::Plane); }
double scale_clock(double t) { return 2.0 - std::exp(-t); }
}  // namespace

FamilyHandle radial() {
  return FamilyHandle([](double s, double t) { return Map::affine(std::exp(s - t), 0.0, Region::UnitDisk); },
                      Region::UnitDisk, Complex(0.0, 0.0), std::numeric_limits<double>::infinity());
}

ChainHandle radial_chain() {
  return {[](double t) { return plane_valued(prim::Affine{std::exp(t), 0.0}); }, true};
}

FamilyHandle chordal(const DrivingFunction& driving, Region region) {
  if (region == Region::UpperHalfPlane)
    return FamilyHandle([driving](double s, double t) { return evolution_operator(driving, s, t); },
                        Region::UpperHalfPlane, Complex(1.0, 0.0));
  return FamilyHandle([driving](double s, double t) { return conjugate_by_cayley(evolution_operator(driving, s, t)); },
                      Region::UnitDisk, Complex(1.0, 0.0));
}

FamilyHandle translation(Region region) {
  auto half = [](double s, double t) { return Map::affine(1.0, Complex(0.0, t - s), Region::UpperHalfPlane); };
  if (region == Region::UpperHalfPlane)
    return FamilyHandle(half, Region::UpperHalfPlane, Complex(1.0, 0.0), std::numeric_limits<double>::infinity());
  return FamilyHandle([half](double s, double t) { return conjugate_by_cayley(half(s, t)); }, Region::UnitDisk,
                      Complex(1.0, 0.0), std::numeric_limits<double>::infinity());
}

ChainHandle translation_chain() {
  return {[](double t) {
            return Map::sequence({prim::Cayley{}, prim::Affine{1.0, Complex(0.0, -t)}}, Region::UnitDisk,
                                 Region::Plane);
          },
          false};
}

FamilyHandle broken() {
  return FamilyHandle([](double s, double t) { return Map::disk_automorphism(t - s); }, Region::UnitDisk);
}

FamilyHandle scaled_radial() {
  return FamilyHandle(
      [](double s, double t) { return Map::affine(scale_clock(s) / scale_clock(t), 0.0, Region::UnitDisk); },
      Region::UnitDisk, Complex(0.0, 0.0), std::numeric_limits<double>::infinity());
}

ChainHandle scaled_radial_chain() {
  return {[](double t) { return plane_valued(prim::Affine{scale_clock(t), 0.0}); }, false};
}

ChainHandle slit_chain(const DrivingFunction& driving, double horizon) {
  if (!(horizon <= driving.horizon())) fail(ErrorCode::InvalidArgument, "slit chain horizon exceeds the driving horizon");
  return {[driving, horizon](double t) { return compose(evolution_operator(driving, t, horizon), Map::cayley()); },
          false};
}

FamilyHandle reparametrized(const FamilyHandle& fam, std::function<double(double)> clock) {
  return FamilyHandle([fam, clock](double s, double t) { return fam(clock(s), clock(t)); }, fam.region(),
                      fam.fixed_point(), fam.order());
}

}  // namespace families

}  // namespace loewner
