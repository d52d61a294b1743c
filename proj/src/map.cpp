#include "loewner/map.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "loewner/error.hpp"
#include "loewner/quadrature.hpp"

namespace loewner {
namespace {

struct Pair {
  Complex first;   // integral rho(x)/(x - z)
  Complex second;  // integral rho(x)/(x - z)^2
};

Pair gauss_pass(const DensityPiece& piece, Complex z, std::size_t order) {
  const auto rule = gauss_legendre(order);
  const double half = 0.5 * (piece.hi - piece.lo), mid = 0.5 * (piece.hi + piece.lo);
  Pair acc{};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = mid + half * rule.nodes[k];
    const Complex inv = 1.0 / (x - z);
    const double w = half * rule.weights[k] * piece(x);
    acc.first += w * inv;
    acc.second += w * inv * inv;
  }
  return acc;
}

// Doubles the node count until two consecutive passes agree.
Pair density_integrals(const MeasureSpec& mu, Complex z, const QuadratureOptions& q) {
  Pair total{};
  for (const DensityPiece& piece : mu.density()) {
    std::size_t order = q.initial_nodes;
    Pair prev = gauss_pass(piece, z, order);
    for (;;) {
      if (2 * order > q.max_nodes_per_piece)
        fail(ErrorCode::QuadratureBudget,
             "density quadrature did not settle within " + std::to_string(q.max_nodes_per_piece) + " nodes");
      order *= 2;
      const Pair next = gauss_pass(piece, z, order);
      const bool ok1 = std::abs(next.first - prev.first) <= q.agreement * (1.0 + std::abs(next.first));
      const bool ok2 = std::abs(next.second - prev.second) <= q.agreement * (1.0 + std::abs(next.second));
      prev = next;
      if (ok1 && ok2) break;
    }
    total.first += prev.first;
    total.second += prev.second;
  }
  return total;
}

Pair measure_integrals(const MeasureSpec& mu, Complex z, const QuadratureOptions& q) {
  Pair acc{};
  for (const Atom& a : mu.atoms()) {
    const Complex inv = 1.0 / (a.location - z);
    acc.first += a.mass * inv;
    acc.second += a.mass * inv * inv;
  }
  if (!mu.density().empty()) {
    const Pair d = density_integrals(mu, z, q);
    acc.first += d.first;
    acc.second += d.second;
  }
  return acc;
}

void check_quadrature_budget(const MeasureSpec& mu, const QuadratureOptions& q) {
  if (q.initial_nodes < 2) fail(ErrorCode::InvalidArgument, "quadrature needs at least 2 initial nodes");
  if (mu.density().size() * q.initial_nodes * 2 > q.max_total_nodes)
    fail(ErrorCode::QuadratureBudget, "density has " + std::to_string(mu.density().size()) +
                                          " pieces, exceeding the configured node limit");
}

struct JetVisitor {
  Complex z;

  Jet operator()(const prim::Affine& p) const { return {p.a * z + p.b, p.a}; }
  Jet operator()(const prim::Moebius& p) const {
    const auto& m = p.params;
    const Complex den = m.c * z + m.d;
    return {(m.a * z + m.b) / den, (m.a * m.d - m.b * m.c) / (den * den)};
  }
  Jet operator()(const prim::Cayley&) const { return {cayley(z), cayley_derivative(z)}; }
  Jet operator()(const prim::CayleyInverse&) const { return {cayley_inverse(z), cayley_inverse_derivative(z)}; }
  Jet operator()(const prim::SlitStep& p) const {
    const Complex u = z - p.lambda;
    const double sign = (p.direction == SlitDirection::Erase) ? -2.0 : 2.0;
    const Complex s = half_plane_sqrt(u * u + sign * p.capacity, u.real());
    return {p.lambda + s, u / s};
  }
  Jet operator()(const prim::MeasureIntegral& p) const {
    const Pair in = measure_integrals(*p.measure, z, p.quadrature);
    return {z + in.first, 1.0 + in.second};
  }
  Jet operator()(const prim::Nevanlinna& p) const {
    const Pair in = measure_integrals(*p.measure, z, p.quadrature);
    return {p.beta * z + p.alpha + in.first - p.offset, p.beta + in.second};
  }
  Jet operator()(const prim::DiskAutomorphism& p) const {
    const Complex den = 1.0 - std::conj(p.x) * z;
    return {(z - p.x) / den, (1.0 - std::norm(p.x)) / (den * den)};
  }
  Jet operator()(const prim::Generic& p) const {
    if (!strictly_inside(p.domain, z))
      fail(ErrorCode::DomainError, "generic map '" + p.name + "' evaluated outside its domain");
    return p.fn(z);
  }
};

std::optional<Tail> primitive_tail(const Primitive& p) {
  if (const auto* a = std::get_if<prim::Affine>(&p)) return Tail{a->a, a->b, 0.0};
  if (const auto* m = std::get_if<prim::Moebius>(&p)) {
    const auto& q = m->params;
    if (q.c == Complex(0.0, 0.0)) return Tail{q.a / q.d, q.b / q.d, 0.0};
    return Tail{0.0, q.a / q.c, (q.b * q.c - q.a * q.d) / (q.c * q.c)};
  }
  if (const auto* s = std::get_if<prim::SlitStep>(&p))
    return Tail{1.0, 0.0, s->direction == SlitDirection::Erase ? -s->capacity : s->capacity};
  if (const auto* mi = std::get_if<prim::MeasureIntegral>(&p)) return Tail{1.0, 0.0, -mi->measure->total_mass()};
  if (const auto* n = std::get_if<prim::Nevanlinna>(&p)) {
    if (n->beta > 0.0) return Tail{n->beta, n->alpha - n->offset, -n->measure->total_mass()};
  }
  return std::nullopt;
}

std::optional<Tail> fold_tails(std::span<const Primitive> steps) {
  std::optional<Tail> acc = Tail{};
  for (const Primitive& p : steps) {
    acc = compose_tails(primitive_tail(p), acc);
    if (!acc) return std::nullopt;
  }
  return acc;
}

// H followed by H^{-1} (or the reverse) is the identity on the relevant domain.
bool cancels(const Primitive& first, const Primitive& second) {
  return (std::holds_alternative<prim::Cayley>(first) && std::holds_alternative<prim::CayleyInverse>(second)) ||
         (std::holds_alternative<prim::CayleyInverse>(first) && std::holds_alternative<prim::Cayley>(second));
}

bool compatible(Region outer_domain, Region inner_codomain) {
  return outer_domain == inner_codomain || outer_domain == Region::Plane || inner_codomain == Region::Plane;
}

}  // namespace

void MoebiusParams::validate() const {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(std::abs(a * d - b * c) > 1e-14 * scale * scale))
    fail(ErrorCode::InvalidArgument, "Moebius map is degenerate (ad - bc = 0)");
  if (!self_map_of) return;
  if (*self_map_of == Region::UpperHalfPlane) {
    for (double x : {-1.7, 0.3, 2.9}) {
      const Complex den = c * x + d;
      if (std::abs(den) < 1e-12) continue;
      const Complex v = (a * x + b) / den;
      if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v)))
        fail(ErrorCode::InvalidArgument, "declared half-plane self-map does not preserve the real line");
    }
    if (!(((*this)(kI)).imag() > 0.0))
      fail(ErrorCode::InvalidArgument, "declared half-plane self-map does not map i into the half-plane");
  } else if (*self_map_of == Region::UnitDisk) {
    for (double th : {0.4, 2.1, 4.4}) {
      const Complex v = (*this)(std::polar(1.0, th));
      if (std::abs(std::abs(v) - 1.0) > 1e-10)
        fail(ErrorCode::InvalidArgument, "declared disk self-map does not preserve the unit circle");
    }
    if (!(std::abs((*this)(Complex(0.0, 0.0))) < 1.0))
      fail(ErrorCode::InvalidArgument, "declared disk self-map does not map 0 into the disk");
  }
}

MoebiusParams MoebiusParams::inverse() const { return {d, -b, -c, a, self_map_of}; }

Jet apply_primitive(const Primitive& p, Complex z) { return std::visit(JetVisitor{z}, p); }

Map::Map() : data_(std::make_shared<const Data>()) {}

Map Map::identity(Region domain) { return sequence({}, domain, domain); }

Map Map::affine(Complex a, Complex b, Region domain) {
  if (a == Complex(0.0, 0.0)) fail(ErrorCode::InvalidArgument, "affine map needs a != 0");
  return sequence({prim::Affine{a, b}}, domain, domain);
}

Map Map::moebius(const MoebiusParams& params, Region domain) {
  params.validate();
  const Region dom = params.self_map_of.value_or(domain);
  return sequence({prim::Moebius{params}}, dom, params.self_map_of.value_or(Region::Plane));
}

Map Map::cayley() { return sequence({prim::Cayley{}}, Region::UnitDisk, Region::UpperHalfPlane, std::nullopt); }

Map Map::cayley_inverse() {
  return sequence({prim::CayleyInverse{}}, Region::UpperHalfPlane, Region::UnitDisk);
}

Map Map::slit_step(double lambda, double capacity, SlitDirection direction) {
  if (!std::isfinite(lambda) || !std::isfinite(capacity) || capacity < 0.0)
    fail(ErrorCode::InvalidArgument, "slit step needs finite lambda and capacity >= 0");
  return sequence({prim::SlitStep{lambda, capacity, direction}}, Region::UpperHalfPlane, Region::UpperHalfPlane);
}

Map Map::disk_automorphism(Complex x) {
  if (!(std::abs(x) < 1.0)) fail(ErrorCode::InvalidArgument, "disk automorphism needs |x| < 1");
  return sequence({prim::DiskAutomorphism{x}}, Region::UnitDisk, Region::UnitDisk);
}

Map Map::measure_integral(MeasureSpec measure, QuadratureOptions quadrature) {
  check_quadrature_budget(measure, quadrature);
  return sequence({prim::MeasureIntegral{std::make_shared<const MeasureSpec>(std::move(measure)), quadrature}},
                  Region::UpperHalfPlane, Region::UpperHalfPlane);
}

Map Map::nevanlinna(double beta, double alpha, MeasureSpec measure, QuadratureOptions quadrature) {
  if (!(beta >= 0.0) || !std::isfinite(beta) || !std::isfinite(alpha))
    fail(ErrorCode::InvalidArgument, "Nevanlinna map needs finite beta >= 0 and finite alpha");
  check_quadrature_budget(measure, quadrature);
  const double offset = measure.nevanlinna_offset();
  return sequence({prim::Nevanlinna{beta, alpha, std::make_shared<const MeasureSpec>(std::move(measure)), quadrature,
                                    offset}},
                  Region::UpperHalfPlane, Region::UpperHalfPlane);
}

Map Map::generic(std::string name, Region domain, Region codomain, std::function<Jet(Complex)> fn,
                 bool assume_univalent) {
  if (!fn) fail(ErrorCode::InvalidArgument, "generic map needs a callable");
  return sequence({prim::Generic{std::move(name), std::move(fn), domain, codomain, assume_univalent}}, domain,
                  codomain);
}

Map Map::sequence(std::vector<Primitive> steps, Region domain, Region codomain, std::optional<Tail> tail) {
  auto data = std::make_shared<Data>();
  data->steps = std::move(steps);
  data->domain = domain;
  data->codomain = codomain;
  if (domain == Region::UpperHalfPlane) data->tail = tail ? tail : fold_tails(data->steps);
  return Map(std::move(data));
}

Jet Map::jet(Complex z) const {
  if (!strictly_inside(data_->domain, z))
    fail(ErrorCode::DomainError, "evaluation point outside the open " + std::string(to_string(data_->domain)));
  Jet acc{z, Complex(1.0, 0.0)};
  for (const Primitive& p : data_->steps) {
    const Jet step = apply_primitive(p, acc.value);
    acc.value = step.value;
    acc.derivative = step.derivative * acc.derivative;
  }
  return acc;
}

bool Map::univalent_by_construction() const {
  for (const Primitive& p : data_->steps) {
    if (const auto* g = std::get_if<prim::Generic>(&p); g && !g->assume_univalent) return false;
  }
  return true;
}

std::optional<Tail> compose_tails(const std::optional<Tail>& outer, const std::optional<Tail>& inner) {
  if (!outer || !inner) return std::nullopt;
  if (inner->a == Complex(0.0, 0.0)) return std::nullopt;
  return Tail{outer->a * inner->a, outer->a * inner->b + outer->b, outer->a * inner->c + outer->c / inner->a};
}

Map compose(const Map& outer, const Map& inner) {
  if (!compatible(outer.domain(), inner.codomain()))
    fail(ErrorCode::InvalidArgument, "cannot compose: inner codomain " + std::string(to_string(inner.codomain())) +
                                         " does not match outer domain " + std::string(to_string(outer.domain())));
  std::vector<Primitive> steps(inner.steps().begin(), inner.steps().end());
  for (const Primitive& p : outer.steps()) {
    if (!steps.empty() && cancels(steps.back(), p)) {
      steps.pop_back();
      continue;
    }
    steps.push_back(p);
  }
  return Map::sequence(std::move(steps), inner.domain(), outer.codomain());
}

Map compose_all(std::span<const Map> maps) {
  if (maps.empty()) return Map();
  Map acc = maps.back();
  for (std::size_t k = maps.size() - 1; k-- > 0;) acc = compose(maps[k], acc);
  return acc;
}

Map conjugate_by_cayley(const Map& m) {
  if (m.domain() == Region::UnitDisk) return compose(Map::cayley(), compose(m, Map::cayley_inverse()));
  if (m.domain() == Region::UpperHalfPlane) return compose(Map::cayley_inverse(), compose(m, Map::cayley()));
  fail(ErrorCode::InvalidArgument, "conjugate_by_cayley needs a disk or half-plane map");
}

Map rotation(double theta) { return Map::affine(std::polar(1.0, theta), 0.0, Region::UnitDisk); }

Complex invert_numeric(const Map& m, Complex w, Complex seed, const InvertOptions& options) {
  if (!strictly_inside(m.domain(), seed)) fail(ErrorCode::DomainError, "invert_numeric: seed outside the domain");
  Complex z = seed;
  const double target = options.tolerance * (1.0 + std::abs(w));
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Jet j = m.jet(z);
    const Complex residual = j.value - w;
    if (std::abs(residual) <= target) return z;
    if (std::abs(j.derivative) < options.min_derivative)
      fail(ErrorCode::DerivativeVanishes, "invert_numeric: |m'| below threshold at an iterate");
    Complex step = residual / j.derivative;
    // Damp the step until the iterate stays inside the domain.
    for (int k = 0; k < 60 && !strictly_inside(m.domain(), z - step); ++k) step *= 0.5;
    z -= step;
  }
  const Complex residual = m(z) - w;
  if (std::abs(residual) <= target) return z;
  fail(ErrorCode::NoConvergence, "invert_numeric: no convergence after " + std::to_string(options.max_iterations) +
                                     " iterations");
}

}  // namespace loewner
