#include <cmath>
#include <vector>

#include "doctest.h"
#include "loewner/chordal.hpp"
#include "loewner/error.hpp"
#include "loewner/function_classes.hpp"
#include "support.hpp"

using namespace loewner;
using support::Gen;

namespace {

Map from_atoms(std::vector<Atom> atoms) { return build_from_measure(MeasureSpec(std::move(atoms))); }

Map slit(double capacity) { return Map::slit_step(0.0, capacity, SlitDirection::Erase); }

EllOptions numeric_only() {
  EllOptions o;
  o.use_tail = false;
  return o;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("angular derivative at infinity") {
  CHECK(angular_derivative_at_infinity(Map::affine(2.0, kI)).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(angular_derivative_at_infinity(from_atoms({{0.0, 1.0}})).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(angular_derivative_at_infinity(slit(1.0)).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("half-plane capacity") {
  CHECK(ell(from_atoms({{0.0, 0.7}})).value == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(ell(from_atoms({{0.0, 0.7}}), numeric_only()).value == doctest::Approx(0.7).epsilon(1e-9));
  const Map phi = evolution_operator(DrivingFunction::constant(0.0, 1.0), 0.0, 1.0);
  CHECK(std::abs(ell(phi, numeric_only()).value - 1.0) <= 1e-4);
  CHECK(code_of([] { ell(Map::affine(1.0, kI)); }) == ErrorCode::Diverging);
  CHECK(code_of([] { ell(Map::affine(1.0, kI), numeric_only()); }) == ErrorCode::Diverging);
}

TEST_CASE("capacity of random measures equals their mass") {
  Gen g(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Atom> atoms;
    const int n = g.integer(1, 5);
    for (int k = 0; k < n; ++k) atoms.push_back({g.uniform(-2.0, 2.0), g.uniform(0.01, 1.0)});
    const MeasureSpec mu(atoms);
    const Map F = build_from_measure(mu);
    CHECK(std::abs(ell(F, numeric_only()).value - mu.total_mass()) <= 1e-6);
    CHECK(std::abs(ell(F).value - mu.total_mass()) <= 1e-12);
  }
  // Densities go through the quadrature path.
  const MeasureSpec smooth({}, {{-1.0, 1.0, {1.0, 0.0, -1.0}}});
  CHECK(std::abs(ell(build_from_measure(smooth), numeric_only()).value - 4.0 / 3.0) <= 1e-6);
}

TEST_CASE("measure maps") {
  const Map F = from_atoms({{1.0, 1.0}});
  CHECK(std::abs(F(Complex(0.0, 2.0)) - Complex(0.2, 2.4)) < 1e-15);
  const Map G = from_atoms({{0.0, 0.5}});
  const Complex z(0.3, 0.9);
  CHECK(std::abs(G(z) - (z - 0.5 / z)) < 1e-15);
  CHECK(std::abs(G.derivative(z) - (1.0 + 0.5 / (z * z))) < 1e-14);
  // Quadrature: density x^2 on [0, 1] against the closed-form Stieltjes integral.
  const Map D = build_from_measure(MeasureSpec({}, {{0.0, 1.0, {0.0, 0.0, 1.0}}}));
  const Complex w(0.4, 0.2);
  const Complex exact = -(w * w * std::log((1.0 - w) / (-w)) + w + 0.5);
  CHECK(std::abs(D(w) - (w - exact)) < 1e-10);
}

TEST_CASE("Nevanlinna maps") {
  const Map inv = build_nevanlinna(0.0, 0.0, MeasureSpec({{0.0, 1.0}}));
  CHECK(std::abs(inv(kI) - kI) < 1e-15);
  CHECK(std::abs(inv(Complex(1.0, 2.0)) + 1.0 / Complex(1.0, 2.0)) < 1e-15);
  const Map id = build_nevanlinna(1.0, 0.0, MeasureSpec());
  CHECK(std::abs(id(Complex(-2.0, 0.5)) - Complex(-2.0, 0.5)) < 1e-15);
  const Map half = build_nevanlinna(0.5, 0.0, MeasureSpec({{1.0, 2.0}}));
  CHECK(std::abs(angular_derivative_at_infinity(half).value - 0.5) <= 1e-6);
  Gen g(42);
  for (int trial = 0; trial < 50; ++trial) {
    const double beta = g.uniform(0.0, 3.0);
    const Map m = build_nevanlinna(beta, g.uniform(-1, 1), MeasureSpec({{g.uniform(-2, 2), g.uniform(0.1, 2.0)}}));
    CHECK(std::abs(angular_derivative_at_infinity(m).value - beta) <= 1e-6);
    for (int k = 0; k < 10; ++k) CHECK(m(g.upper(5.0, 1e-3, 5.0)).imag() > 0.0);
  }
}

TEST_CASE("class P0 proxy") {
  const P0Report slit_report = is_P0(slit(0.25));
  CHECK(slit_report.member);
  CHECK(slit_report.sup == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(slit_report.confidence > 0.5);
  const P0Report shift = is_P0(Map::affine(1.0, kI));
  CHECK_FALSE(shift.member);
  CHECK_FALSE(shift.reason.empty());
  CHECK(is_P0(from_atoms({{0.0, 1.0}})).member);
  CHECK_FALSE(is_P0(Map::affine(2.0, 0.0)).member);
}

TEST_CASE("regular contact point at 1") {
  const ClassCResult id = class_C_check(Map::identity(Region::UnitDisk));
  CHECK(id.member);
  CHECK(id.derivative == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(id.in_C0);
  // (z - x)/(1 - x z) at x = 1/2: derivative (1 + x)/(1 - x) at 1.
  const ClassCResult lx = class_C_check(Map::disk_automorphism(0.5));
  CHECK(lx.member);
  CHECK(lx.derivative == doctest::Approx(3.0).epsilon(1e-8));
  CHECK_FALSE(lx.in_C0);
  const ClassCResult lminus = class_C_check(Map::disk_automorphism(-0.5));
  CHECK(lminus.derivative == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
  CHECK(lminus.in_C0);
  CHECK_FALSE(class_C_check(Map::affine(-1.0, 0.0, Region::UnitDisk)).member);
  // Conjugate of a half-plane translation: parabolic contact at 1.
  const ClassCResult tr = class_C_check(conjugate_by_cayley(Map::affine(1.0, kI)));
  CHECK(tr.member);
  CHECK(tr.derivative == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Laurent tail fit at infinity") {
  const CtildeResult a = class_Ctilde_check(conjugate_by_cayley(from_atoms({{0.0, 1.0}})));
  CHECK(a.member);
  CHECK(std::abs(a.tail.a - 1.0) < 1e-8);
  CHECK(std::abs(a.tail.b) < 1e-8);
  CHECK(std::abs(a.tail.c + 1.0) < 1e-6);
  const CtildeResult b = class_Ctilde_check(conjugate_by_cayley(compose(Map::affine(1.0, kI), from_atoms({{0.0, 1.0}}))));
  CHECK_FALSE(b.member);
  CHECK(std::abs(b.tail.b - kI) < 1e-8);
  const CtildeResult c = class_Ctilde_check(conjugate_by_cayley(Map::affine(2.0, 3.0)));
  CHECK(c.member);
  CHECK(std::abs(c.tail.a - 2.0) < 1e-8);
  CHECK(std::abs(c.tail.b - 3.0) < 1e-8);
  CHECK(std::abs(c.tail.c) < 1e-6);
}

TEST_CASE("capacity from the disk expansion") {
  CHECK(std::abs(disk_ell_from_expansion(conjugate_by_cayley(from_atoms({{0.0, 0.3}}))).value - 0.3) <= 1e-4);
  CHECK(std::abs(disk_ell_from_expansion(Map::identity(Region::UnitDisk)).value) <= 1e-10);
  CHECK(std::abs(disk_ell_from_expansion(conjugate_by_cayley(slit(0.5))).value - 0.5) <= 1e-4);
  // Negative or non-real coefficients rule the map out.
  for (const Complex k : {Complex(-0.5, 0.0), Complex(0.0, 0.5)}) {
    const Map cubic = Map::generic("cubic", Region::UnitDisk, Region::UnitDisk, [k](Complex z) {
      return Jet{z - k * std::pow(z - 1.0, 3) / 4.0, 1.0 - 0.75 * k * (z - 1.0) * (z - 1.0)};
    });
    CHECK(code_of([&] { disk_ell_from_expansion(cubic); }) == ErrorCode::PreconditionFailed);
  }
}

TEST_CASE("rigidity probe") {
  const BurnsKrantzResult empty = burns_krantz_check(conjugate_by_cayley(build_from_measure(MeasureSpec())));
  CHECK(empty.applicable);
  CHECK(empty.sup_deviation <= 1e-12);
  const BurnsKrantzResult tiny = burns_krantz_check(conjugate_by_cayley(from_atoms({{0.0, 1e-12}})));
  CHECK(tiny.applicable);
  CHECK(tiny.sup_deviation <= 1e-8);
  const BurnsKrantzResult step = burns_krantz_check(conjugate_by_cayley(slit(0.1)));
  CHECK_FALSE(step.applicable);
  CHECK(step.ell == doctest::Approx(0.1));
}

TEST_CASE("growth estimate for positive real part") {
  const Map one = Map::generic("one", Region::UpperHalfPlane, Region::Plane, [](Complex) { return Jet{1.0, 0.0}; });
  const Complex far[] = {Complex(3.0, 0.01), Complex(-5.0, 7.0)};
  CHECK(caratheodory_growth_check(one, kI, far).pass);
  const Map rot = Map::affine(-kI, 0.0, Region::UpperHalfPlane);
  const Complex two_i[] = {Complex(0.0, 2.0)};
  const GrowthCheck eq = caratheodory_growth_check(rot, kI, two_i);
  CHECK(eq.pass);
  CHECK(std::abs(eq.worst_margin) < 1e-12);
}

TEST_CASE("classification report") {
  const ClassReport r = classify(from_atoms({{0.0, 1.0}}));
  REQUIRE(r.ell);
  CHECK(*r.ell == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.in_P);
  CHECK(r.in_P0);
  CHECK(r.c_conjugate);
  CHECK(r.ctilde_conjugate);
  const ClassReport s = classify(Map::affine(1.0, kI));
  CHECK_FALSE(s.ell);
  CHECK(s.in_P);
  CHECK_FALSE(s.in_P0);
  CHECK_FALSE(s.ctilde_conjugate);
}
