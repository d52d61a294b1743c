#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "loewner/chordal.hpp"
#include "loewner/error.hpp"
#include "loewner/families.hpp"
#include "loewner/function_classes.hpp"
#include "loewner/parallel.hpp"
#include "support.hpp"

using namespace loewner;
using support::Gen;

namespace {

std::vector<Complex> disk_probes(Gen& g, int n, double r = 0.9) {
  std::vector<Complex> out;
  for (int k = 0; k < n; ++k) out.push_back(g.disk(r));
  return out;
}

std::vector<Triple> random_triples(Gen& g, int n, double T) {
  std::vector<Triple> out;
  for (int k = 0; k < n; ++k) {
    double s = g.uniform(0, T), u = g.uniform(0, T), t = g.uniform(0, T);
    if (s > u) std::swap(s, u);
    if (u > t) std::swap(u, t);
    if (s > u) std::swap(s, u);
    out.push_back({s, u, t});
  }
  return out;
}

std::vector<std::pair<double, double>> random_pairs(Gen& g, int n, double T) {
  std::vector<std::pair<double, double>> out;
  for (int k = 0; k < n; ++k) {
    double s = g.uniform(0, T), t = g.uniform(0, T);
    if (s > t) std::swap(s, t);
    out.emplace_back(s, t);
  }
  return out;
}

}  // namespace

TEST_CASE("radial family satisfies the axioms exactly") {
  Gen g(51);
  const auto probes = disk_probes(g, 25);
  const auto triples = random_triples(g, 50, 3.0);
  const EfReport r = verify_ef_axioms(families::radial(), probes, triples);
  CHECK(r.ef1_pass);
  CHECK(r.ef2_pass);
  CHECK(r.ef1 <= 1e-12);
  CHECK(r.ef2 <= 1e-12);
  REQUIRE(r.ef3_modulus.size() == probes.size());
  for (std::size_t k = 0; k < probes.size(); ++k) CHECK(r.ef3_modulus[k] <= std::abs(probes[k]) + 1e-12);
}

TEST_CASE("chordal solver family satisfies the axioms") {
  Gen g(52);
  const DrivingFunction d({{0.0, 0.3}, {0.3, -1.0}, {0.6, 0.8}}, DrivingMode::PiecewiseConstant, 1.0);
  const EfReport r = verify_ef_axioms(families::chordal(d, Region::UnitDisk), disk_probes(g, 25, 0.8),
                                      random_triples(g, 50, 1.0));
  CHECK(r.ef1_pass);
  CHECK(r.ef2_pass);
  CHECK(r.ef2 <= 1e-7);
  const DrivingFunction smooth = DrivingFunction::sampled([](double t) { return std::sin(4.0 * t); }, 1.0, 20);
  const EfReport s = verify_ef_axioms(families::chordal(smooth), {}, random_triples(g, 20, 1.0));
  CHECK(s.ef2 <= 1e-7);
}

TEST_CASE("broken family is flagged") {
  Gen g(53);
  const EfReport r = verify_ef_axioms(families::broken(), disk_probes(g, 25, 0.8), random_triples(g, 50, 0.9));
  CHECK(r.ef1_pass);
  CHECK_FALSE(r.ef2_pass);
  CHECK(r.ef2 > 1e-3);
}

TEST_CASE("family handles reject a non-identity diagonal") {
  auto bad = [](double s, double t) { return Map::affine(std::exp(s - t) * 0.5, 0.0, Region::UnitDisk); };
  CHECK_THROWS_AS(FamilyHandle(bad, Region::UnitDisk), Error);
}

TEST_CASE("memoized handles are safe across threads") {
  const FamilyHandle fam(
      [](double s, double t) {
        return evolution_operator(DrivingFunction::sampled([](double u) { return std::cos(u); }, 1.0, 10), s, t);
      },
      Region::UpperHalfPlane, Complex(1.0, 0.0), 1.0, true);
  std::vector<Complex> out(64);
  parallel_for(out.size(), 4, [&](std::size_t k) { out[k] = fam(0.25 * (k % 4), 1.0)(kI); });
  for (std::size_t k = 4; k < out.size(); ++k) CHECK(out[k] == out[k % 4]);
}

TEST_CASE("chain association") {
  Gen g(54);
  const auto probes = disk_probes(g, 20, 0.7);
  const auto pairs = random_pairs(g, 20, 2.0);
  CHECK(verify_chain_association(families::radial_chain(), families::radial(), probes, pairs).residual <= 1e-12);
  const AssociationReport tr =
      verify_chain_association(families::translation_chain(), families::translation(Region::UnitDisk), probes, pairs);
  CHECK(tr.residual <= 1e-12);
  CHECK(verify_chain_association(families::radial_chain(), families::scaled_radial(), probes, pairs).residual > 1e-2);
  const AssociationReport sr =
      verify_chain_association(families::scaled_radial_chain(), families::scaled_radial(), probes, pairs, true);
  CHECK(sr.residual <= 1e-12);
  CHECK(sr.range_probe_failures == 0);
}

TEST_CASE("beta values") {
  for (double t : {0.0, 0.5, 2.0, 10.0}) CHECK(std::abs(beta(families::radial(), 0.0, t) - std::exp(-t)) <= 1e-12);
  const FamilyHandle id([](double, double) { return Map::identity(Region::UnitDisk); }, Region::UnitDisk);
  const Complex z(0.3, 0.4);
  CHECK(beta(id, z, 1.0) == doctest::Approx(1.0 / (1.0 - std::norm(z))).epsilon(1e-14));
  // Translation chain: H(0) + it = i(1 + t), so beta_t(0) = 1/(1 + t).
  CHECK(beta(families::translation(Region::UnitDisk), 0.0, 3.0) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("range classification") {
  const BetaLimit radial = beta_limit(families::radial(), 0.0);
  CHECK(radial.plane);
  const BetaLimit tr = beta_limit(families::translation(Region::UnitDisk), 0.0);
  CHECK(tr.plane);
  CHECK(tr.value <= 1e-8);
  const BetaLimit scaled = beta_limit(families::scaled_radial(), 0.0);
  CHECK_FALSE(scaled.plane);
  CHECK(scaled.value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(standard_range_radius(0.0));
  CHECK(*standard_range_radius(0.5) == 2.0);
  CHECK(*standard_range_radius(1.0) == 1.0);
  CHECK_THROWS_AS(standard_range_radius(-1.0), Error);
}

TEST_CASE("alternate chains") {
  Gen g(55);
  const auto probes = disk_probes(g, 20, 0.3);
  std::vector<std::pair<double, double>> pairs = random_pairs(g, 20, 1.0);
  const ChainHandle f = families::radial_chain();
  const ChainHandle same = alternate_chain(f, Map::identity(Region::UnitDisk), 1.0);
  for (const Complex& z : probes) CHECK(std::abs(same(0.7)(z) - f(0.7)(z)) <= 1e-15);
  const Map koebe = Map::generic("z/(1-z)", Region::UnitDisk, Region::Plane, [](Complex z) {
    return Jet{z / (1.0 - z), 1.0 / ((1.0 - z) * (1.0 - z))};
  }, true);
  const double base = verify_chain_association(f, families::radial(), probes, pairs).residual;
  const AssociationReport alt = verify_chain_association(alternate_chain(f, koebe, 1.0), families::radial(), probes, pairs);
  CHECK(alt.residual <= 1e-10);
  CHECK(alt.residual <= 10.0 * base + 1e-15);
  const ChainHandle escaping = alternate_chain(f, koebe, 5.0);
  try {
    escaping(1.0)(Complex(0.3, 0.0));
    FAIL("expected DomainEscape");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainEscape);
  }
}

TEST_CASE("conformal radius along chains") {
  CHECK(conformal_radius_along_chain(families::radial_chain(), families::radial(), 0.0, 1.5) ==
        doctest::Approx(std::exp(1.5)).epsilon(1e-13));
  const Complex z0(0.2, -0.3);
  CHECK(conformal_radius_along_chain(families::radial_chain(), families::radial(), z0, 0.0) ==
        doctest::Approx(1.0 - std::norm(z0)).epsilon(1e-14));
  const DrivingFunction zero = DrivingFunction::constant(0.0, 2.0);
  const ChainHandle chain = families::slit_chain(zero, 2.0);
  const FamilyHandle fam = families::chordal(zero, Region::UnitDisk);
  // f_0(0) = i sqrt 5; the slit domain at t = 1 is unzipped by sqrt(w^2 + 2).
  const Complex w0(0.0, std::sqrt(5.0));
  const Complex gw = support::upper_sqrt(w0 * w0 + 2.0);
  const double oracle = 2.0 * gw.imag() / std::abs(w0 / gw);
  CHECK(std::abs(oracle - 6.0 / std::sqrt(5.0)) < 1e-15);
  CHECK(std::abs(conformal_radius_along_chain(chain, fam, 0.0, 1.0) - oracle) <= 1e-6);
}

TEST_CASE("derivative schedules") {
  const DerivativeSchedule zero = DerivativeSchedule::zero();
  CHECK(zero.a(3.0) == 0.0);
  const DerivativeSchedule jump({{0.0, 0.0}, {1.0, std::log(2.0)}});
  CHECK(jump.a(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(jump.a(5.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(DerivativeSchedule({{0.0, 0.0}, {1.0, -1.0}}), Error);
  CHECK_THROWS_AS(DerivativeSchedule({{0.5, 0.0}}), Error);
  CHECK_THROWS_AS(DerivativeSchedule({{0.0, 1.0}}), Error);
}

TEST_CASE("conjugated families") {
  Gen g(56);
  const DrivingFunction zero = DrivingFunction::constant(0.0, 1.0);
  const FamilyHandle base = families::chordal(zero, Region::UnitDisk);
  const FamilyHandle same = conjugate_family(base, DerivativeSchedule::zero(), 1.0);
  for (const Complex& z : disk_probes(g, 10, 0.8)) CHECK(std::abs(same(0.2, 0.9)(z) - base(0.2, 0.9)(z)) <= 1e-14);

  const DerivativeSchedule linear({{0.0, 0.0}, {1.0, 1.0}});
  const FamilyHandle conj = conjugate_family(base, linear, 1.0);
  for (double t : {0.25, 0.5, 1.0}) {
    const ClassCResult c = class_C_check(conj(0.0, t));
    CHECK(c.member);
    CHECK(std::abs(c.derivative - std::exp(-t)) <= 1e-4);
  }
  const auto probes = disk_probes(g, 25, 0.8);
  const auto triples = random_triples(g, 30, 1.0);
  const EfReport before = verify_ef_axioms(base, probes, triples);
  const EfReport after = verify_ef_axioms(conj, probes, triples);
  CHECK(after.ef1 <= 10.0 * before.ef1 + 1e-14);
  CHECK(after.ef2 <= 10.0 * before.ef2 + 1e-14);
  CHECK_THROWS_AS(conjugate_family(families::radial(), linear, 1.0), Error);
}

TEST_CASE("capacity parametrization bound") {
  const DrivingFunction d = DrivingFunction::sampled([](double t) { return std::sin(3.0 * t); }, 1.0, 20);
  GoryainovBaOptions o;
  o.samples = 200;
  o.seed = 3;
  const GoryainovBaReport r = goryainov_ba_check(families::chordal(d), o);
  CHECK(r.in_P0);
  REQUIRE(r.v_defined);
  for (const auto& [t, v] : r.v_table) CHECK(std::abs(v - t) <= 1e-5);
  CHECK(r.monotone);
  CHECK(r.bound_violations == 0);
  CHECK(r.bound_checks == 200);
  CHECK(r.ac_proxy);

  const GoryainovBaReport tr = goryainov_ba_check(families::translation(Region::UpperHalfPlane), o);
  CHECK_FALSE(tr.in_P0);
  CHECK_FALSE(tr.v_defined);

  const FamilyHandle squared = families::reparametrized(families::chordal(DrivingFunction::constant(0.0, 1.0)),
                                                        [](double t) { return t * t; });
  const GoryainovBaReport sq = goryainov_ba_check(squared, o);
  REQUIRE(sq.v_defined);
  for (const auto& [t, v] : sq.v_table) CHECK(std::abs(v - t * t) <= 1e-5);
  CHECK(sq.bound_violations == 0);
}

TEST_CASE("Lipschitz estimate in the parabolic case") {
  const LipschitzReport tr = parabolic_lipschitz_check(families::translation(Region::UpperHalfPlane), 2.0, 300, 5);
  CHECK(tr.violations == 0);
  const LipschitzReport ch =
      parabolic_lipschitz_check(families::chordal(DrivingFunction::constant(0.0, 1.0)), 1.0, 300, 6);
  CHECK(ch.violations == 0);
  CHECK(ch.checks == 300);
  CHECK_THROWS_AS(parabolic_lipschitz_check(families::chordal(DrivingFunction::constant(1.0, 1.0)), 1.0, 10, 7),
                  Error);
}
