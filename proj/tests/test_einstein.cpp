#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gyro/backend.hpp"
#include "gyro/einstein.hpp"
#include "gyro/laws.hpp"

using gyro::EinsteinGyrogroup;
using gyro::EinsteinVelocity;

namespace {

double dist(const EinsteinVelocity& a, const std::array<double, 3>& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::fabs(a.v[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("lorentz gamma at six tenths of c") {
  EinsteinGyrogroup eg;
  CHECK(gyro::lorentz_gamma(eg.velocity(0.6, 0, 0)) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(gyro::lorentz_gamma(eg.velocity(0, 0, 0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parallel addition follows the scalar composition rule") {
  EinsteinGyrogroup eg;
  EinsteinVelocity s = eg.add(eg.velocity(0.5, 0, 0), eg.velocity(0.5, 0, 0));
  CHECK(dist(s, {0.8, 0.0, 0.0}) < 1e-15);
}

TEST_CASE("orthogonal addition contracts the second summand") {
  EinsteinGyrogroup eg;
  EinsteinVelocity s = eg.add(eg.velocity(0.6, 0, 0), eg.velocity(0, 0.6, 0));
  CHECK(dist(s, {0.6, 0.48, 0.0}) < 1e-15);
}

TEST_CASE("gyration fixes the direction orthogonal to both arguments") {
  EinsteinGyrogroup eg;
  EinsteinVelocity u = eg.velocity(0.6, 0, 0);
  EinsteinVelocity v = eg.velocity(0, 0.6, 0);
  EinsteinVelocity w = eg.velocity(0, 0, 0.5);
  CHECK(dist(gyro::gyr(eg, u, v, w), {0.0, 0.0, 0.5}) < 1e-12);
}

TEST_CASE("gyration rotates in-plane vectors by a nonzero angle") {
  EinsteinGyrogroup eg;
  EinsteinVelocity u = eg.velocity(0.6, 0, 0);
  EinsteinVelocity v = eg.velocity(0, 0.6, 0);
  EinsteinVelocity w = eg.velocity(0.3, 0.2, 0);
  EinsteinVelocity g = gyro::gyr(eg, u, v, w);
  CHECK(dist(g, {69.0 / 205.0, 53.0 / 410.0, 0.0}) < 1e-12);
  // The rotation moves w, so (u+v)+w and u+(v+w) genuinely differ.
  double defect = 0;
  for (int i = 0; i < 3; ++i) defect += (g.v[i] - w.v[i]) * (g.v[i] - w.v[i]);
  CHECK(std::sqrt(defect) == doctest::Approx(0.0796333059381196).epsilon(1e-10));
  EinsteinVelocity lhs = eg.add(eg.add(u, v), w);
  EinsteinVelocity rhs = eg.add(u, eg.add(v, w));
  CHECK(!eg.eq(lhs, rhs));
}

TEST_CASE("left-iterated triple of one half") {
  EinsteinGyrogroup eg;
  EinsteinVelocity t = gyro::iterated_add(eg, eg.velocity(0.5, 0, 0), 3);
  CHECK(dist(t, {13.0 / 14.0, 0.0, 0.0}) < 1e-12);
}

TEST_CASE("coaddition of perpendicular halves is symmetric") {
  EinsteinGyrogroup eg;
  EinsteinVelocity u = eg.velocity(0.5, 0, 0);
  EinsteinVelocity v = eg.velocity(0, 0.5, 0);
  CHECK(dist(gyro::coadd(eg, u, v), {4.0 / 9.0, 4.0 / 9.0, 0.0}) < 1e-12);
  CHECK(dist(gyro::coadd(eg, v, u), {4.0 / 9.0, 4.0 / 9.0, 0.0}) < 1e-12);
}

TEST_CASE("speed limit scales linearly") {
  EinsteinGyrogroup eg({2.0, 1e-9});
  EinsteinVelocity s = eg.add(eg.velocity(1.0, 0, 0), eg.velocity(1.0, 0, 0));
  CHECK(dist(s, {1.6, 0.0, 0.0}) < 1e-12);
}

TEST_CASE("inadmissible velocities are refused") {
  EinsteinGyrogroup eg;
  CHECK_THROWS_AS(eg.velocity(1.0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(eg.velocity(0.8, 0.8, 0), std::domain_error);
  CHECK_THROWS_AS(EinsteinGyrogroup({-1.0, 1e-9}), std::invalid_argument);
  CHECK_THROWS_AS(EinsteinGyrogroup({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("operands with different speed limits are refused") {
  EinsteinGyrogroup a({1.0, 1e-9});
  EinsteinGyrogroup b({2.0, 1e-9});
  CHECK_THROWS_AS(a.add(a.velocity(0.1, 0, 0), b.velocity(0.1, 0, 0)), std::invalid_argument);
}

TEST_CASE("near boundary flag trips above 0.999999 c") {
  EinsteinGyrogroup eg;
  CHECK(eg.near_boundary(eg.velocity(0.9999995, 0, 0)));
  CHECK(!eg.near_boundary(eg.velocity(0.5, 0, 0)));
}

TEST_CASE("identity and inverse behave") {
  EinsteinGyrogroup eg;
  EinsteinVelocity u = eg.velocity(0.3, -0.4, 0.2);
  CHECK(eg.eq(eg.add(eg.identity(), u), u));
  CHECK(eg.eq(eg.add(u, eg.identity()), u));
  CHECK(eg.eq(eg.add(u, eg.neg(u)), eg.identity()));
  CHECK(eg.eq(eg.add(eg.neg(u), u), eg.identity()));
}

TEST_CASE("sampled velocities stay admissible and deterministic") {
  EinsteinGyrogroup eg;
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    EinsteinVelocity u = eg.sample(a);
    EinsteinVelocity v = eg.sample(b);
    CHECK(eg.eq(u, v));
    double n2 = u.v[0] * u.v[0] + u.v[1] * u.v[1] + u.v[2] * u.v[2];
    CHECK(n2 <= 0.99 * 0.99 + 1e-12);
  }
}

TEST_CASE("sampled law suite passes on the velocity ball") {
  EinsteinGyrogroup eg;
  gyro::LawSuiteOptions opt{gyro::LawSuiteMode::sampled, 500, 7};
  auto suite = gyro::run_law_suite(eg, opt);
  CHECK(suite.reports.size() == 20);
  for (const auto& rep : suite.reports) {
    INFO(gyro::law_name(rep.id));
    CHECK(rep.status == gyro::LawStatus::pass);
  }
}
