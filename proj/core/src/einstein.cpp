#include "gyro/einstein.hpp"

#include <cmath>
#include <stdexcept>

namespace gyro {

namespace {

double norm(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

void require_admissible(const EinsteinVelocity& u, const char* who) {
  if (!(u.c > 0.0))
    throw std::domain_error(std::string(who) + ": speed limit c must be positive");
  if (!(norm(u.v) < u.c))
    throw std::domain_error(std::string(who) + ": velocity norm must be strictly below c");
}

void require_same_c(const EinsteinVelocity& u, const EinsteinVelocity& v, const char* who) {
  if (u.c != v.c)
    throw std::invalid_argument(std::string(who) + ": operands carry different speed limits");
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double lorentz_gamma(const EinsteinVelocity& u) {
  require_admissible(u, "lorentz_gamma");
  const double beta2 = dot(u.v, u.v) / (u.c * u.c);
  return 1.0 / std::sqrt(1.0 - beta2);
}

EinsteinVelocity einstein_add(const EinsteinVelocity& u, const EinsteinVelocity& v) {
  require_same_c(u, v, "einstein_add");
  require_admissible(u, "einstein_add");
  require_admissible(v, "einstein_add");
  const double c2 = u.c * u.c;
  const double gu = lorentz_gamma(u);
  const double uv = dot(u.v, v.v);
  const double pref = 1.0 / (1.0 + uv / c2);
  const double ucoef = 1.0 + (gu / (1.0 + gu)) * uv / c2;
  EinsteinVelocity out;
  out.c = u.c;
  for (int i = 0; i < 3; ++i)
    out.v[i] = pref * (ucoef * u.v[i] + v.v[i] / gu);
  return out;
}

EinsteinVelocity einstein_neg(const EinsteinVelocity& u) {
  require_admissible(u, "einstein_neg");
  return {{-u.v[0], -u.v[1], -u.v[2]}, u.c};
}

EinsteinGyrogroup::EinsteinGyrogroup(EinsteinConfig cfg) : cfg_(cfg) {
  if (!(cfg_.c > 0.0))
    throw std::invalid_argument("EinsteinGyrogroup: c must be positive");
  if (!(cfg_.tolerance > 0.0) || !(cfg_.tolerance < cfg_.c))
    throw std::invalid_argument("EinsteinGyrogroup: tolerance must lie in (0, c)");
}

EinsteinVelocity EinsteinGyrogroup::velocity(double x, double y, double z) const {
  EinsteinVelocity u{{x, y, z}, cfg_.c};
  require_admissible(u, "EinsteinGyrogroup::velocity");
  return u;
}

EinsteinVelocity EinsteinGyrogroup::add(const EinsteinVelocity& u,
                                        const EinsteinVelocity& v) const {
  return einstein_add(u, v);
}

EinsteinVelocity EinsteinGyrogroup::neg(const EinsteinVelocity& u) const {
  return einstein_neg(u);
}

EinsteinVelocity EinsteinGyrogroup::identity() const {
  return {{0.0, 0.0, 0.0}, cfg_.c};
}

bool EinsteinGyrogroup::eq(const EinsteinVelocity& a, const EinsteinVelocity& b) const {
  require_same_c(a, b, "EinsteinGyrogroup::eq");
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::fabs(a.v[i] - b.v[i]));
  return worst <= cfg_.tolerance;
}

EinsteinVelocity EinsteinGyrogroup::sample(std::mt19937_64& rng) const {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * 3.14159265358979323846 * uniform01(rng);
  const double r = 0.99 * cfg_.c * std::cbrt(uniform01(rng));
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {{r * s * std::cos(phi), r * s * std::sin(phi), r * z}, cfg_.c};
}

bool EinsteinGyrogroup::near_boundary(const EinsteinVelocity& u) const {
  return norm(u.v) > 0.999999 * u.c;
}

}  // namespace gyro
