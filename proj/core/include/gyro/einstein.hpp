#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace gyro {

// Admissible velocity: a 3-vector with euclidean norm strictly below the
// speed limit c that it carries. Binary operations require both operands
// to carry exactly the same c.
struct EinsteinVelocity {
  std::array<double, 3> v{0.0, 0.0, 0.0};
  double c = 1.0;
};

struct EinsteinConfig {
  double c = 1.0;
  double tolerance = 1e-9;  // max-norm equality tolerance
};

double lorentz_gamma(const EinsteinVelocity& u);
EinsteinVelocity einstein_add(const EinsteinVelocity& u, const EinsteinVelocity& v);
EinsteinVelocity einstein_neg(const EinsteinVelocity& u);

// Relativistic velocity addition on the open ball of radius c. Satisfies
// the GyroBackend interface; gyration is derived generically.
class EinsteinGyrogroup {
 public:
  using element_type = EinsteinVelocity;

  explicit EinsteinGyrogroup(EinsteinConfig cfg = {});

  const EinsteinConfig& config() const { return cfg_; }

  // Validates the norm bound and stamps the configured c.
  EinsteinVelocity velocity(double x, double y, double z) const;

  EinsteinVelocity add(const EinsteinVelocity& u, const EinsteinVelocity& v) const;
  EinsteinVelocity neg(const EinsteinVelocity& u) const;
  EinsteinVelocity identity() const;
  bool eq(const EinsteinVelocity& a, const EinsteinVelocity& b) const;

  // Samples a velocity with norm <= 0.99 c (deterministic given the rng state).
  EinsteinVelocity sample(std::mt19937_64& rng) const;

  // True when the norm exceeds 0.999999 c; such inputs are accepted but
  // reported as low-precision.
  bool near_boundary(const EinsteinVelocity& u) const;

 private:
  EinsteinConfig cfg_;
};

}  // namespace gyro
