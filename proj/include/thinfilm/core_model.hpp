#pragma once

// Dimensionless vocabulary shared by every module.
//
// Lengths are measured in units of the infrared skin depth c/omega_p,
// frequencies in units of omega_p and wavevectors in units of omega_p/c:
//
//   D = d * omega_p / c,  K = k * c / omega_p,  Omega = omega / omega_p.
//
// Fields carry the time factor exp(-i*omega*t), so damped modes have
// Im(Omega) <= 0.

#include <complex>

namespace thinfilm {

using Complex = std::complex<double>;

/// Speed of light in Gaussian units, cm/s.
inline constexpr double kLightSpeedCgs = 2.99792458e10;

/// Absolute scale of the problem: plasma frequency and speed of light.
class Scaling {
 public:
  /// Throws DomainError unless both values are finite and positive.
  explicit Scaling(double plasma_frequency, double light_speed = kLightSpeedCgs);

  double plasma_frequency() const { return plasma_frequency_; }
  double light_speed() const { return light_speed_; }
  /// c / omega_p, the length unit.
  double skin_depth() const { return light_speed_ / plasma_frequency_; }

 private:
  double plasma_frequency_;
  double light_speed_;
};

struct DimensionlessState {
  double D = 0.0;
  double K = 0.0;
  Complex Omega{};
};

struct PhysicalState {
  double d = 0.0;       // thickness, length units of the scaling
  double k = 0.0;       // wavevector, 1/length
  Complex omega{};      // rad/s
};

/// Throws DomainError for d <= 0 or k < 0.
DimensionlessState normalize(const Scaling& scaling, double d, double k, Complex omega);
PhysicalState denormalize(const Scaling& scaling, const DimensionlessState& state);

/// Exterior decay constant sqrt(K^2 - Omega^2) on the branch Re >= 0,
/// with Im >= 0 when the real part vanishes.
Complex alpha(double K, Complex Omega);

/// sqrt(z) on the same branch as alpha().
Complex decaying_sqrt(Complex z);

/// Local Drude permittivity 1 - 1/(Omega (Omega + i nu)).
/// Throws DomainError at the poles Omega = 0 and Omega = -i nu.
Complex epsilon_drude(Complex Omega, double nu);

}  // namespace thinfilm
