#include "thinfilm/core_model.hpp"

#include <cmath>

#include "thinfilm/errors.hpp"

namespace thinfilm {

Scaling::Scaling(double plasma_frequency, double light_speed)
    : plasma_frequency_(plasma_frequency), light_speed_(light_speed) {
  if (!(std::isfinite(plasma_frequency) && plasma_frequency > 0.0)) {
    throw DomainError("plasma frequency must be finite and positive");
  }
  if (!(std::isfinite(light_speed) && light_speed > 0.0)) {
    throw DomainError("light speed must be finite and positive");
  }
}

DimensionlessState normalize(const Scaling& scaling, double d, double k, Complex omega) {
  if (!(d > 0.0)) throw DomainError("film thickness must be positive");
  if (!(k >= 0.0)) throw DomainError("wavevector must be non-negative");
  const double wp = scaling.plasma_frequency();
  const double c = scaling.light_speed();
  return {d * wp / c, k * c / wp, omega / wp};
}

PhysicalState denormalize(const Scaling& scaling, const DimensionlessState& state) {
  const double wp = scaling.plasma_frequency();
  const double c = scaling.light_speed();
  return {state.D * c / wp, state.K * wp / c, state.Omega * wp};
}

Complex decaying_sqrt(Complex z) {
  Complex root = std::sqrt(z);
  // std::sqrt already returns Re >= 0; fix the sign on the cut where a
  // negative-zero imaginary part yields -i|.|.
  if (root.real() < 0.0 || (root.real() == 0.0 && root.imag() < 0.0)) root = -root;
  return root;
}

Complex alpha(double K, Complex Omega) {
  // Factored form keeps relative accuracy near the light line Omega ~ K.
  return decaying_sqrt((K - Omega) * (K + Omega));
}

Complex epsilon_drude(Complex Omega, double nu) {
  if (Omega == Complex{0.0, 0.0}) {
    throw DomainError("Drude permittivity has a pole at Omega = 0");
  }
  const Complex shifted = Omega + Complex{0.0, nu};
  if (shifted == Complex{0.0, 0.0}) {
    throw DomainError("Drude permittivity has a pole at Omega = -i*nu");
  }
  return 1.0 - 1.0 / (Omega * shifted);
}

}  // namespace thinfilm
