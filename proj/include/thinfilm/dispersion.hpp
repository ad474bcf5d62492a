#pragma once

// Thin-film surface-plasmon dispersion relation.
//
// Assuming H_y is constant across a film thinner than the skin depth and
// E_z is antisymmetric about the mid-plane, the layer impedance
//
//   Z_layer = i (K D / 2) (1 - G K / Omega)
//
// must match the exterior impedance Z_out = i alpha / Omega.  Multiplying
// by Omega gives the residual used everywhere in this library:
//
//   F(Omega) = alpha(K, Omega) - (K D / 2) (Omega - G K),
//
// which is regular at Omega = 0.  The printed derivation of Z_layer keeps
// i K D H_y where the first Maxwell equation yields -i Omega D H_y; the two
// agree on the light line.  The printed form is implemented as-is.

#include <vector>

#include "thinfilm/core_model.hpp"
#include "thinfilm/film.hpp"

namespace thinfilm {

/// One solved mode.
struct DispersionPoint {
  double K = 0.0;
  Complex Omega{};
  Complex alpha{};
  Complex g{};
  double residual_abs = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Empty when converged; otherwise why the solve failed.
  std::string failure;
};

enum class Region { Below, Inside, Above };

struct FieldSample {
  double x = 0.0;
  Complex Ex{};
  Complex Ez{};
  Complex Hy{};
  Region region = Region::Inside;
};

/// Exterior and interior fields of one mode, normalized to H_y = 1 on the
/// film faces.
struct FieldProfile {
  std::vector<FieldSample> samples;
};

/// Throws SingularityError at Omega = 0.
Complex z_layer(Complex Omega, double K, double D, Complex g);
/// Throws SingularityError at Omega = 0.
Complex z_outside(Complex Omega, double K);

/// F for an explicit value of G.
Complex residual(Complex Omega, double K, double D, Complex g);
/// F with G evaluated from the film's model; propagates G-model errors.
Complex residual(Complex Omega, double K, const FilmParams& film);

/// Root of F for G = 0: 2K / sqrt(4 + K^2 D^2).
double closed_form_lowfreq(double K, double D);
/// K (1 - K^2 D^2 / 8); only accurate for K D << 1.
double smallk_expansion(double K, double D);

/// Fields at a single position.  Requires a converged point.
FieldSample evaluate_field(const DispersionPoint& point, double D, double x);

/// Samples n_samples equally spaced positions on [x_min, x_max].
/// Throws StateError for an unconverged point and DomainError unless
/// x_min < 0 < D < x_max and n_samples >= 2.
FieldProfile field_profile(const DispersionPoint& point, double D, double x_min, double x_max,
                           int n_samples);

}  // namespace thinfilm
