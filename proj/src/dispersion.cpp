#include "thinfilm/dispersion.hpp"

#include <cmath>

#include "thinfilm/errors.hpp"

namespace thinfilm {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_nonzero(Complex Omega, const char* what) {
  if (Omega == Complex{}) {
    throw SingularityError(std::string(what) + " is singular at Omega = 0");
  }
}

}  // namespace

FilmParams::FilmParams(double D, double nu, GModelSpec g_model)
    : D_(D), nu_(nu), g_model_(std::move(g_model)) {
  if (!(std::isfinite(D) && D > 0.0)) throw DomainError("film thickness D must be positive");
  if (!(std::isfinite(nu) && nu >= 0.0)) {
    throw DomainError("collision rate nu must be non-negative");
  }
}

Complex z_layer(Complex Omega, double K, double D, Complex g) {
  require_nonzero(Omega, "layer impedance");
  return kI * (K * D / 2.0) * (1.0 - g * K / Omega);
}

Complex z_outside(Complex Omega, double K) {
  require_nonzero(Omega, "exterior impedance");
  return kI * alpha(K, Omega) / Omega;
}

Complex residual(Complex Omega, double K, double D, Complex g) {
  return alpha(K, Omega) - (K * D / 2.0) * (Omega - g * K);
}

Complex residual(Complex Omega, double K, const FilmParams& film) {
  const GValue g = g_value(film.g_model(), Omega, K, film.nu());
  return residual(Omega, K, film.D(), g.g);
}

double closed_form_lowfreq(double K, double D) { return 2.0 * K / std::sqrt(4.0 + K * K * D * D); }

double smallk_expansion(double K, double D) { return K * (1.0 - K * K * D * D / 8.0); }

FieldSample evaluate_field(const DispersionPoint& point, double D, double x) {
  if (!point.converged) throw StateError("field profile requires a converged mode");
  const Complex W = point.Omega;
  const Complex a = point.alpha;
  const double K = point.K;

  FieldSample s;
  s.x = x;
  if (x < 0.0) {
    s.region = Region::Below;
    s.Hy = std::exp(a * x);
    s.Ez = kI * a / W * s.Hy;
    s.Ex = K / W * s.Hy;
  } else if (x > D) {
    s.region = Region::Above;
    s.Hy = std::exp(a * (D - x));
    s.Ez = -kI * a / W * s.Hy;
    s.Ex = K / W * s.Hy;
  } else {
    s.region = Region::Inside;
    s.Hy = 1.0;
    // Uniform interior normal field whose mean reproduces G.
    s.Ex = point.g * K / W;
    const Complex ez0 = kI * (K * D / 2.0) * (1.0 - point.g * K / W);
    s.Ez = ez0 * (1.0 - 2.0 * x / D);
  }
  return s;
}

FieldProfile field_profile(const DispersionPoint& point, double D, double x_min, double x_max,
                           int n_samples) {
  if (!point.converged) throw StateError("field profile requires a converged mode");
  if (!(x_min < 0.0 && 0.0 < D && D < x_max)) {
    throw DomainError("field profile window must satisfy x_min < 0 < D < x_max");
  }
  if (n_samples < 2) throw DomainError("field profile needs at least 2 samples");

  FieldProfile profile;
  profile.samples.reserve(static_cast<std::size_t>(n_samples));
  const double step = (x_max - x_min) / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double x = (i == n_samples - 1) ? x_max : x_min + i * step;
    profile.samples.push_back(evaluate_field(point, D, x));
  }
  return profile;
}

}  // namespace thinfilm
