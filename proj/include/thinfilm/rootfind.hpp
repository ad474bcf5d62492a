#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "thinfilm/core_model.hpp"
#include "thinfilm/dispersion.hpp"
#include "thinfilm/errors.hpp"

namespace thinfilm {

/// Newton derivative vanished; the iteration cannot proceed.
class SingularJacobianError : public Error {
 public:
  using Error::Error;
};

struct RootConfig {
  double tol_residual = 1e-12;
  int max_iter = 50;
  /// Central-difference step relative to max(1, |z|).
  double fd_step_rel = 1e-7;
  int damping_halvings = 20;
  /// Sweep guard: consecutive roots may move at most this multiple of the
  /// K step before the point is treated as a branch jump.
  double branch_jump_factor = 5.0;
  bool keep_trace = false;

  /// Throws DomainError if any field is non-positive (damping_halvings may be 0).
  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  Complex z{};
  double residual_abs = 0.0;
  int halvings = 0;
};

struct RootResult {
  Complex root{};
  double residual_abs = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<std::vector<IterationRecord>> trace;
};

using ComplexFunction = std::function<Complex(Complex)>;
using RealFunction = std::function<double(double)>;

/// Damped Newton with a central-difference derivative.  Each step is halved
/// (up to cfg.damping_halvings times) until |f| decreases; trial points where
/// f throws count as no decrease.  Converged when |f| <= cfg.tol_residual.
/// Running out of iterations or of halvings yields converged = false.
/// Throws SingularJacobianError when |f'| < 1e-300.
RootResult newton_complex(const ComplexFunction& f, Complex seed, const RootConfig& cfg);

/// Bisection to an interval width of 1e-14 * max(1, |root|).  Throws
/// BracketError unless f(lo) and f(hi) differ in sign.  converged also
/// requires |f(root)| <= cfg.tol_residual.
RootResult bisect_real(const RealFunction& f, double lo, double hi, const RootConfig& cfg);

/// Residual written in terms of both Omega and the exterior decay constant
/// alpha = sqrt(K^2 - Omega^2).
using DecayResidual = std::function<Complex(Complex Omega, Complex alpha)>;

/// Omega = sqrt(K^2 - alpha^2) with Re(Omega) >= 0.
Complex omega_from_alpha(double K, Complex alpha);

/// Newton on alpha instead of Omega.  Bound modes lie close to the light
/// line where alpha(Omega) has a square-root branch point; as a function of
/// alpha the residual is smooth there.  The returned root is alpha.
RootResult newton_on_alpha(const DecayResidual& f, double K, Complex seed_omega,
                           const RootConfig& cfg);

/// Default seed: smallk_expansion clamped below the light line (0.9999 K),
/// or the G = 0 closed form where the expansion is not positive.
Complex default_seed(double K, double D);

/// Solves the dispersion relation by Newton in alpha from `seed`.
/// Never throws for solver failure; returns converged = false with a reason.
DispersionPoint solve_point_newton(double K, const FilmParams& film, Complex seed,
                                   const RootConfig& cfg);

/// Mode at wavevector K.  For lossless Zero/Drude films a real bracket on
/// (0, K) is tried first (capped at the plasma frequency for Drude, where
/// epsilon changes sign) and polished by Newton; otherwise, or if that
/// fails, Newton from `seed` (default_seed when absent).
/// Throws DomainError for K <= 0 or a seed at the origin; every solver
/// failure is reported through converged = false.
DispersionPoint solve_point(double K, const FilmParams& film,
                            std::optional<Complex> seed = std::nullopt,
                            const RootConfig& cfg = {});

}  // namespace thinfilm
