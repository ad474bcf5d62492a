#include "thinfilm/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace thinfilm {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

constexpr double kMinDerivative = 1e-300;
// Hard cap for bisection; halving any finite double interval to 1e-14
// relative width takes far fewer steps.
constexpr int kMaxBisections = 2200;

}  // namespace

void RootConfig::validate() const {
  if (!(tol_residual > 0.0)) throw DomainError("tol_residual must be positive");
  if (max_iter <= 0) throw DomainError("max_iter must be positive");
  if (!(fd_step_rel > 0.0)) throw DomainError("fd_step_rel must be positive");
  if (damping_halvings < 0) throw DomainError("damping_halvings must be non-negative");
  if (!(branch_jump_factor > 0.0)) throw DomainError("branch_jump_factor must be positive");
}

RootResult newton_complex(const ComplexFunction& f, Complex seed, const RootConfig& cfg) {
  RootResult result;
  if (cfg.keep_trace) result.trace.emplace();

  Complex z = seed;
  Complex fz = f(z);
  double r = std::abs(fz);
  if (result.trace) result.trace->push_back({0, z, r, 0});

  int it = 0;
  while (r > cfg.tol_residual && it < cfg.max_iter) {
    ++it;
    const double h = cfg.fd_step_rel * std::max(1.0, std::abs(z));
    const Complex dfdz = (f(z + h) - f(z - h)) / (2.0 * h);
    if (!(std::abs(dfdz) >= kMinDerivative)) {
      std::ostringstream msg;
      msg << "singular Newton derivative at z = " << z;
      throw SingularJacobianError(msg.str());
    }

    Complex step = fz / dfdz;
    Complex trial{};
    Complex f_trial{};
    bool accepted = false;
    int halvings = 0;
    while (true) {
      trial = z - step;
      try {
        f_trial = f(trial);
      } catch (const Error&) {
        f_trial = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
      }
      if (is_finite(f_trial) && std::abs(f_trial) < r) {
        accepted = true;
        break;
      }
      if (halvings == cfg.damping_halvings) break;
      step *= 0.5;
      ++halvings;
    }
    if (!accepted) break;  // stagnated: no reduction along the Newton direction

    z = trial;
    fz = f_trial;
    r = std::abs(fz);
    if (result.trace) result.trace->push_back({it, z, r, halvings});
  }

  result.root = z;
  result.residual_abs = r;
  result.iterations = it;
  result.converged = r <= cfg.tol_residual;
  return result;
}

RootResult bisect_real(const RealFunction& f, double lo, double hi, const RootConfig& cfg) {
  if (lo > hi) std::swap(lo, hi);
  double f_lo = f(lo);
  const double f_hi = f(hi);

  RootResult result;
  if (f_lo == 0.0 || f_hi == 0.0) {
    result.root = f_lo == 0.0 ? lo : hi;
    result.converged = true;
    return result;
  }
  if (!(std::signbit(f_lo) != std::signbit(f_hi)) || std::isnan(f_lo) || std::isnan(f_hi)) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]";
    throw BracketError(msg.str());
  }

  double mid = 0.5 * (lo + hi);
  double f_mid = f(mid);
  int it = 0;
  while (it < kMaxBisections) {
    if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid)) || f_mid == 0.0) break;
    ++it;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    if (next == mid) break;  // interval exhausted at double resolution
    mid = next;
    f_mid = f(mid);
  }

  result.root = mid;
  result.residual_abs = std::abs(f_mid);
  result.iterations = it;
  result.converged = result.residual_abs <= cfg.tol_residual;
  return result;
}

Complex omega_from_alpha(double K, Complex alpha) {
  Complex w = std::sqrt((K - alpha) * (K + alpha));
  if (w.real() < 0.0) w = -w;
  return w;
}

RootResult newton_on_alpha(const DecayResidual& f, double K, Complex seed_omega,
                           const RootConfig& cfg) {
  const auto in_alpha = [&](Complex a) { return f(omega_from_alpha(K, a), a); };
  return newton_complex(in_alpha, alpha(K, seed_omega), cfg);
}

Complex default_seed(double K, double D) {
  double s = smallk_expansion(K, D);
  if (s <= 0.0) s = closed_form_lowfreq(K, D);
  if (s >= K) s = 0.9999 * K;
  return {s, 0.0};
}

namespace {

DispersionPoint package(double K, const FilmParams& film, Complex Omega, int iterations,
                        const RootConfig& cfg) {
  DispersionPoint p;
  p.K = K;
  p.Omega = Omega;
  p.alpha = alpha(K, Omega);
  p.iterations = iterations;
  try {
    p.g = g_value(film.g_model(), Omega, K, film.nu()).g;
    p.residual_abs = std::abs(residual(Omega, K, film.D(), p.g));
  } catch (const Error& e) {
    p.residual_abs = std::numeric_limits<double>::infinity();
    p.failure = e.what();
    return p;
  }

  std::ostringstream why;
  if (!std::isfinite(p.residual_abs) || p.residual_abs > cfg.tol_residual) {
    why << "residual " << p.residual_abs << " above tolerance " << cfg.tol_residual;
  } else if (!(p.alpha.real() > 0.0)) {
    why << "root Omega = " << Omega << " is not a bound mode (Re alpha <= 0)";
  } else if (!(Omega.real() > 0.0)) {
    why << "root Omega = " << Omega << " has non-positive real part";
  }
  p.failure = why.str();
  p.converged = p.failure.empty();
  return p;
}

bool real_lossless_model(const FilmParams& film) {
  return film.nu() == 0.0 && (std::holds_alternative<ZeroG>(film.g_model()) ||
                              std::holds_alternative<DrudeG>(film.g_model()));
}

}  // namespace

DispersionPoint solve_point_newton(double K, const FilmParams& film, Complex seed,
                                   const RootConfig& cfg) {
  const double half_kd = 0.5 * K * film.D();
  const DecayResidual f = [&](Complex Omega, Complex a) {
    const Complex g = g_value(film.g_model(), Omega, K, film.nu()).g;
    return a - half_kd * (Omega - g * K);
  };

  RootResult r;
  try {
    r = newton_on_alpha(f, K, seed, cfg);
  } catch (const Error& e) {
    DispersionPoint p;
    p.K = K;
    p.Omega = seed;
    p.residual_abs = std::numeric_limits<double>::infinity();
    p.failure = std::string("Newton failed: ") + e.what();
    return p;
  }

  DispersionPoint p = package(K, film, omega_from_alpha(K, r.root), r.iterations, cfg);
  if (!r.converged && p.converged) {
    // Newton's own residual is evaluated on alpha; trust the Omega-form check.
    return p;
  }
  if (!r.converged) {
    std::ostringstream msg;
    msg << "Newton did not converge in " << r.iterations << " iterations (|F| = "
        << r.residual_abs << ")";
    p.failure = msg.str();
    p.converged = false;
  }
  return p;
}

DispersionPoint solve_point(double K, const FilmParams& film, std::optional<Complex> seed,
                            const RootConfig& cfg) {
  if (!(std::isfinite(K) && K > 0.0)) throw DomainError("k must be positive");
  cfg.validate();
  Complex start = seed.value_or(default_seed(K, film.D()));
  if (!seed && std::holds_alternative<DrudeG>(film.g_model()) && start.real() >= 1.0) {
    start = 0.9999;
  }
  if (start == Complex{}) throw DomainError("seed at the origin is not allowed");
  if (!(std::isfinite(start.real()) && std::isfinite(start.imag()))) {
    throw DomainError("seed must be finite");
  }

  std::string bracket_note;
  if (real_lossless_model(film)) {
    // A lossless Drude film only binds where epsilon < 0, i.e. below Omega = 1.
    const double top = std::holds_alternative<DrudeG>(film.g_model()) ? std::min(K, 1.0) : K;
    const RealFunction f = [&](double w) { return residual(Complex{w, 0.0}, K, film).real(); };
    const double lo = 1e-6 * top;
    for (const double hi : {(1.0 - 1e-12) * top, std::nextafter(top, 0.0)}) {
      try {
        const RootResult b = bisect_real(f, lo, hi, cfg);
        DispersionPoint p = package(K, film, Complex{b.root.real(), 0.0}, b.iterations, cfg);
        if (p.converged) return p;
        // Bisection pins Omega but not |F|: F is steep next to the light line.
        DispersionPoint polished = solve_point_newton(K, film, Complex{b.root.real(), 0.0}, cfg);
        if (polished.converged) {
          polished.iterations += b.iterations;
          return polished;
        }
        bracket_note = "bracket: " + polished.failure;
        break;
      } catch (const BracketError& e) {
        bracket_note = std::string("bracket: ") + e.what();
      } catch (const Error& e) {
        bracket_note = std::string("bracket: ") + e.what();
        break;
      }
    }
  }

  DispersionPoint p = solve_point_newton(K, film, start, cfg);
  if (!p.converged && !bracket_note.empty()) p.failure = bracket_note + "; " + p.failure;
  return p;
}

}  // namespace thinfilm
