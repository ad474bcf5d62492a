#include "thinfilm/tmm_oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "thinfilm/errors.hpp"

namespace thinfilm {

namespace {

// tanh for Re(z) >= 0 without overflow of the intermediate cosh/sinh.
Complex tanh_right_half(Complex z) {
  const Complex e = std::exp(-2.0 * z);
  return (1.0 - e) / (1.0 + e);
}

Complex interior_term(Complex Omega, double K, double D, double nu) {
  const Complex eps = epsilon_drude(Omega, nu);
  if (eps == Complex{}) {
    throw SingularityError("slab residual is singular where epsilon = 0");
  }
  const Complex kappa_in = decaying_sqrt(K * K - eps * Omega * Omega);
  // Even in kappa_in, so the branch choice does not matter here.
  return kappa_in / eps * tanh_right_half(0.5 * D * kappa_in);
}

}  // namespace

std::string_view to_string(SlabSymmetry s) {
  switch (s) {
    case SlabSymmetry::HySymmetric:
      return "Hy-symmetric/Ez-antisymmetric";
  }
  return "unknown";
}

Complex tmm_residual(Complex Omega, double K, double D, double nu) {
  return interior_term(Omega, K, D, nu) + alpha(K, Omega);
}

SlabMode tmm_solve(double K, double D, double nu, Complex seed, const RootConfig& cfg) {
  if (!(std::isfinite(K) && K > 0.0)) throw DomainError("k must be positive");
  if (!(std::isfinite(D) && D > 0.0)) throw DomainError("film thickness D must be positive");
  cfg.validate();

  SlabMode mode;
  mode.K = K;
  const DecayResidual f = [&](Complex Omega, Complex a) {
    return interior_term(Omega, K, D, nu) + a;
  };
  RootResult r;
  try {
    r = newton_on_alpha(f, K, seed, cfg);
    // kappa_out is the unknown Newton solved for.  Recomputing it from Omega
    // would lose digits next to the light line, where Omega = K (1 - O(kappa^2)).
    mode.kappa_out = r.root;
    mode.Omega = omega_from_alpha(K, r.root);
    mode.iterations = r.iterations;
    mode.kappa_in = decaying_sqrt(K * K - epsilon_drude(mode.Omega, nu) * mode.Omega * mode.Omega);
    mode.residual_abs = r.residual_abs;
  } catch (const Error& e) {
    mode.Omega = seed;
    mode.residual_abs = std::numeric_limits<double>::infinity();
    mode.failure = std::string("slab solve failed: ") + e.what();
    return mode;
  }

  std::ostringstream why;
  if (!r.converged) {
    why << "slab residual " << mode.residual_abs << " above tolerance " << cfg.tol_residual
        << " after " << r.iterations << " iterations";
  } else if (!(mode.kappa_out.real() > 0.0)) {
    why << "slab root Omega = " << mode.Omega << " is not bound (Re kappa_out <= 0)";
  }
  mode.failure = why.str();
  mode.converged = mode.failure.empty();
  return mode;
}

}  // namespace thinfilm
