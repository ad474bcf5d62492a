#pragma once

// Exact TM modes of a Drude slab (0 < x < D) in vacuum, restricted to the
// family with H_y symmetric and E_z antisymmetric about the mid-plane.
//
// Inside, H_y = cosh(kappa_in (x - D/2)) and E_z is proportional to
// (1/epsilon) dH_y/dx; outside, H_y decays as exp(-kappa_out |x - D/2|).
// Continuity of H_y and E_z at x = 0 gives
//
//   (kappa_in / epsilon) tanh(kappa_in D / 2) + kappa_out = 0,
//
// kappa_out^2 = K^2 - Omega^2,  kappa_in^2 = K^2 - epsilon Omega^2.
// The other family (coth instead of tanh) is not modelled.

#include <string_view>

#include "thinfilm/core_model.hpp"
#include "thinfilm/rootfind.hpp"

namespace thinfilm {

enum class SlabSymmetry { HySymmetric };

std::string_view to_string(SlabSymmetry s);

struct SlabMode {
  double K = 0.0;
  Complex Omega{};
  /// Solved directly; Omega = sqrt(K^2 - kappa_out^2).
  Complex kappa_out{};
  Complex kappa_in{};
  SlabSymmetry symmetry = SlabSymmetry::HySymmetric;
  /// |residual| at (Omega, kappa_out).
  double residual_abs = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string failure;
};

/// Throws SingularityError where epsilon(Omega) = 0 and DomainError at its
/// poles.
Complex tmm_residual(Complex Omega, double K, double D, double nu);

/// Root of tmm_residual near `seed`.  Throws DomainError for K <= 0 or
/// D <= 0; solver failure is reported through converged = false.
SlabMode tmm_solve(double K, double D, double nu, Complex seed, const RootConfig& cfg = {});

}  // namespace thinfilm
