#pragma once

// Test-only reference solvers.  Plain real arithmetic in long double,
// independent of the library's complex residuals and Newton machinery.
// Valid for lossless films and real Omega in (0, K).

#include <cmath>
#include <functional>

namespace oracle {

using Real = long double;

inline Real bisect(const std::function<Real(Real)>& f, Real lo, Real hi) {
  Real f_lo = f(lo);
  for (int i = 0; i < 400; ++i) {
    const Real mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    const Real f_mid = f(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

/// Thin-film relation with G = 1/epsilon, epsilon = 1 - 1/W^2.
inline Real drude_film_root(Real K, Real D) {
  const auto f = [=](Real W) {
    const Real g = W * W / (W * W - 1.0L);
    return std::sqrt((K - W) * (K + W)) - 0.5L * K * D * (W - g * K);
  };
  return bisect(f, 1e-6L * K, K);
}

/// Exact H_y-symmetric slab mode, (k1/eps) tanh(k1 D/2) + k0 = 0.
inline Real slab_root(Real K, Real D) {
  const auto f = [=](Real W) {
    const Real eps = 1.0L - 1.0L / (W * W);
    const Real k1 = std::sqrt(K * K - eps * W * W);
    return k1 / eps * std::tanh(0.5L * k1 * D) + std::sqrt((K - W) * (K + W));
  };
  return bisect(f, 1e-6L * K, K);
}

inline Real closed_form(Real K, Real D) { return 2.0L * K / std::sqrt(4.0L + K * K * D * D); }

}  // namespace oracle
