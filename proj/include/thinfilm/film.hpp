#pragma once

#include "thinfilm/gcoeff.hpp"

namespace thinfilm {

/// Physical problem statement in dimensionless form.
class FilmParams {
 public:
  /// Throws DomainError unless D > 0 and nu >= 0 (both finite).
  FilmParams(double D, double nu, GModelSpec g_model);

  double D() const { return D_; }
  double nu() const { return nu_; }
  const GModelSpec& g_model() const { return g_model_; }

  /// d < c/omega_p: the film is thinner than the skin depth at every
  /// frequency, which is the regime the thin-film reduction assumes.
  bool thin_film() const { return D_ < 1.0; }

 private:
  double D_;
  double nu_;
  GModelSpec g_model_;
};

}  // namespace thinfilm
