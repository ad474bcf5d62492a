#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinfilm/dispersion.hpp"
#include "thinfilm/errors.hpp"
#include "thinfilm/rootfind.hpp"
#include "thinfilm/tmm_oracle.hpp"

namespace thinfilm {

enum class GridKind { Linear, Logarithmic };

std::string_view to_string(GridKind g);

struct SweepRequest {
  double k_min = 0.0;
  double k_max = 0.0;
  int n_points = 0;
  GridKind grid = GridKind::Linear;
  FilmParams film{1.0, 0.0, ZeroG{}};
  RootConfig cfg{};
  bool compare_tmm = false;

  /// Throws DomainError: needs 0 < k_min < k_max (finite) and n_points >= 2.
  void validate() const;
};

/// K values of the request grid, ascending; both end points are exact.
std::vector<double> k_grid(const SweepRequest& req);

struct SweepFailure {
  double K = 0.0;
  std::string reason;
};

struct SweepResult {
  SweepRequest request;
  std::string version;
  /// Converged modes, K ascending.
  std::vector<DispersionPoint> points;
  std::vector<SweepFailure> failures;
  /// Parallel to points when the request asked for the slab comparison.
  std::optional<std::vector<SlabMode>> tmm_points;
};

/// Every grid point failed; carries the per-point reasons.
class SweepError : public Error {
 public:
  SweepError(const std::string& what, std::vector<SweepFailure> failures)
      : Error(what), failures_(std::move(failures)) {}
  const std::vector<SweepFailure>& failures() const { return failures_; }

 private:
  std::vector<SweepFailure> failures_;
};

/// Continuation in K.  The first point is seeded by default_seed; later
/// points by linear extrapolation through the last two converged roots (or
/// the last root when only one exists).  A failed point is recorded and
/// continuation resumes from the last good root.  A converged root that
/// moves by more than cfg.branch_jump_factor * |dK| is recorded as a
/// branch jump.
SweepResult sweep_dispersion(const SweepRequest& req);

struct ComparisonRow {
  double K = 0.0;
  Complex omega_model{};
  Complex omega_tmm{};
  /// |omega_model - omega_tmm| / |omega_tmm|; NaN when the slab solve failed.
  double rel_diff = 0.0;
};

/// Throws StateError when the result carries no slab data.
std::vector<ComparisonRow> compare_tmm(const SweepResult& result);

/// Largest finite rel_diff of a comparison table (NaN rows count as +inf).
double max_rel_diff(const std::vector<ComparisonRow>& rows);

}  // namespace thinfilm
