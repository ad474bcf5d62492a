#include "thinfilm/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "thinfilm/version.hpp"

namespace thinfilm {

std::string_view to_string(GridKind g) {
  switch (g) {
    case GridKind::Linear:
      return "linear";
    case GridKind::Logarithmic:
      return "log";
  }
  return "unknown";
}

void SweepRequest::validate() const {
  if (!(std::isfinite(k_min) && k_min > 0.0)) throw DomainError("k-min must be positive");
  if (!(std::isfinite(k_max) && k_max > k_min)) {
    throw DomainError("k-max must be greater than k-min");
  }
  if (n_points < 2) throw DomainError("k-steps must be at least 2");
  cfg.validate();
}

std::vector<double> k_grid(const SweepRequest& req) {
  req.validate();
  const int n = req.n_points;
  std::vector<double> ks(static_cast<std::size_t>(n));
  if (req.grid == GridKind::Linear) {
    const double step = (req.k_max - req.k_min) / (n - 1);
    for (int i = 0; i < n; ++i) ks[i] = req.k_min + i * step;
  } else {
    const double lo = std::log(req.k_min);
    const double step = (std::log(req.k_max) - lo) / (n - 1);
    for (int i = 0; i < n; ++i) ks[i] = std::exp(lo + i * step);
  }
  ks.front() = req.k_min;
  ks.back() = req.k_max;
  return ks;
}

SweepResult sweep_dispersion(const SweepRequest& req) {
  const std::vector<double> ks = k_grid(req);

  SweepResult result{req, kVersion, {}, {}, std::nullopt};
  if (req.compare_tmm) result.tmm_points.emplace();

  for (const double K : ks) {
    std::optional<Complex> seed;
    const auto& pts = result.points;
    if (pts.size() >= 2) {
      const auto& a = pts[pts.size() - 2];
      const auto& b = pts.back();
      seed = b.Omega + (b.Omega - a.Omega) * ((K - b.K) / (b.K - a.K));
    } else if (pts.size() == 1) {
      seed = pts.back().Omega;
    }
    if (seed && *seed == Complex{}) seed.reset();

    DispersionPoint p = solve_point(K, req.film, seed, req.cfg);
    if (!p.converged) {
      result.failures.push_back({K, p.failure});
      continue;
    }
    if (!pts.empty()) {
      const double jump = std::abs(p.Omega - pts.back().Omega);
      const double limit = req.cfg.branch_jump_factor * std::abs(K - pts.back().K);
      if (jump > limit) {
        std::ostringstream msg;
        msg << "branch jump: |dOmega| = " << jump << " exceeds " << limit;
        result.failures.push_back({K, msg.str()});
        continue;
      }
    }
    if (result.tmm_points) {
      result.tmm_points->push_back(tmm_solve(K, req.film.D(), req.film.nu(), p.Omega, req.cfg));
    }
    result.points.push_back(std::move(p));
  }

  if (result.points.empty()) {
    throw SweepError("no grid point converged", result.failures);
  }
  return result;
}

std::vector<ComparisonRow> compare_tmm(const SweepResult& result) {
  if (!result.tmm_points) throw StateError("sweep result carries no slab-oracle data");
  const auto& tmm = *result.tmm_points;
  if (tmm.size() != result.points.size()) {
    throw StateError("slab-oracle data is not parallel to the sweep points");
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(tmm.size());
  for (std::size_t i = 0; i < tmm.size(); ++i) {
    ComparisonRow row{result.points[i].K, result.points[i].Omega, tmm[i].Omega, 0.0};
    row.rel_diff = tmm[i].converged
                       ? std::abs(row.omega_model - row.omega_tmm) / std::abs(row.omega_tmm)
                       : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

double max_rel_diff(const std::vector<ComparisonRow>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) {
    if (std::isnan(r.rel_diff)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, r.rel_diff);
  }
  return worst;
}

}  // namespace thinfilm
