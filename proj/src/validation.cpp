#include "thinfilm/validation.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "thinfilm/dispersion.hpp"
#include "thinfilm/rootfind.hpp"
#include "thinfilm/sweep.hpp"
#include "thinfilm/tmm_oracle.hpp"

namespace thinfilm {

namespace {

constexpr std::uint64_t kSampleSeed = 20240601;
constexpr double kEps = std::numeric_limits<double>::epsilon();

CheckResult check(std::string name, double max_error, double tolerance, std::string detail = {}) {
  return {std::move(name), max_error, tolerance, max_error <= tolerance, std::move(detail)};
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> ks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ks[i] = std::exp(std::log(lo) + i * (std::log(hi) - std::log(lo)) / (n - 1));
  }
  ks.front() = lo;
  ks.back() = hi;
  return ks;
}

SuiteReport closedform_suite() {
  SuiteReport rep{"closedform", {}};

  double worst_solve = 0.0;
  int unconverged = 0;
  for (const double D : {0.01, 0.1, 0.5, 1.0}) {
    const FilmParams film(D, 0.0, ZeroG{});
    for (const double K : log_grid(0.01, 5.0, 50)) {
      const DispersionPoint p = solve_point(K, film);
      if (!p.converged) {
        ++unconverged;
        continue;
      }
      const double exact = closed_form_lowfreq(K, D);
      worst_solve = std::max(worst_solve, std::abs(p.Omega - exact) / exact);
    }
  }
  rep.checks.push_back(check("solve_point matches 2K/sqrt(4+K^2D^2)",
                             unconverged ? INFINITY : worst_solve, 1e-10,
                             std::to_string(unconverged) + " unconverged"));

  double worst_res = 0.0;
  for (const double D : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 1.0}) {
    for (const double K : log_grid(0.01, 5.0, 40)) {
      const Complex F = residual(Complex{closed_form_lowfreq(K, D), 0.0}, K, D, Complex{});
      worst_res = std::max(worst_res, std::abs(F));
    }
  }
  rep.checks.push_back(check("residual vanishes at the closed form", worst_res, 1e-12));

  double light_line_violation = 0.0;
  double monotone_violation = 0.0;
  for (const double D : {0.01, 0.1, 0.5, 1.0}) {
    double prev = 0.0;
    for (const double K : log_grid(0.01, 5.0, 200)) {
      const double w = closed_form_lowfreq(K, D);
      light_line_violation = std::max(light_line_violation, w >= K ? w - K + 1.0 : 0.0);
      monotone_violation = std::max(monotone_violation, w <= prev ? prev - w + 1.0 : 0.0);
      prev = w;
    }
  }
  rep.checks.push_back(check("closed form lies below the light line", light_line_violation, 0.0));
  rep.checks.push_back(check("closed form increases with K", monotone_violation, 0.0));
  return rep;
}

SuiteReport expansion_suite() {
  SuiteReport rep{"expansion", {}};
  std::mt19937_64 rng(kSampleSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Ratio of the observed gap to the next-Taylor-term bound 0.03 K (KD)^4.
  // A rounding floor of a few ulps of K keeps KD -> 0 samples meaningful.
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double K = 0.01 + 4.99 * unit(rng);
    const double kd = 0.5 * (1.0 - unit(rng));
    const double D = kd / K;
    const double gap = std::abs(closed_form_lowfreq(K, D) - smallk_expansion(K, D));
    const double bound = 0.03 * K * std::pow(kd, 4) + 4.0 * kEps * K;
    worst = std::max(worst, gap / bound);
  }
  rep.checks.push_back(check("|closed - expansion| / 0.03 K (KD)^4 for KD <= 0.5", worst, 1.0));
  return rep;
}

SuiteReport impedance_suite() {
  SuiteReport rep{"impedance", {}};
  std::mt19937_64 rng(kSampleSeed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Complex gs[] = {Complex{0.0, 0.0}, Complex{-1.0 / 3.0, 0.0}, Complex{0.2, -0.1}};
  const double two_pi = 2.0 * std::acos(-1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double mag = 0.01 + 1.99 * unit(rng);
    const Complex W = std::polar(mag, two_pi * unit(rng));
    const double K = 0.01 + 4.99 * unit(rng);
    const double D = 0.01 + 0.99 * unit(rng);
    const Complex g = gs[i % 3];
    const Complex lhs = W * (z_outside(W, K) - z_layer(W, K, D, g));
    const Complex rhs = Complex{0.0, 1.0} * residual(W, K, D, g);
    // Scale by the magnitude of the two terms that cancel at a root.
    const double scale = std::abs(alpha(K, W)) + std::abs(0.5 * K * D * (W - g * K));
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  rep.checks.push_back(check("Omega (Z_out - Z_layer) = i F", worst, 1e-13));
  return rep;
}

double max_gap_drude_vs_slab(double D, std::vector<double> ks, int* failures) {
  double worst = 0.0;
  const FilmParams film(D, 0.0, DrudeG{});
  for (const double K : ks) {
    const DispersionPoint p = solve_point(K, film);
    if (!p.converged) {
      ++*failures;
      continue;
    }
    const SlabMode m = tmm_solve(K, D, 0.0, p.Omega);
    if (!m.converged) {
      ++*failures;
      continue;
    }
    worst = std::max(worst, std::abs(p.Omega - m.Omega) / std::abs(m.Omega));
  }
  return worst;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> ks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ks[i] = lo + i * (hi - lo) / (n - 1);
  ks.back() = hi;
  return ks;
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

SuiteReport tmm_suite() {
  SuiteReport rep{"tmm", {}};
  const auto ks = linear_grid(0.05, 0.5, 20);

  int failures = 0;
  const double gap_005 = max_gap_drude_vs_slab(0.05, ks, &failures);
  rep.checks.push_back(check("Drude-G roots agree with slab modes at D = 0.05",
                             failures ? INFINITY : gap_005, 1e-2,
                             std::to_string(failures) + " unconverged"));

  failures = 0;
  const double gap_01 = max_gap_drude_vs_slab(0.1, ks, &failures);
  const double gap_0025 = max_gap_drude_vs_slab(0.025, ks, &failures);
  const bool shrinking = failures == 0 && gap_005 < gap_01 && gap_0025 < gap_005;
  rep.checks.push_back({"disagreement shrinks with D (0.1 > 0.05 > 0.025)",
                        gap_0025, gap_01, shrinking,
                        "D=0.1: " + sci(gap_01) + ", D=0.05: " + sci(gap_005) +
                            ", D=0.025: " + sci(gap_0025)});

  failures = 0;
  double worst_zero = 0.0;
  for (const double D : {0.1, 0.05, 0.01}) {
    for (const double K : linear_grid(0.05, 0.3, 20)) {
      const double w = closed_form_lowfreq(K, D);
      const SlabMode m = tmm_solve(K, D, 0.0, Complex{w, 0.0});
      if (!m.converged) {
        ++failures;
        continue;
      }
      worst_zero = std::max(worst_zero, std::abs(m.Omega - w) / std::abs(m.Omega));
    }
  }
  rep.checks.push_back(check("slab modes agree with the G = 0 closed form (K <= 0.3, D <= 0.1)",
                             failures ? INFINITY : worst_zero, 2e-2,
                             std::to_string(failures) + " unconverged"));
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"closedform", "expansion", "tmm", "impedance"};
  return names;
}

std::optional<SuiteReport> run_suite(std::string_view name) {
  if (name == "closedform") return closedform_suite();
  if (name == "expansion") return expansion_suite();
  if (name == "impedance") return impedance_suite();
  if (name == "tmm") return tmm_suite();
  return std::nullopt;
}

}  // namespace thinfilm
