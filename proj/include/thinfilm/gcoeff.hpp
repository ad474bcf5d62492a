#pragma once

// Field-penetration coefficient G: the mean normal field across the film
// divided by its boundary value, G = (1/(D E_x(0))) * integral_0^D E_x dx.
// It is dimensionless and enters the dispersion relation only through the
// combination G*K/Omega.

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thinfilm/core_model.hpp"

namespace thinfilm {

/// G = 0: the interior normal field is neglected (low-frequency limit).
struct ZeroG {};

/// Frequency-independent G.  Diverges in G*K/Omega as Omega -> 0, so the
/// model is only meaningful away from the origin.
class ConstantG {
 public:
  /// Throws DomainError if g0 is not finite.
  explicit ConstantG(Complex g0);
  Complex g0() const { return g0_; }

 private:
  Complex g0_;
};

/// Local closure G = 1/epsilon(Omega).
///
/// Inside the film j_x = sigma E_x and H_y is nearly constant, so the second
/// Maxwell equation gives E_x = K H_y / (Omega epsilon).  The boundary value
/// is E_x(0) = K H_y / Omega, hence the interior field is E_x(0)/epsilon and
/// G = 1/epsilon.  This is the specular, k*l << 1 limit.
struct DrudeG {};

struct GTablePoint {
  double omega = 0.0;
  Complex g{};
};

/// G sampled on a grid of real frequencies, linearly interpolated in
/// Re(Omega).  No K dependence and no extrapolation.
class TabulatedG {
 public:
  /// Throws DomainError unless there are at least two points with finite
  /// values and strictly increasing omega.
  explicit TabulatedG(std::vector<GTablePoint> points);

  const std::vector<GTablePoint>& points() const { return points_; }
  double omega_min() const { return points_.front().omega; }
  double omega_max() const { return points_.back().omega; }

  /// Throws RangeError outside [omega_min, omega_max].  Knots are returned
  /// bit-for-bit.
  Complex interpolate(double omega) const;

 private:
  std::vector<GTablePoint> points_;
};

using GModelSpec = std::variant<ZeroG, ConstantG, DrudeG, TabulatedG>;

struct GValue {
  Complex g{};
  std::string_view model_tag;  // "zero", "constant", "drude" or "table"
};

std::string_view model_tag(const GModelSpec& model);

/// G(Omega, K) under the selected model.  K is accepted for interface
/// symmetry; none of the implemented models depends on it.
///
/// Drude raises DomainError at the permittivity poles and SingularityError
/// where epsilon vanishes; Tabulated raises RangeError outside its table.
GValue g_value(const GModelSpec& model, Complex Omega, double K, double nu);

/// Parses the CSV table format (header `omega,g_re,g_im`).  `source` names
/// the input in error messages.
TabulatedG parse_g_table(std::istream& in, std::string_view source = "<stream>");

/// Reads a G table from disk; wraps parse_g_table.
GModelSpec load_g_table(const std::filesystem::path& path);

}  // namespace thinfilm
