#pragma once

// Deterministic CSV / JSON rendering.  Every floating value is printed as
// %.11e (12 significant digits), so equal inputs give byte-equal output.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "thinfilm/core_model.hpp"
#include "thinfilm/sweep.hpp"

namespace thinfilm {

using MetaValue = std::variant<double, long long, bool, std::string>;
/// Insertion-ordered key/value echo of the request.
using Metadata = std::vector<std::pair<std::string, MetaValue>>;

struct Report {
  Metadata metadata;
  std::vector<DispersionPoint> points;
  std::vector<SweepFailure> failures;
  std::optional<std::vector<SlabMode>> tmm_points;
};

struct EmitOptions {
  /// When set, physical-unit echo columns (k_phys, omega_phys_re,
  /// omega_phys_im) are appended.
  std::optional<Scaling> scaling;
};

Metadata request_metadata(const SweepRequest& req);
Report make_report(const SweepResult& result);

std::string format_real(double v);

std::vector<std::string> csv_header(const Report& report, const EmitOptions& opts);
void emit_csv(std::ostream& out, const Report& report, const EmitOptions& opts = {});
void emit_json(std::ostream& out, const Report& report, const EmitOptions& opts = {});

}  // namespace thinfilm
