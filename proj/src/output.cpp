#include "thinfilm/output.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace thinfilm {

namespace {

struct Column {
  std::string name;
  std::string value;  // pre-rendered
};

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::vector<Column> row_columns(const Report& report, std::size_t i, const EmitOptions& opts) {
  const DispersionPoint& p = report.points[i];
  std::vector<Column> cols = {
      {"k", format_real(p.K)},
      {"omega_re", format_real(p.Omega.real())},
      {"omega_im", format_real(p.Omega.imag())},
      {"alpha_re", format_real(p.alpha.real())},
      {"alpha_im", format_real(p.alpha.imag())},
      {"g_re", format_real(p.g.real())},
      {"g_im", format_real(p.g.imag())},
      {"residual_abs", format_real(p.residual_abs)},
      {"iterations", std::to_string(p.iterations)},
      {"converged", p.converged ? "true" : "false"},
  };
  if (report.tmm_points) {
    const SlabMode& m = (*report.tmm_points)[i];
    const double rel = m.converged ? std::abs(p.Omega - m.Omega) / std::abs(m.Omega)
                                   : std::nan("");
    cols.push_back({"omega_tmm_re", format_real(m.Omega.real())});
    cols.push_back({"omega_tmm_im", format_real(m.Omega.imag())});
    cols.push_back({"rel_diff", format_real(rel)});
  }
  if (opts.scaling) {
    const PhysicalState phys = denormalize(*opts.scaling, {1.0, p.K, p.Omega});
    cols.push_back({"k_phys", format_real(phys.k)});
    cols.push_back({"omega_phys_re", format_real(phys.omega.real())});
    cols.push_back({"omega_phys_im", format_real(phys.omega.imag())});
  }
  return cols;
}

std::string json_number(const std::string& rendered) {
  // JSON has no NaN/Inf literal.
  const char c = rendered.empty() ? '\0' : rendered.back();
  return (c == 'n' || c == 'f') ? "null" : rendered;
}

std::string render_meta(const MetaValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return json_number(format_real(x));
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return quote(x);
        }
      },
      v);
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // fold -0 into +0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

Metadata request_metadata(const SweepRequest& req) {
  Metadata m;
  m.emplace_back("command", std::string("sweep"));
  m.emplace_back("k-min", req.k_min);
  m.emplace_back("k-max", req.k_max);
  m.emplace_back("k-steps", static_cast<long long>(req.n_points));
  m.emplace_back("grid", std::string(to_string(req.grid)));
  m.emplace_back("d", req.film.D());
  m.emplace_back("nu", req.film.nu());
  m.emplace_back("gmodel", std::string(model_tag(req.film.g_model())));
  if (const auto* c = std::get_if<ConstantG>(&req.film.g_model())) {
    m.emplace_back("g0-re", c->g0().real());
    m.emplace_back("g0-im", c->g0().imag());
  } else if (const auto* t = std::get_if<TabulatedG>(&req.film.g_model())) {
    m.emplace_back("g-table-points", static_cast<long long>(t->points().size()));
  }
  m.emplace_back("tol", req.cfg.tol_residual);
  m.emplace_back("max-iter", static_cast<long long>(req.cfg.max_iter));
  m.emplace_back("compare-tmm", req.compare_tmm);
  return m;
}

Report make_report(const SweepResult& result) {
  Report r{request_metadata(result.request), result.points, result.failures, result.tmm_points};
  r.metadata.emplace_back("version", result.version);
  return r;
}

std::vector<std::string> csv_header(const Report& report, const EmitOptions& opts) {
  std::vector<std::string> names = {"k",    "omega_re", "omega_im",     "alpha_re",   "alpha_im",
                                    "g_re", "g_im",     "residual_abs", "iterations", "converged"};
  if (report.tmm_points) {
    names.insert(names.end(), {"omega_tmm_re", "omega_tmm_im", "rel_diff"});
  }
  if (opts.scaling) names.insert(names.end(), {"k_phys", "omega_phys_re", "omega_phys_im"});
  return names;
}

void emit_csv(std::ostream& out, const Report& report, const EmitOptions& opts) {
  const auto header = csv_header(report, opts);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto cols = row_columns(report, i, opts);
    for (std::size_t j = 0; j < cols.size(); ++j) out << (j ? "," : "") << cols[j].value;
    out << '\n';
  }
}

void emit_json(std::ostream& out, const Report& report, const EmitOptions& opts) {
  out << "{\n  \"metadata\": {";
  for (std::size_t i = 0; i < report.metadata.size(); ++i) {
    out << (i ? "," : "") << "\n    " << quote(report.metadata[i].first) << ": "
        << render_meta(report.metadata[i].second);
  }
  if (opts.scaling) {
    out << (report.metadata.empty() ? "" : ",") << "\n    \"omega-p\": "
        << json_number(format_real(opts.scaling->plasma_frequency()))
        << ",\n    \"light-speed\": " << json_number(format_real(opts.scaling->light_speed()));
  }
  out << "\n  },\n  \"points\": [";
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto cols = row_columns(report, i, opts);
    out << (i ? "," : "") << "\n    {";
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const bool literal = cols[j].name == "iterations" || cols[j].name == "converged";
      out << (j ? ", " : "") << quote(cols[j].name) << ": "
          << (literal ? cols[j].value : json_number(cols[j].value));
    }
    out << "}";
  }
  out << (report.points.empty() ? "" : "\n  ") << "],\n  \"failures\": [";
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    out << (i ? "," : "") << "\n    {\"k\": " << json_number(format_real(report.failures[i].K))
        << ", \"reason\": " << quote(report.failures[i].reason) << "}";
  }
  out << (report.failures.empty() ? "" : "\n  ") << "]\n}\n";
}

}  // namespace thinfilm
