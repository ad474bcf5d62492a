#include "thinfilm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "thinfilm/output.hpp"
#include "thinfilm/run_config.hpp"
#include "thinfilm/validation.hpp"
#include "thinfilm/version.hpp"

namespace thinfilm {

namespace {

struct FlagValues {
  RunConfig rc;
  std::string config_path;
  bool compare_tmm = false;
};

void add_film_flags(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("--d", v.rc.d, "Film thickness D = d*omega_p/c");
  cmd->add_option("--nu", v.rc.nu, "Collision rate nu/omega_p");
  cmd->add_option("--gmodel", v.rc.gmodel, "G model: zero|constant|drude|table");
  cmd->add_option("--g0-re", v.rc.g0_re, "Constant G, real part");
  cmd->add_option("--g0-im", v.rc.g0_im, "Constant G, imaginary part");
  cmd->add_option("--g-table", v.rc.g_table, "CSV table omega,g_re,g_im");
  cmd->add_option("--tol", v.rc.tol, "Residual tolerance");
  cmd->add_option("--max-iter", v.rc.max_iter, "Newton iteration limit");
  cmd->add_option("--output", v.rc.output, "Output format: csv|json");
  cmd->add_option("--out", v.rc.out, "Output file (default: stdout)");
  cmd->add_option("--omega-p", v.rc.omega_p, "Plasma frequency for physical-unit columns");
  cmd->add_option("--unit-system", v.rc.unit_system, "gaussian|si (with --omega-p)");
  cmd->add_option("--config", v.config_path, "JSON config; explicit flags override it");
}

RunConfig resolve(const FlagValues& v) {
  RunConfig rc = v.rc;
  if (v.compare_tmm) rc.compare_tmm = true;
  if (v.config_path.empty()) return rc;
  return merge(load_run_config(v.config_path), rc);
}

/// Writes `text` to `path` via a temporary file so a failed run never
/// leaves a truncated result behind.
bool write_atomically(const std::string& path, const std::string& text, std::ostream& err) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text) || !f.flush()) {
      err << "error: cannot write '" << path << "'\n";
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    err << "error: cannot write '" << path << "': " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

int emit(const Report& report, const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = build_output_format(rc);
  const EmitOptions opts{build_scaling(rc)};
  std::ostringstream text;
  if (fmt == OutputFormat::Csv) {
    emit_csv(text, report, opts);
  } else {
    emit_json(text, report, opts);
  }
  if (rc.out) return write_atomically(*rc.out, text.str(), err) ? kExitOk : kExitIo;
  out << text.str();
  out.flush();
  if (!out) {
    err << "error: failed writing output\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_solve(const FlagValues& v, std::ostream& out, std::ostream& err) {
  const RunConfig rc = resolve(v);
  const double K = build_k(rc);
  const FilmParams film = build_film(rc);
  const RootConfig cfg = build_root_config(rc);
  const auto seed = build_seed(rc);
  build_output_format(rc);
  build_scaling(rc);

  const DispersionPoint p = solve_point(K, film, seed, cfg);

  Report report;
  report.metadata = {
      {"command", std::string("solve")},
      {"k", K},
      {"d", film.D()},
      {"nu", film.nu()},
      {"gmodel", std::string(model_tag(film.g_model()))},
      {"tol", cfg.tol_residual},
      {"max-iter", static_cast<long long>(cfg.max_iter)},
  };
  if (seed) {
    report.metadata.emplace_back("seed-re", seed->real());
    report.metadata.emplace_back("seed-im", seed->imag());
  }
  report.metadata.emplace_back("version", std::string(kVersion));
  report.points.push_back(p);
  if (!p.converged) report.failures.push_back({K, p.failure});

  const int io = emit(report, rc, out, err);
  if (io != kExitOk) return io;
  if (!p.converged) {
    err << "warning: not converged: " << p.failure << "\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_sweep(const FlagValues& v, std::ostream& out, std::ostream& err) {
  const RunConfig rc = resolve(v);
  const SweepRequest req = build_sweep_request(rc);
  build_output_format(rc);
  build_scaling(rc);

  Report report;
  try {
    report = make_report(sweep_dispersion(req));
  } catch (const SweepError& e) {
    report.metadata = request_metadata(req);
    report.metadata.emplace_back("version", std::string(kVersion));
    report.failures = e.failures();
    if (req.compare_tmm) report.tmm_points.emplace();
  }

  const int io = emit(report, rc, out, err);
  if (io != kExitOk) return io;

  bool tmm_ok = true;
  if (report.tmm_points) {
    tmm_ok = std::all_of(report.tmm_points->begin(), report.tmm_points->end(),
                         [](const SlabMode& m) { return m.converged; });
  }
  if (!report.failures.empty() || !tmm_ok) {
    err << "warning: " << report.failures.size() << " grid point(s) failed"
        << (tmm_ok ? "" : "; slab oracle did not converge everywhere") << "\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_validate(const std::string& suite, std::ostream& out) {
  const auto report = run_suite(suite);
  if (!report) throw ConfigError("unknown suite '" + suite + "'");
  char line[512];
  for (const auto& c : report->checks) {
    std::snprintf(line, sizeof line, "%s  %-62s max_error=%.3e tol=%.3e", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.max_error, c.tolerance);
    out << line;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << "suite " << report->suite << ": " << (report->passed() ? "PASS" : "FAIL") << '\n';
  return report->passed() ? kExitOk : kExitNotConverged;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface-plasmon dispersion of thin metallic films", "thinfilm"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  FlagValues solve_flags;
  auto* solve = app.add_subcommand("solve", "Solve for the mode at a single wavevector");
  solve->add_option("--k", solve_flags.rc.k, "Wavevector K = k*c/omega_p");
  solve->add_option("--seed-re", solve_flags.rc.seed_re, "Initial guess, real part");
  solve->add_option("--seed-im", solve_flags.rc.seed_im, "Initial guess, imaginary part");
  add_film_flags(solve, solve_flags);

  FlagValues sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Trace Omega(K) over a wavevector grid");
  sweep->add_option("--k-min", sweep_flags.rc.k_min, "First wavevector");
  sweep->add_option("--k-max", sweep_flags.rc.k_max, "Last wavevector");
  sweep->add_option("--k-steps", sweep_flags.rc.k_steps, "Number of grid points");
  sweep->add_option("--grid", sweep_flags.rc.grid, "linear|log");
  sweep->add_flag("--compare-tmm", sweep_flags.compare_tmm, "Add exact slab-mode columns");
  add_film_flags(sweep, sweep_flags);

  std::string suite;
  auto* validate = app.add_subcommand("validate", "Run a built-in validation suite");
  validate->add_option("--suite", suite, "closedform|expansion|tmm|impedance")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* active = solve->parsed() ? solve : sweep->parsed() ? sweep : validate;
  try {
    if (active == solve) return cmd_solve(solve_flags, out, err);
    if (active == sweep) return cmd_sweep(sweep_flags, out, err);
    return cmd_validate(suite, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace thinfilm
