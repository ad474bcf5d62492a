#include "thinfilm/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace thinfilm {

namespace {

using nlohmann::json;

template <class T>
void read_key(const json& obj, const char* key, std::optional<T>& slot, const std::string& source) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, int>) {
      if (!it->is_number_integer()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!it->is_boolean()) throw ConfigError("");
    } else {
      if (!it->is_string()) throw ConfigError("");
    }
    slot = it->get<T>();
  } catch (const std::exception&) {
    throw ConfigError(source + ": key '" + key + "' has the wrong type");
  }
}

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

double positive(const std::optional<double>& v, const char* name) {
  if (!v) throw ConfigError(std::string(name) + " is required");
  if (!(std::isfinite(*v) && *v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
  return *v;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text, const std::string& source) {
  json obj;
  try {
    obj = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": invalid JSON: " + e.what());
  }
  if (!obj.is_object()) throw ConfigError(source + ": config must be a JSON object");

  static const char* const kKnown[] = {
      "k",     "k-min",   "k-max",   "k-steps", "grid",     "d",           "nu",
      "gmodel", "g0-re",  "g0-im",   "g-table", "seed-re",  "seed-im",     "tol",
      "max-iter", "compare-tmm", "output", "out", "omega-p", "unit-system"};
  for (const auto& [key, value] : obj.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw ConfigError(source + ": unknown key '" + key + "'");
    }
  }

  RunConfig rc;
  read_key(obj, "k", rc.k, source);
  read_key(obj, "k-min", rc.k_min, source);
  read_key(obj, "k-max", rc.k_max, source);
  read_key(obj, "k-steps", rc.k_steps, source);
  read_key(obj, "grid", rc.grid, source);
  read_key(obj, "d", rc.d, source);
  read_key(obj, "nu", rc.nu, source);
  read_key(obj, "gmodel", rc.gmodel, source);
  read_key(obj, "g0-re", rc.g0_re, source);
  read_key(obj, "g0-im", rc.g0_im, source);
  read_key(obj, "g-table", rc.g_table, source);
  read_key(obj, "seed-re", rc.seed_re, source);
  read_key(obj, "seed-im", rc.seed_im, source);
  read_key(obj, "tol", rc.tol, source);
  read_key(obj, "max-iter", rc.max_iter, source);
  read_key(obj, "compare-tmm", rc.compare_tmm, source);
  read_key(obj, "output", rc.output, source);
  read_key(obj, "out", rc.out, source);
  read_key(obj, "omega-p", rc.omega_p, source);
  read_key(obj, "unit-system", rc.unit_system, source);
  return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str(), path.string());
}

RunConfig merge(const RunConfig& base, const RunConfig& o) {
  RunConfig rc = base;
  take(rc.k, o.k);
  take(rc.k_min, o.k_min);
  take(rc.k_max, o.k_max);
  take(rc.k_steps, o.k_steps);
  take(rc.grid, o.grid);
  take(rc.d, o.d);
  take(rc.nu, o.nu);
  take(rc.gmodel, o.gmodel);
  take(rc.g0_re, o.g0_re);
  take(rc.g0_im, o.g0_im);
  take(rc.g_table, o.g_table);
  take(rc.seed_re, o.seed_re);
  take(rc.seed_im, o.seed_im);
  take(rc.tol, o.tol);
  take(rc.max_iter, o.max_iter);
  take(rc.compare_tmm, o.compare_tmm);
  take(rc.output, o.output);
  take(rc.out, o.out);
  take(rc.omega_p, o.omega_p);
  take(rc.unit_system, o.unit_system);
  return rc;
}

FilmParams build_film(const RunConfig& rc) {
  const double D = positive(rc.d, "d");
  const double nu = rc.nu.value_or(0.0);
  if (!(std::isfinite(nu) && nu >= 0.0)) throw ConfigError("nu must be non-negative");

  const std::string model = rc.gmodel.value_or("zero");
  GModelSpec g;
  try {
    if (model == "zero") {
      g = ZeroG{};
    } else if (model == "drude") {
      g = DrudeG{};
    } else if (model == "constant") {
      if (!rc.g0_re && !rc.g0_im) throw ConfigError("gmodel constant requires --g0-re/--g0-im");
      g = ConstantG(Complex{rc.g0_re.value_or(0.0), rc.g0_im.value_or(0.0)});
    } else if (model == "table") {
      if (!rc.g_table) throw ConfigError("gmodel table requires --g-table");
      g = load_g_table(*rc.g_table);
    } else {
      throw ConfigError("unknown gmodel '" + model + "' (expected zero|constant|drude|table)");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return FilmParams(D, nu, std::move(g));
}

RootConfig build_root_config(const RunConfig& rc) {
  RootConfig cfg;
  if (rc.tol) cfg.tol_residual = positive(rc.tol, "tol");
  if (rc.max_iter) {
    if (*rc.max_iter <= 0) throw ConfigError("max-iter must be positive");
    cfg.max_iter = *rc.max_iter;
  }
  return cfg;
}

SweepRequest build_sweep_request(const RunConfig& rc) {
  SweepRequest req;
  req.k_min = positive(rc.k_min, "k-min");
  req.k_max = positive(rc.k_max, "k-max");
  if (!(req.k_max > req.k_min)) throw ConfigError("k-max must be greater than k-min");
  req.n_points = rc.k_steps.value_or(50);
  if (req.n_points < 2) throw ConfigError("k-steps must be at least 2");
  const std::string grid = rc.grid.value_or("linear");
  if (grid == "linear") {
    req.grid = GridKind::Linear;
  } else if (grid == "log") {
    req.grid = GridKind::Logarithmic;
  } else {
    throw ConfigError("unknown grid '" + grid + "' (expected linear|log)");
  }
  req.film = build_film(rc);
  req.cfg = build_root_config(rc);
  req.compare_tmm = rc.compare_tmm.value_or(false);
  return req;
}

double build_k(const RunConfig& rc) { return positive(rc.k, "k"); }

std::optional<Complex> build_seed(const RunConfig& rc) {
  if (!rc.seed_re && !rc.seed_im) return std::nullopt;
  const Complex seed{rc.seed_re.value_or(0.0), rc.seed_im.value_or(0.0)};
  if (!(std::isfinite(seed.real()) && std::isfinite(seed.imag()))) {
    throw ConfigError("seed must be finite");
  }
  if (seed == Complex{}) throw ConfigError("seed at the origin is not allowed");
  return seed;
}

OutputFormat build_output_format(const RunConfig& rc) {
  const std::string fmt = rc.output.value_or("csv");
  if (fmt == "csv") return OutputFormat::Csv;
  if (fmt == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + fmt + "' (expected csv|json)");
}

std::optional<Scaling> build_scaling(const RunConfig& rc) {
  if (!rc.omega_p) {
    if (rc.unit_system) throw ConfigError("unit-system requires omega-p");
    return std::nullopt;
  }
  const double wp = positive(rc.omega_p, "omega-p");
  const std::string units = rc.unit_system.value_or("gaussian");
  if (units == "gaussian") return Scaling(wp, kLightSpeedCgs);
  if (units == "si") return Scaling(wp, 2.99792458e8);
  throw ConfigError("unknown unit-system '" + units + "' (expected gaussian|si)");
}

}  // namespace thinfilm
