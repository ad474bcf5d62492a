#pragma once

// Command-line / config-file parameters.  Every field is optional so that
// a JSON config file and explicit flags can be merged (flags win) before
// validation.

#include <filesystem>
#include <optional>
#include <string>

#include "thinfilm/errors.hpp"
#include "thinfilm/film.hpp"
#include "thinfilm/rootfind.hpp"
#include "thinfilm/sweep.hpp"

namespace thinfilm {

/// Invalid or inconsistent run parameters (usage error).
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::optional<double> k;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::optional<int> k_steps;
  std::optional<std::string> grid;
  std::optional<double> d;
  std::optional<double> nu;
  std::optional<std::string> gmodel;
  std::optional<double> g0_re;
  std::optional<double> g0_im;
  std::optional<std::string> g_table;
  std::optional<double> seed_re;
  std::optional<double> seed_im;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<bool> compare_tmm;
  std::optional<std::string> output;
  std::optional<std::string> out;
  std::optional<double> omega_p;
  std::optional<std::string> unit_system;
};

/// Reads a JSON object whose keys are the long flag names (kebab-case).
/// Throws ConfigError on unreadable files, unknown keys or wrong types.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(const std::string& json_text, const std::string& source);

/// Field-wise merge; values present in `overrides` win.
RunConfig merge(const RunConfig& base, const RunConfig& overrides);

// Builders validate the merged values and throw ConfigError with a message
// naming the offending flag.
FilmParams build_film(const RunConfig& rc);
RootConfig build_root_config(const RunConfig& rc);
SweepRequest build_sweep_request(const RunConfig& rc);
double build_k(const RunConfig& rc);
std::optional<Complex> build_seed(const RunConfig& rc);
OutputFormat build_output_format(const RunConfig& rc);
/// Scaling for physical-unit echo columns; empty unless --omega-p is given.
std::optional<Scaling> build_scaling(const RunConfig& rc);

}  // namespace thinfilm
