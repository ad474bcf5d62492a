#include "thinfilm/gcoeff.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "thinfilm/errors.hpp"

namespace thinfilm {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw ParseError(msg.str());
}

double parse_field(std::string_view text, std::string_view source, std::size_t line,
                   std::string_view column) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    fail(source, line, "invalid number '" + std::string(text) + "' in column " + std::string(column));
  }
  return value;
}

}  // namespace

ConstantG::ConstantG(Complex g0) : g0_(g0) {
  if (!is_finite(g0)) throw DomainError("constant G must be finite");
}

TabulatedG::TabulatedG(std::vector<GTablePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("table requires at least 2 points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].omega) || !is_finite(points_[i].g)) {
      throw DomainError("table entry " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(points_[i].omega > points_[i - 1].omega)) {
      throw DomainError("table omega values must be strictly increasing (entry " +
                        std::to_string(i) + ")");
    }
  }
}

Complex TabulatedG::interpolate(double omega) const {
  if (!(omega >= omega_min() && omega <= omega_max())) {
    std::ostringstream msg;
    msg << "Re(Omega) = " << omega << " outside tabulated range [" << omega_min() << ", "
        << omega_max() << "]";
    throw RangeError(msg.str());
  }
  const auto upper = std::lower_bound(
      points_.begin(), points_.end(), omega,
      [](const GTablePoint& p, double w) { return p.omega < w; });
  if (upper->omega == omega) return upper->g;
  const auto lower = std::prev(upper);
  const double t = (omega - lower->omega) / (upper->omega - lower->omega);
  return {lower->g.real() + t * (upper->g.real() - lower->g.real()),
          lower->g.imag() + t * (upper->g.imag() - lower->g.imag())};
}

std::string_view model_tag(const GModelSpec& model) {
  return std::visit(Overloaded{
                        [](const ZeroG&) { return std::string_view{"zero"}; },
                        [](const ConstantG&) { return std::string_view{"constant"}; },
                        [](const DrudeG&) { return std::string_view{"drude"}; },
                        [](const TabulatedG&) { return std::string_view{"table"}; },
                    },
                    model);
}

GValue g_value(const GModelSpec& model, Complex Omega, double /*K*/, double nu) {
  const Complex g = std::visit(
      Overloaded{
          [](const ZeroG&) { return Complex{}; },
          [](const ConstantG& m) { return m.g0(); },
          [&](const DrudeG&) {
            const Complex eps = epsilon_drude(Omega, nu);
            if (eps == Complex{}) {
              throw SingularityError("Drude G = 1/epsilon is singular where epsilon = 0");
            }
            return 1.0 / eps;
          },
          [&](const TabulatedG& m) { return m.interpolate(Omega.real()); },
      },
      model);
  return {g, model_tag(model)};
}

TabulatedG parse_g_table(std::istream& in, std::string_view source) {
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  std::vector<GTablePoint> points;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (!header_seen) {
      if (text != "omega,g_re,g_im") {
        fail(source, line, "expected header 'omega,g_re,g_im'");
      }
      header_seen = true;
      continue;
    }
    if (text.empty()) continue;

    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      cols.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols.size() != 3) {
      fail(source, line, "expected 3 columns, found " + std::to_string(cols.size()));
    }
    GTablePoint p;
    p.omega = parse_field(cols[0], source, line, "omega");
    p.g = {parse_field(cols[1], source, line, "g_re"), parse_field(cols[2], source, line, "g_im")};
    if (!points.empty() && !(p.omega > points.back().omega)) {
      fail(source, line, "omega values must be strictly increasing");
    }
    points.push_back(p);
  }
  if (!header_seen) fail(source, 1, "empty table");
  if (points.size() < 2) {
    fail(source, line, "table requires at least 2 points");
  }
  return TabulatedG(std::move(points));
}

GModelSpec load_g_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open G table '" + path.string() + "'");
  return parse_g_table(in, path.string());
}

}  // namespace thinfilm
