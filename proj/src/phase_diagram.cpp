#include "signalgame/phase_diagram.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "signalgame/error.hpp"
#include "signalgame/noisy.hpp"
#include "signalgame/numfmt.hpp"

namespace signalgame {

double Axis::at(int i) const {
  if (steps <= 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void Axis::validate(const char* name) const {
  const std::string label(name);
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw Error(ErrorKind::ParseError, label + " range must be finite");
  }
  if (steps < 1) throw Error(ErrorKind::ParseError, label + " steps must be >= 1");
  if (min > max) throw Error(ErrorKind::ParseError, label + " range must satisfy min <= max");
  if (steps == 1 && min != max) {
    throw Error(ErrorKind::ParseError, label + " range with one step must have min == max");
  }
}

Axis parse_axis(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw Error(ErrorKind::ParseError, "expected min:max:steps, got '" + text + "'");
  }
  const auto lo = parse_double(std::string_view(text).substr(0, first));
  const auto hi = parse_double(std::string_view(text).substr(first + 1, second - first - 1));
  const std::string steps_text = text.substr(second + 1);
  int steps = 0;
  const auto res = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), steps);
  if (!lo || !hi || res.ec != std::errc() || res.ptr != steps_text.data() + steps_text.size()) {
    throw Error(ErrorKind::ParseError, "expected min:max:steps, got '" + text + "'");
  }
  return Axis{*lo, *hi, steps};
}

PhaseCell phase_cell(double a, double rho, double sigma_m2, double sigma_w2) {
  PhaseCell cell{a, rho, Regime::NonInformative, 0.0};
  if (rho == 0.0) {
    // Free power: any a above 1/2 pushes P* to infinity.
    if (a > 0.5) {
      cell.regime = Regime::Informative;
      cell.p_star = std::numeric_limits<double>::infinity();
    }
    return cell;
  }
  const noisy::PowerSolution sol = noisy::scalar_power(a, 0.0, sigma_m2, sigma_w2, rho);
  cell.regime = sol.regime;
  cell.p_star = sol.P_star;
  return cell;
}

namespace {

void validate_grid(const Axis& a_axis, const Axis& rho_axis, double sigma_m2, double sigma_w2) {
  a_axis.validate("a");
  rho_axis.validate("rho");
  if (rho_axis.min < 0.0) throw Error(ErrorKind::ParseError, "rho range must be >= 0");
  if (!(sigma_m2 > 0.0) || !(sigma_w2 > 0.0) || !std::isfinite(sigma_m2) ||
      !std::isfinite(sigma_w2)) {
    throw Error(ErrorKind::InvalidScenario, "variances must be positive and finite");
  }
}

}  // namespace

PhaseDiagramGrid phase_diagram(const Axis& a_axis, const Axis& rho_axis, double sigma_m2,
                               double sigma_w2) {
  validate_grid(a_axis, rho_axis, sigma_m2, sigma_w2);
  PhaseDiagramGrid grid{a_axis, rho_axis, sigma_m2, sigma_w2, {}};
  const long rows = a_axis.steps;
  const long cols = rho_axis.steps;
  grid.cells.resize(static_cast<std::size_t>(rows * cols));
#pragma omp parallel for collapse(2) schedule(static)
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      grid.cells[static_cast<std::size_t>(i * cols + j)] =
          phase_cell(a_axis.at(static_cast<int>(i)), rho_axis.at(static_cast<int>(j)),
                     sigma_m2, sigma_w2);
    }
  }
  return grid;
}

PhaseDiagramGrid phase_diagram_reference(const Axis& a_axis, const Axis& rho_axis,
                                         double sigma_m2, double sigma_w2) {
  validate_grid(a_axis, rho_axis, sigma_m2, sigma_w2);
  PhaseDiagramGrid grid{a_axis, rho_axis, sigma_m2, sigma_w2, {}};
  for (int i = 0; i < a_axis.steps; ++i) {
    for (int j = 0; j < rho_axis.steps; ++j) {
      grid.cells.push_back(phase_cell(a_axis.at(i), rho_axis.at(j), sigma_m2, sigma_w2));
    }
  }
  return grid;
}

std::string phase_diagram_csv(const PhaseDiagramGrid& grid) {
  std::ostringstream out;
  out << "a,rho,regime,p_star\n";
  for (const PhaseCell& c : grid.cells) {
    out << format_double(c.a) << ',' << format_double(c.rho) << ',' << to_string(c.regime)
        << ',' << format_double(c.p_star) << '\n';
  }
  return out.str();
}

}  // namespace signalgame
