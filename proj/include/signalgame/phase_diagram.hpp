#pragma once

#include <string>
#include <vector>

#include "signalgame/regime.hpp"

namespace signalgame {

/// Evenly spaced axis, min + (max - min) * i / (steps - 1).
struct Axis {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  double at(int i) const;
  void validate(const char* name) const;
};

/// Parses "min:max:steps".
Axis parse_axis(const std::string& text);

struct PhaseCell {
  double a = 0.0;
  double rho = 0.0;
  Regime regime = Regime::NonInformative;
  double p_star = 0.0;  ///< +inf for informative cells at rho = 0 (free power)
};

/// Scalar noisy game over an (a, rho) grid. Cells are stored a-major, rho
/// minor, so rows are already sorted by (a, rho).
struct PhaseDiagramGrid {
  Axis a_axis;
  Axis rho_axis;
  double sigma_m2 = 1.0;
  double sigma_w2 = 1.0;
  std::vector<PhaseCell> cells;
};

PhaseCell phase_cell(double a, double rho, double sigma_m2, double sigma_w2);

/// Cells evaluated in parallel when OpenMP is available.
PhaseDiagramGrid phase_diagram(const Axis& a_axis, const Axis& rho_axis, double sigma_m2,
                               double sigma_w2);

/// Serial evaluation, kept as the reference for phase_diagram.
PhaseDiagramGrid phase_diagram_reference(const Axis& a_axis, const Axis& rho_axis,
                                         double sigma_m2, double sigma_w2);

/// CSV with header `a,rho,regime,p_star`, shortest round-trip numbers.
std::string phase_diagram_csv(const PhaseDiagramGrid& grid);

}  // namespace signalgame
