#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "subdiv/diagnostics.hpp"
#include "subdiv/geometry.hpp"
#include "subdiv/nonlinear.hpp"

namespace subdiv {

/// Driver configuration for the bundled demo runs.
struct ExperimentSpec {
  std::string name;  // parabola | closed2d | trefoil
  std::vector<double> rho_values;
  int iterations = 5;
  std::filesystem::path out_dir = ".";
};

/// The fixed 15-point non-uniform sample grid of the parabola demo.
const Grid& parabola_grid();

/// Substitute closed 2D outline (58 points, strongly varying spacing) used by
/// the closed-curve demo.
const PointSequence& closed_outline_data();

/// Point of the parametric trefoil-knot surface at (u, v), tube scale r.
Point trefoil_point(double u, double v, double r);

/// Samples (x, x^2) on parabola_grid(), refines it for every rho in the spec
/// and writes curve CSV/SVG plus the per-index reproduction errors against
/// the parabola on the aligned corner-cut grid. Returns the diagnostics of
/// the largest-rho run.
DiagnosticsReport run_parabola(const ExperimentSpec& spec);

/// Closed-boundary refinement of the outline dataset for every rho, plus a
/// curvature-vs-arclength profile of the rho = 2 curve after 12 iterations.
void run_closed2d(const ExperimentSpec& spec);

/// Refines the two closed 9-point trefoil coordinate lines (v = 0 and v = pi)
/// and writes raw CSV plus front/lateral/top orthographic SVG views.
void run_trefoil(const ExperimentSpec& spec);

/// Dispatch by spec.name; unknown names throw.
void run_experiment(const ExperimentSpec& spec);

/// Default rho set for a named experiment ({0,2,6}; the v=0 trefoil line uses
/// {0,1,2} internally as its flexing is more sensitive).
std::vector<double> default_rhos(const std::string& name);

}  // namespace subdiv
