#include "subdiv/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "subdiv/io.hpp"
#include "subdiv/lagrange.hpp"

namespace subdiv {

namespace {

const std::vector<std::string> kCurveColors = {"#2c6fbb", "#2e9e4f", "#d03a3a",
                                               "#9344bb", "#c78a22"};

std::string rho_tag(double rho) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", rho);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os << bytes;
}

void write_curve_csv(const std::filesystem::path& path,
                     const PointSequence& pts) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  write_points_csv(os, pts);
}

SvgPath path_of(const PointSequence& pts, const SvgStyle& style) {
  SvgPath p;
  p.closed = pts.boundary() == Boundary::closed;
  p.style = style;
  for (const Point& q : pts) p.pts.push_back({q[0], q[1]});
  return p;
}

PointSequence sample_parabola(const Grid& g) {
  std::vector<Point> pts;
  pts.reserve(g.size());
  for (double x : g.values()) pts.push_back(Point{x, x * x});
  return PointSequence(std::move(pts), Boundary::open);
}

}  // namespace

const Grid& parabola_grid() {
  static const Grid grid(std::vector<double>{
      -1.9381, -1.7893, -1.5751, -1.3313, -1.2075, -0.9235, -0.8321, -0.6420,
      -0.5104, -0.2734, -0.0412, 0.9514, 1.6813, 1.8065, 1.9363});
  return grid;
}

const PointSequence& closed_outline_data() {
  // Stand-in outline digitized for this repository; the spacing varies a lot
  // on purpose (dense on the two lobes and the notch, sparse on the back).
  static const PointSequence data(
      std::vector<Point>{
          {1.4850, 0.0000},   {1.4853, 0.2131},   {1.4414, 0.4246},
          {1.3527, 0.6260},   {1.2216, 0.8084},   {1.0531, 0.9638},
          {0.8550, 1.0856},   {0.6369, 1.1695},   {0.4089, 1.2143},
          {0.1842, 1.2444},   {-0.0531, 1.6164},  {-0.1796, 1.8911},
          {-0.3320, 2.1063},  {-0.4708, 2.1279},  {-0.5530, 1.9316},
          {-0.5780, 1.6366},  {-0.5988, 1.4174},  {-0.6914, 1.3978},
          {-0.9032, 1.5837},  {-1.1882, 1.8268},  {-1.3977, 1.8996},
          {-1.4087, 1.7024},  {-1.2611, 1.3604},  {-1.1027, 1.0645},
          {-1.0295, 0.8902},  {-1.0373, 0.8032},  {-1.0844, 0.7505},
          {-1.2393, 0.6041},  {-1.3299, 0.4203},  {-1.3448, 0.2195},
          {-1.3135, 0.0252},  {-1.2686, -0.1571}, {-1.2188, -0.3332},
          {-1.1539, -0.5061}, {-1.0602, -0.6705}, {-0.9210, -0.8073},
          {-0.7196, -0.8729}, {-0.6188, -0.8728}, {-0.5214, -0.8640},
          {-0.4351, -0.8606}, {-0.3626, -0.8764}, {-0.2995, -0.9175},
          {-0.2375, -0.9788}, {-0.1688, -1.0467}, {-0.0903, -1.1068},
          {-0.0031, -1.1495}, {0.2105, -1.1774},  {0.4253, -1.1500},
          {0.6698, -1.1503},  {1.0091, -1.2108},  {1.1818, -1.1795},
          {1.2664, -1.0554},  {1.2717, -0.8831},  {1.2620, -0.7241},
          {1.2807, -0.5973},  {1.3647, -0.4063},  {1.4422, -0.2111},
          {1.4846, -0.0042}},
      Boundary::closed);
  return data;
}

Point trefoil_point(double u, double v, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("trefoil_point: r must be > 0");
  const double third_turn = 2.0 * std::numbers::pi / 3.0;
  const double x = r * std::sin(3.0 * u) / (2.0 + std::cos(v));
  const double y =
      r * (std::sin(u) + 2.0 * std::sin(2.0 * u)) /
      (2.0 + std::cos(v + third_turn));
  const double z = r / 8.0 * (std::cos(u) - 2.0 * std::cos(2.0 * u)) *
                   (2.0 + std::cos(v)) * (2.0 + std::cos(v + third_turn));
  return Point{x, y, z};
}

DiagnosticsReport run_parabola(const ExperimentSpec& spec) {
  if (spec.rho_values.empty())
    throw std::invalid_argument("run_parabola: need at least one rho");
  std::filesystem::create_directories(spec.out_dir);

  const Grid& grid = parabola_grid();
  const PointSequence data = sample_parabola(grid);
  const Grid ref_grid = aligned_chaikin_grid(grid, spec.iterations);
  const PointSequence reference = sample_parabola(ref_grid);

  std::vector<SvgPath> svg_paths;
  std::vector<std::vector<double>> errors;
  double rho_max = spec.rho_values.front();
  for (std::size_t i = 0; i < spec.rho_values.size(); ++i) {
    const double rho = spec.rho_values[i];
    rho_max = std::max(rho_max, rho);
    RefineConfig cfg;
    cfg.rho = rho;
    cfg.iterations = spec.iterations;
    cfg.boundary = Boundary::open;
    const PointSequence curve = subdivide(data, cfg);
    write_curve_csv(spec.out_dir / ("curve_parabola_rho" + rho_tag(rho) + ".csv"),
                    curve);
    SvgStyle style;
    style.stroke = kCurveColors[i % kCurveColors.size()];
    svg_paths.push_back(path_of(curve, style));
    errors.push_back(reproduction_error(reference, curve));
  }
  SvgStyle marker_style;
  marker_style.stroke = "#00000000";
  marker_style.markers = true;
  svg_paths.push_back(path_of(data, marker_style));
  svg_paths.back().closed = false;
  write_file(spec.out_dir / "curve_parabola.svg", svg_document(svg_paths));

  {
    std::ofstream os(spec.out_dir / "error_parabola.csv", std::ios::binary);
    os << "i";
    for (double rho : spec.rho_values) os << ",err_rho" << rho_tag(rho);
    os << "\n";
    for (std::size_t i = 0; i < errors.front().size(); ++i) {
      os << i;
      for (const auto& col : errors) os << ',' << format_double(col[i]);
      os << "\n";
    }
  }

  RefineConfig cfg;
  cfg.rho = rho_max;
  cfg.iterations = spec.iterations;
  cfg.boundary = Boundary::open;
  DiagnosticsReport report = run_diagnostics(data, cfg);
  {
    std::ofstream os(spec.out_dir / "diagnostics_parabola.csv",
                     std::ios::binary);
    report.write_csv(os);
  }
  return report;
}

void run_closed2d(const ExperimentSpec& spec) {
  if (spec.rho_values.empty())
    throw std::invalid_argument("run_closed2d: need at least one rho");
  std::filesystem::create_directories(spec.out_dir);

  const PointSequence& data = closed_outline_data();
  std::vector<SvgPath> svg_paths;
  for (std::size_t i = 0; i < spec.rho_values.size(); ++i) {
    RefineConfig cfg;
    cfg.rho = spec.rho_values[i];
    cfg.iterations = spec.iterations;
    const PointSequence curve = subdivide(data, cfg);
    write_curve_csv(
        spec.out_dir / ("curve_closed2d_rho" + rho_tag(cfg.rho) + ".csv"),
        curve);
    SvgStyle style;
    style.stroke = kCurveColors[i % kCurveColors.size()];
    svg_paths.push_back(path_of(curve, style));
  }
  SvgStyle marker_style;
  marker_style.stroke = "#00000000";
  marker_style.markers = true;
  svg_paths.push_back(path_of(data, marker_style));
  write_file(spec.out_dir / "curve_closed2d.svg", svg_document(svg_paths));

  // Curvature profile mirroring the deep-refinement study: rho = 2, 12 levels.
  RefineConfig cfg;
  cfg.rho = 2.0;
  cfg.iterations = 12;
  const PointSequence dense = subdivide(data, cfg);
  const std::vector<double> kappa = menger_curvature(dense);
  const std::vector<double> arclen = cumulative_arclength(dense);
  std::ofstream os(spec.out_dir / "curvature_closed2d.csv", std::ios::binary);
  os << "arclength,kappa\n";
  for (std::size_t i = 0; i < kappa.size(); ++i)
    os << format_double(arclen[i]) << ',' << format_double(kappa[i]) << "\n";
}

void run_trefoil(const ExperimentSpec& spec) {
  std::filesystem::create_directories(spec.out_dir);
  struct Line {
    std::string tag;
    double v;
    std::vector<double> rhos;
  };
  const std::vector<Line> lines = {
      {"trefoil_v0", 0.0, {0.0, 1.0, 2.0}},
      {"trefoil_vpi", std::numbers::pi, {0.0, 2.0, 6.0}},
  };
  for (const Line& line : lines) {
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i)
      pts.push_back(
          trefoil_point(2.0 * std::numbers::pi * i / 9.0, line.v, 1.0));
    const PointSequence data(std::move(pts), Boundary::closed);

    const std::vector<double>& rhos =
        spec.rho_values.empty() ? line.rhos : spec.rho_values;
    std::vector<PointSequence> curves;
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      RefineConfig cfg;
      cfg.rho = rhos[i];
      cfg.iterations = spec.iterations;
      curves.push_back(subdivide(data, cfg));
      write_curve_csv(
          spec.out_dir / ("curve_" + line.tag + "_rho" + rho_tag(cfg.rho) + ".csv"),
          curves.back());
    }

    const struct {
      const char* view;
      std::size_t drop;
    } views[] = {{"front", 2}, {"lateral", 1}, {"top", 0}};
    for (const auto& view : views) {
      std::vector<SvgPath> svg_paths;
      for (std::size_t i = 0; i < curves.size(); ++i) {
        SvgStyle style;
        style.stroke = kCurveColors[i % kCurveColors.size()];
        svg_paths.push_back(project_drop_axis(curves[i], view.drop, style));
      }
      SvgStyle marker_style;
      marker_style.stroke = "#00000000";
      marker_style.markers = true;
      svg_paths.push_back(project_drop_axis(data, view.drop, marker_style));
      write_file(
          spec.out_dir / ("curve_" + line.tag + "_" + view.view + ".svg"),
          svg_document(svg_paths));
    }
  }
}

void run_experiment(const ExperimentSpec& spec) {
  if (spec.iterations < 1)
    throw std::invalid_argument("experiment: iterations must be >= 1");
  if (spec.name == "parabola") {
    run_parabola(spec);
  } else if (spec.name == "closed2d") {
    run_closed2d(spec);
  } else if (spec.name == "trefoil") {
    run_trefoil(spec);
  } else {
    throw std::invalid_argument("unknown experiment '" + spec.name + "'");
  }
}

std::vector<double> default_rhos(const std::string& name) {
  if (name == "trefoil") return {};  // per-line defaults inside run_trefoil
  return {0.0, 2.0, 6.0};
}

}  // namespace subdiv
