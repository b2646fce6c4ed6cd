#include "subdiv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subdiv/diagnostics.hpp"
#include "subdiv/experiments.hpp"
#include "subdiv/io.hpp"
#include "subdiv/nonlinear.hpp"

namespace subdiv {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << bytes;
}

std::filesystem::path effective_out_dir(const std::string& cli_value) {
  if (const char* env = std::getenv("SUBDIV_OUT_DIR"); env && *env)
    return env;
  return cli_value;
}

struct RefineArgs {
  std::string input;
  std::string out_dir = ".";
  double rho = 2.0;
  int iterations = 5;
  std::string boundary = "closed";
  double tol = 1e-12;
};

int do_refine(const RefineArgs& args, bool with_diagnostics) {
  if (args.rho < 0.0) {
    std::cerr << "rho must be non-negative\n";
    return 1;
  }
  if (args.iterations < 0) {
    std::cerr << "iterations must be non-negative\n";
    return 1;
  }
  if (args.tol < 0.0) {
    std::cerr << "tolerance must be non-negative\n";
    return 1;
  }
  RefineConfig cfg;
  cfg.rho = args.rho;
  cfg.iterations = args.iterations;
  cfg.boundary = args.boundary == "open" ? Boundary::open : Boundary::closed;
  cfg.degeneracy_tol = args.tol;

  const PointSequence data = parse_points(read_file(args.input), cfg.boundary);
  const std::filesystem::path out = effective_out_dir(args.out_dir);
  std::filesystem::create_directories(out);

  const PointSequence curve = subdivide(data, cfg);
  {
    std::ofstream os(out / "curve.csv", std::ios::binary);
    write_points_csv(os, curve);
  }
  if (curve.dim() == 2) {
    write_file(out / "curve.svg", emit_svg(curve));
  } else if (curve.dim() == 3) {
    write_file(out / "curve.svg",
               svg_document({project_drop_axis(curve, 2, SvgStyle{})}));
  }
  if (with_diagnostics) {
    const DiagnosticsReport report = run_diagnostics(data, cfg);
    std::ofstream os(out / "diagnostics.csv", std::ios::binary);
    report.write_csv(os);
  }
  std::cout << "wrote " << (out / "curve.csv").string() << " ("
            << curve.size() << " points)\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Curve refinement by grid-free non-linear subdivision"};
  app.require_subcommand(1);

  RefineArgs refine_args;
  auto add_refine_options = [&](CLI::App* cmd) {
    cmd->add_option("input", refine_args.input, "input points (CSV or JSON)")
        ->required();
    cmd->add_option("out", refine_args.out_dir, "output directory");
    cmd->add_option("--rho", refine_args.rho, "flexibility parameter");
    cmd->add_option("--iters", refine_args.iterations, "refinement steps");
    cmd->add_option("--boundary", refine_args.boundary, "open or closed")
        ->check(CLI::IsMember({"open", "closed"}));
    cmd->add_option("--tol", refine_args.tol, "degeneracy tolerance");
  };
  CLI::App* refine = app.add_subcommand("refine", "refine a point sequence");
  add_refine_options(refine);
  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "refine and write per-level diagnostics");
  add_refine_options(diagnose);

  ExperimentSpec spec;
  CLI::App* experiment =
      app.add_subcommand("experiment", "run a bundled experiment");
  experiment
      ->add_option("name", spec.name, "parabola, closed2d or trefoil")
      ->required();
  std::string exp_out = ".";
  experiment->add_option("out", exp_out, "output directory");
  experiment->add_option("--rho", spec.rho_values,
                         "rho values (default per experiment)");
  experiment->add_option("--iters", spec.iterations, "refinement steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (refine->parsed()) return do_refine(refine_args, false);
    if (diagnose->parsed()) return do_refine(refine_args, true);
    if (experiment->parsed()) {
      if (spec.rho_values.empty()) spec.rho_values = default_rhos(spec.name);
      for (double rho : spec.rho_values) {
        if (rho < 0.0) {
          std::cerr << "rho must be non-negative\n";
          return 1;
        }
      }
      spec.out_dir = effective_out_dir(exp_out);
      run_experiment(spec);
      std::cout << "experiment '" << spec.name << "' written to "
                << spec.out_dir.string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace subdiv
