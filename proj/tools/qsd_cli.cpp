// Command-line harness for the quaternionic-step differentiation experiments.
//
// Subcommands:
//   diff         one-shot derivative of a registry function
//   sweep-h      step size vs relative error, several backends
//   sweep-angle  relative error over a (theta, phi) grid of step directions
//   grid-log     derivative of Ln on a square grid around the origin
//   lemma-check  trace formula vs imaginary-step central difference
//
// Exit codes: 0 success, 1 evaluation failure, 2 invalid arguments.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsd/derivative.hpp"
#include "qsd/errors.hpp"
#include "qsd/matrix_rep.hpp"
#include "qsd/sweep.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CommonArgs {
  std::string fn = "lyness";
  double z_re = 0.7853981633974483;   // pi/4
  double z_im = 1.0471975511965976;   // pi/3
  double h = 1e-20;
  double theta = kPi / 2;
  double phi = kPi / 2;
  std::string backend = "bicomplex";
  int order = 1;
  std::string out;
  std::string format = "csv";
};

void add_point_flags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--fn", args->fn, "function tag (see registry)")->capture_default_str();
  cmd->add_option("--z-re", args->z_re, "evaluation point, real part")->capture_default_str();
  cmd->add_option("--z-im", args->z_im, "evaluation point, imaginary part")->capture_default_str();
  cmd->add_option("--h", args->h, "step size")->capture_default_str();
}

void add_direction_flags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--theta", args->theta, "step direction polar angle in [0, pi]")
      ->capture_default_str();
  cmd->add_option("--phi", args->phi, "step direction azimuth in [0, 2*pi)")
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--out", args->out, "output path (stdout when omitted)");
  cmd->add_option("--format", args->format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
}

std::vector<qsd::BackendSpec> parse_backend_list(const std::string& csv, int order) {
  std::vector<qsd::BackendSpec> specs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    qsd::BackendSpec spec = qsd::parse_backend_spec(item);
    spec.order = order;
    specs.push_back(spec);
  }
  return specs;
}

int write_records(const std::vector<qsd::SweepRecord>& records, const CommonArgs& args) {
  std::ostringstream buf;
  if (args.format == "jsonl") {
    qsd::write_jsonl(buf, records);
  } else {
    qsd::write_csv(buf, records);
  }
  if (args.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output file: " << args.out << "\n";
      return 1;
    }
    file << buf.str();
    std::cerr << records.size() << " records -> " << args.out << "\n";
  }
  return 0;
}

int run_diff(const CommonArgs& args) {
  qsd::DiffRequest request;
  request.fn = qsd::parse_function_tag(args.fn);
  request.z = {args.z_re, args.z_im};
  request.h = args.h;
  request.direction = qsd::from_angles(args.theta, args.phi);
  request.backend = qsd::parse_backend(args.backend);
  request.order = args.order;

  const qsd::DiffResult result = qsd::differentiate(request);
  std::cout << "estimate: " << qsd::format_double(result.estimate.real()) << " "
            << qsd::format_double(result.estimate.imag()) << "\n";
  if (result.reference) {
    std::cout << "reference: " << qsd::format_double(result.reference->real()) << " "
              << qsd::format_double(result.reference->imag()) << "\n";
  }
  if (result.rel_err) {
    std::cout << "rel_err: " << qsd::format_double(*result.rel_err) << "\n";
  }
  return 0;
}

int run_lemma_check(const CommonArgs& args) {
  const qsd::FunctionId id = qsd::parse_function_tag(args.fn);
  const qsd::LemmaSides sides =
      qsd::lemma_equivalence_check(id, {args.z_re, args.z_im}, args.h, args.theta, args.phi);
  const double discrepancy = std::abs(sides.lhs - sides.rhs) / std::abs(sides.rhs);
  std::cout << "lhs: " << qsd::format_double(sides.lhs.real()) << " "
            << qsd::format_double(sides.lhs.imag()) << "\n";
  std::cout << "rhs: " << qsd::format_double(sides.rhs.real()) << " "
            << qsd::format_double(sides.rhs.imag()) << "\n";
  std::cout << "rel_discrepancy: " << qsd::format_double(discrepancy) << "\n";
  return discrepancy <= 1e-10 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic-step differentiation experiments"};
  app.require_subcommand(1);

  CommonArgs args;
  qsd::ExperimentConfig config;

  auto* diff = app.add_subcommand("diff", "one-shot derivative");
  add_point_flags(diff, &args);
  add_direction_flags(diff, &args);
  diff->add_option("--backend", args.backend,
                   "bicomplex|multivector|pauli2|real4|central|csd")
      ->capture_default_str();
  diff->add_option("--order", args.order, "difference order for the central backend")
      ->capture_default_str();

  std::string sweep_backends;
  auto* sweep_h = app.add_subcommand("sweep-h", "step-size sweep");
  add_point_flags(sweep_h, &args);
  add_direction_flags(sweep_h, &args);
  sweep_h->add_option("--h-start", config.h_start, "largest step")->capture_default_str();
  sweep_h->add_option("--h-stop", config.h_stop, "smallest step")->capture_default_str();
  sweep_h->add_option("--h-points", config.h_points, "number of geometric steps")
      ->capture_default_str();
  sweep_h->add_option("--backend", sweep_backends,
                      "comma list (default: bicomplex,multivector,pauli2,pauli2-k,real4,central)");
  sweep_h->add_option("--order", args.order, "difference order for central rows")
      ->capture_default_str();
  add_output_flags(sweep_h, &args);

  int theta_points = 20, phi_points = 20;
  auto* sweep_angle = app.add_subcommand("sweep-angle", "direction sweep");
  add_point_flags(sweep_angle, &args);
  sweep_angle->add_option("--theta-points", theta_points, "rows over [0, pi]")
      ->capture_default_str();
  sweep_angle->add_option("--phi-points", phi_points, "columns over [0, 2*pi)")
      ->capture_default_str();
  sweep_angle->add_option("--theta", args.theta, "pin theta to a single row");
  sweep_angle->add_option("--phi", args.phi, "pin phi to a single column");
  sweep_angle->add_option("--backend", sweep_backends, "comma list (default: real4,pauli2)");
  add_output_flags(sweep_angle, &args);

  auto* grid_log = app.add_subcommand("grid-log", "Ln derivative around the origin");
  grid_log->add_option("--h", args.h, "step size")->capture_default_str();
  grid_log->add_option("--window", config.window, "half-width of the square grid")
      ->capture_default_str();
  grid_log->add_option("--grid-points", config.grid_points, "points per axis")
      ->capture_default_str();
  add_direction_flags(grid_log, &args);
  grid_log->add_option("--backend", sweep_backends, "comma list (default: bicomplex)");
  add_output_flags(grid_log, &args);

  double lemma_h = 1e-3;
  auto* lemma = app.add_subcommand("lemma-check",
                                   "trace formula vs imaginary-step central difference");
  lemma->add_option("--fn", args.fn, "function tag")->capture_default_str();
  lemma->add_option("--z-re", args.z_re, "evaluation point, real part")->capture_default_str();
  lemma->add_option("--z-im", args.z_im, "evaluation point, imaginary part")
      ->capture_default_str();
  lemma->add_option("--h", lemma_h, "step size in [1e-6, 1e-1]")->capture_default_str();
  add_direction_flags(lemma, &args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    config.fn = args.fn;
    config.z = {args.z_re, args.z_im};
    config.h = args.h;
    if (!sweep_backends.empty()) config.backends = parse_backend_list(sweep_backends, args.order);
    config.format = args.format == "jsonl" ? qsd::OutputFormat::jsonl : qsd::OutputFormat::csv;

    if (diff->parsed()) return run_diff(args);
    if (lemma->parsed()) {
      args.h = lemma_h;
      return run_lemma_check(args);
    }
    if (sweep_h->parsed()) {
      if (sweep_h->count("--theta")) config.theta = args.theta;
      if (sweep_h->count("--phi")) config.phi = args.phi;
      return write_records(qsd::run_sweep_h(config), args);
    }
    if (sweep_angle->parsed()) {
      config.theta_points = theta_points;
      config.phi_points = phi_points;
      if (sweep_angle->count("--theta")) config.theta = args.theta;
      if (sweep_angle->count("--phi")) config.phi = args.phi;
      return write_records(qsd::run_sweep_angle(config), args);
    }
    if (grid_log->parsed()) {
      if (grid_log->count("--theta")) config.theta = args.theta;
      if (grid_log->count("--phi")) config.phi = args.phi;
      return write_records(qsd::run_grid_log(config), args);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
