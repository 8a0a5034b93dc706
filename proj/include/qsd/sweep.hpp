#ifndef QSD_SWEEP_HPP
#define QSD_SWEEP_HPP

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsd/derivative.hpp"

namespace qsd {

// One row of experimental output. Estimates, references and the relative
// error may be NaN on failed points; status then records the reason
// ("non-invertible" or "nan-inf", "ok" otherwise).
struct SweepRecord {
  std::string experiment;
  std::string fn;
  std::string backend;
  double z_re = 0.0, z_im = 0.0;
  double h = 0.0;
  double theta = 0.0, phi = 0.0;
  double est_re = 0.0, est_im = 0.0;
  double ref_re = 0.0, ref_im = 0.0;
  double rel_err = 0.0;
  std::string status = "ok";
};

// Backend selection for one sweep row group; `angles` overrides the
// configured step direction (used for the fixed j and k rows of the h-sweep).
struct BackendSpec {
  Backend backend = Backend::bicomplex;
  std::optional<std::pair<double, double>> angles;  // (theta, phi)
  int order = 1;                                    // central differences
};

// "bicomplex", "multivector", "pauli2", "pauli2-k", "real4", "central", "csd"
BackendSpec parse_backend_spec(std::string_view name);

enum class OutputFormat { csv, jsonl };

struct ExperimentConfig {
  std::string fn = "lyness";
  std::complex<double> z{0.7853981633974483, 1.0471975511965976};  // pi/4 + pi/3 i
  double h = 1e-20;

  // h-sweep: geometric range from h_start down to h_stop
  double h_start = 1e-1;
  double h_stop = 1e-20;
  int h_points = 20;

  // angular sweep: theta in [0, pi] closed, phi in [0, 2 pi) half-open;
  // a fixed value pins that axis to a single row
  int theta_points = 20;
  int phi_points = 20;
  std::optional<double> theta;
  std::optional<double> phi;

  // logarithm grid study around the origin
  double window = 1e-15;
  int grid_points = 41;

  std::vector<BackendSpec> backends;  // empty selects the experiment default

  OutputFormat format = OutputFormat::csv;
};

// Emits one record per (backend, h) over the geometric h-range, ordered by
// backend then descending h. Default backends: bicomplex, multivector,
// pauli2 (q = j), pauli2 (q = k), real4, central(1).
std::vector<SweepRecord> run_sweep_h(const ExperimentConfig& config);

// Emits one record per (backend, theta, phi). Default backends: real4,
// pauli2.
std::vector<SweepRecord> run_sweep_angle(const ExperimentConfig& config);

// Differentiates Ln over a square complex grid |Re z|, |Im z| <= window;
// reference is 1/z. The z = 0 row records a failure and the run continues.
std::vector<SweepRecord> run_grid_log(const ExperimentConfig& config);

// Shortest round-trip decimal form of a binary64 (so files reload exactly);
// NaN normalizes to "nan".
std::string format_double(double value);

void write_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_jsonl(std::ostream& out, std::span<const SweepRecord> records);

}  // namespace qsd

#endif  // QSD_SWEEP_HPP
