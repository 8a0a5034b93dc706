#include "qsd/sweep.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qsd/errors.hpp"

namespace qsd {
namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> geometric_range(double start, double stop, int points) {
  if (!(start > 0.0) || !(stop > 0.0) || start < stop) {
    throw std::invalid_argument("h range must be positive and decreasing");
  }
  if (points < 1) throw std::invalid_argument("h range needs at least one point");
  if (points == 1) return {start};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  const double lg0 = std::log10(start);
  const double step = (std::log10(stop) - lg0) / (points - 1);
  for (int k = 0; k < points; ++k) out.push_back(std::pow(10.0, lg0 + k * step));
  return out;
}

std::vector<double> closed_grid(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  const double step = (hi - lo) / (points - 1);
  for (int k = 0; k < points; ++k) out.push_back(lo + k * step);
  return out;
}

std::vector<double> half_open_grid(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  const double step = (hi - lo) / points;
  for (int k = 0; k < points; ++k) out.push_back(lo + k * step);
  return out;
}

std::string spec_name(const BackendSpec& spec) { return backend_name(spec.backend); }

// Evaluates one grid point, mapping failures onto the status column so the
// sweep always continues.
SweepRecord evaluate_point(std::string experiment, const FunctionId& id, const std::string& fn_tag,
                           const BackendSpec& spec, Complex z, double h, double theta,
                           double phi) {
  SweepRecord rec;
  rec.experiment = std::move(experiment);
  rec.fn = fn_tag;
  rec.backend = spec_name(spec);
  rec.z_re = z.real();
  rec.z_im = z.imag();
  rec.h = h;
  rec.theta = theta;
  rec.phi = phi;
  rec.est_re = rec.est_im = rec.ref_re = rec.ref_im = rec.rel_err = kNaN;

  Complex est;
  try {
    switch (spec.backend) {
      case Backend::central:
        est = central_difference(id, z, h, spec.order);
        break;
      case Backend::csd:
        est = csd_derivative(id, z.real(), h);
        break;
      default:
        est = qsd_derivative(id, z, h, from_angles(theta, phi), spec.backend);
        break;
    }
  } catch (const non_invertible_error&) {
    rec.status = "non-invertible";
    return rec;
  } catch (const evaluation_error&) {
    rec.status = "nan-inf";
    return rec;
  }
  rec.est_re = est.real();
  rec.est_im = est.imag();

  const Complex ref = reference_derivative(id, z);
  rec.ref_re = ref.real();
  rec.ref_im = ref.imag();
  if (!std::isfinite(ref.real()) || !std::isfinite(ref.imag())) {
    rec.status = "nan-inf";
  } else if (ref != 0.0) {
    rec.rel_err = relative_error(est, ref);
  }
  return rec;
}

std::pair<double, double> effective_angles(const BackendSpec& spec,
                                           const ExperimentConfig& config) {
  if (spec.angles) return *spec.angles;
  return {config.theta.value_or(kPi / 2), config.phi.value_or(kPi / 2)};
}

}  // namespace

BackendSpec parse_backend_spec(std::string_view name) {
  if (name == "pauli2-k") return BackendSpec{Backend::pauli2, {{0.0, 0.0}}, 1};
  return BackendSpec{parse_backend(name), std::nullopt, 1};
}

std::vector<SweepRecord> run_sweep_h(const ExperimentConfig& config) {
  const FunctionId id = parse_function_tag(config.fn);
  const std::vector<double> hs = geometric_range(config.h_start, config.h_stop, config.h_points);

  std::vector<BackendSpec> backends = config.backends;
  if (backends.empty()) {
    backends = {
        {Backend::bicomplex, std::nullopt, 1},
        {Backend::multivector, std::nullopt, 1},
        {Backend::pauli2, {{kPi / 2, kPi / 2}}, 1},  // q = j
        {Backend::pauli2, {{0.0, 0.0}}, 1},          // q = k
        {Backend::real4, std::nullopt, 1},
        {Backend::central, std::nullopt, 1},
    };
  }

  std::vector<SweepRecord> records;
  records.reserve(backends.size() * hs.size());
  for (const BackendSpec& spec : backends) {
    const auto [theta, phi] = effective_angles(spec, config);
    for (const double h : hs) {
      records.push_back(evaluate_point("sweep-h", id, config.fn, spec, config.z, h, theta, phi));
    }
  }
  return records;
}

std::vector<SweepRecord> run_sweep_angle(const ExperimentConfig& config) {
  const FunctionId id = parse_function_tag(config.fn);
  const std::vector<double> thetas =
      config.theta ? std::vector<double>{*config.theta} : closed_grid(0.0, kPi, config.theta_points);
  const std::vector<double> phis =
      config.phi ? std::vector<double>{*config.phi} : half_open_grid(0.0, 2 * kPi, config.phi_points);

  std::vector<BackendSpec> backends = config.backends;
  if (backends.empty()) {
    backends = {{Backend::real4, std::nullopt, 1}, {Backend::pauli2, std::nullopt, 1}};
  }

  std::vector<SweepRecord> records;
  records.reserve(backends.size() * thetas.size() * phis.size());
  for (const BackendSpec& spec : backends) {
    for (const double theta : thetas) {
      for (const double phi : phis) {
        records.push_back(
            evaluate_point("sweep-angle", id, config.fn, spec, config.z, config.h, theta, phi));
      }
    }
  }
  return records;
}

std::vector<SweepRecord> run_grid_log(const ExperimentConfig& config) {
  if (!(config.window > 0.0)) throw std::invalid_argument("grid-log window must be positive");
  const FunctionId id = parse_function_tag("ln");

  std::vector<BackendSpec> backends = config.backends;
  if (backends.empty()) backends = {{Backend::bicomplex, std::nullopt, 1}};

  const std::vector<double> res = closed_grid(-config.window, config.window, config.grid_points);
  const std::vector<double>& ims = res;

  std::vector<SweepRecord> records;
  records.reserve(backends.size() * res.size() * ims.size());
  for (const BackendSpec& spec : backends) {
    const auto [theta, phi] = effective_angles(spec, config);
    for (const double re : res) {
      for (const double im : ims) {
        records.push_back(
            evaluate_point("grid-log", id, "ln", spec, Complex(re, im), config.h, theta, phi));
      }
    }
  }
  return records;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << "experiment,fn,backend,z_re,z_im,h,theta,phi,est_re,est_im,ref_re,ref_im,rel_err,status\n";
  for (const SweepRecord& r : records) {
    out << r.experiment << ',' << r.fn << ',' << r.backend << ',' << format_double(r.z_re) << ','
        << format_double(r.z_im) << ',' << format_double(r.h) << ',' << format_double(r.theta)
        << ',' << format_double(r.phi) << ',' << format_double(r.est_re) << ','
        << format_double(r.est_im) << ',' << format_double(r.ref_re) << ','
        << format_double(r.ref_im) << ',' << format_double(r.rel_err) << ',' << r.status << '\n';
  }
}

namespace {

void json_number(std::ostream& out, double value) {
  if (std::isfinite(value)) {
    out << format_double(value);
  } else {
    out << "null";
  }
}

}  // namespace

void write_jsonl(std::ostream& out, std::span<const SweepRecord> records) {
  for (const SweepRecord& r : records) {
    out << "{\"experiment\":\"" << r.experiment << "\",\"fn\":\"" << r.fn << "\",\"backend\":\""
        << r.backend << "\",\"z_re\":";
    json_number(out, r.z_re);
    out << ",\"z_im\":";
    json_number(out, r.z_im);
    out << ",\"h\":";
    json_number(out, r.h);
    out << ",\"theta\":";
    json_number(out, r.theta);
    out << ",\"phi\":";
    json_number(out, r.phi);
    out << ",\"est_re\":";
    json_number(out, r.est_re);
    out << ",\"est_im\":";
    json_number(out, r.est_im);
    out << ",\"ref_re\":";
    json_number(out, r.ref_re);
    out << ",\"ref_im\":";
    json_number(out, r.ref_im);
    out << ",\"rel_err\":";
    json_number(out, r.rel_err);
    out << ",\"status\":\"" << r.status << "\"}\n";
  }
}

}  // namespace qsd
