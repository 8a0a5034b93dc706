#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qsd/sweep.hpp"
#include "test_util.hpp"

using qsd::Backend;
using qsd::ExperimentConfig;
using qsd::SweepRecord;
using namespace qsd::test;

namespace {

std::string csv_of(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  qsd::write_csv(out, records);
  return out.str();
}

}  // namespace

TEST_CASE("shortest round-trip formatting") {
  CHECK(qsd::format_double(1.0) == "1");
  CHECK(qsd::format_double(1e-20) == "1e-20");
  CHECK(qsd::format_double(0.1) == "0.1");
  CHECK(qsd::format_double(-2.5) == "-2.5");
  CHECK(qsd::format_double(std::nan("")) == "nan");
  // round trip is exact
  const double x = 0.7853981633974483;
  CHECK(std::stod(qsd::format_double(x)) == x);
  const double tiny = 6.123233995736766e-17;
  CHECK(std::stod(qsd::format_double(tiny)) == tiny);
}

TEST_CASE("h sweep emits the default backends in deterministic order") {
  ExperimentConfig config;
  config.h_points = 20;
  const auto records = qsd::run_sweep_h(config);
  // six backend groups x 20 steps, failures included
  CHECK(records.size() == 6 * 20);

  CHECK(records[0].backend == "bicomplex");
  CHECK(records[0].h == doctest::Approx(1e-1));
  CHECK(records[19].h == doctest::Approx(1e-20).epsilon(1e-3));
  CHECK(records[20].backend == "multivector");
  CHECK(records[40].backend == "pauli2");
  CHECK(records[40].theta == doctest::Approx(kPi / 2));
  CHECK(records[60].backend == "pauli2");
  CHECK(records[60].theta == 0.0);  // the k-direction row group
  CHECK(records[80].backend == "real4");
  CHECK(records[100].backend == "central");

  // h decreases within each group
  for (std::size_t i = 1; i < 20; ++i) CHECK(records[i].h < records[i - 1].h);

  // byte-identical reruns
  CHECK(csv_of(records) == csv_of(qsd::run_sweep_h(config)));
}

TEST_CASE("h sweep on the trial function reproduces the convergence picture") {
  ExperimentConfig config;
  const auto records = qsd::run_sweep_h(config);

  double qsd_floor = 1e300;
  double central_min = 1e300;
  for (const auto& r : records) {
    if (r.backend == "bicomplex") qsd_floor = std::min(qsd_floor, r.rel_err);
    if (r.backend == "central" && std::isfinite(r.rel_err)) {
      central_min = std::min(central_min, r.rel_err);
    }
  }
  CHECK(qsd_floor <= 1e-13);
  CHECK(central_min > 1e-13);  // finite differences never reach the floor

  // the k-direction 2x2 rows behave like the finite difference: no floor
  double pauli_k_min = 1e300;
  for (const auto& r : records) {
    if (r.backend == "pauli2" && r.theta == 0.0 && std::isfinite(r.rel_err)) {
      pauli_k_min = std::min(pauli_k_min, r.rel_err);
    }
  }
  CHECK(pauli_k_min > 1e-13);
}

TEST_CASE("single point h range") {
  ExperimentConfig config;
  config.h_points = 1;
  config.backends = {{Backend::bicomplex, std::nullopt, 1}};
  const auto records = qsd::run_sweep_h(config);
  CHECK(records.size() == 1);
  CHECK(records[0].h == 0.1);
}

TEST_CASE("exp at the origin sweeps to exact zeros") {
  ExperimentConfig config;
  config.fn = "exp";
  config.z = {0.0, 0.0};
  config.h_start = 1e-8;  // below the O(h^2) remainder of sin(h)/h
  config.h_stop = 1e-20;
  config.h_points = 13;
  config.backends = {{Backend::bicomplex, std::nullopt, 1}};
  for (const auto& r : qsd::run_sweep_h(config)) {
    CHECK(r.status == "ok");
    CHECK(r.rel_err <= 4 * kEps);
  }
}

TEST_CASE("angle sweep grids") {
  ExperimentConfig config;
  config.theta_points = 5;
  config.phi_points = 4;
  const auto records = qsd::run_sweep_angle(config);
  CHECK(records.size() == 2 * 5 * 4);  // real4 + pauli2 defaults

  // theta closed on [0, pi], phi half-open on [0, 2 pi)
  CHECK(records[0].theta == 0.0);
  CHECK(records[16].theta == kPi);
  CHECK(records[0].phi == 0.0);
  CHECK(records[3].phi == doctest::Approx(3.0 * kPi / 2));

  // a pinned 1x1 grid yields a single record per backend
  ExperimentConfig pinned;
  pinned.theta = kPi / 2;
  pinned.phi = kPi / 2;
  pinned.backends = {{Backend::pauli2, std::nullopt, 1}};
  const auto single = qsd::run_sweep_angle(pinned);
  CHECK(single.size() == 1);
  CHECK(single[0].status == "ok");
  CHECK(single[0].rel_err < 1e-13);
}

TEST_CASE("log grid records the pole as a failure and keeps going") {
  ExperimentConfig config;
  config.window = 1e-10;
  config.grid_points = 3;
  const auto records = qsd::run_grid_log(config);
  CHECK(records.size() == 9);

  int failures = 0;
  for (const auto& r : records) {
    CHECK(r.fn == "ln");
    if (r.z_re == 0.0 && r.z_im == 0.0) {
      ++failures;
      CHECK(r.status == "nan-inf");
      CHECK(std::isnan(r.rel_err));
    } else {
      CHECK(r.status == "ok");
      CHECK(r.rel_err < 1e-9);
    }
  }
  CHECK(failures == 1);
}

TEST_CASE("csv schema exactly as documented") {
  ExperimentConfig config;
  config.h_points = 1;
  config.backends = {{Backend::bicomplex, std::nullopt, 1}};
  const std::string csv = csv_of(qsd::run_sweep_h(config));
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "experiment,fn,backend,z_re,z_im,h,theta,phi,est_re,est_im,ref_re,ref_im,rel_err,status");

  // one header + one record
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("jsonl uses the same field names and null for non-finite") {
  ExperimentConfig config;
  config.window = 1e-10;
  config.grid_points = 3;
  const auto records = qsd::run_grid_log(config);
  std::ostringstream out;
  qsd::write_jsonl(out, records);
  const std::string text = out.str();
  CHECK(text.find("\"experiment\":\"grid-log\"") != std::string::npos);
  CHECK(text.find("\"rel_err\":null") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}

TEST_CASE("backend spec parsing") {
  CHECK(qsd::parse_backend_spec("bicomplex").backend == Backend::bicomplex);
  const auto k = qsd::parse_backend_spec("pauli2-k");
  CHECK(k.backend == Backend::pauli2);
  REQUIRE(k.angles.has_value());
  CHECK(k.angles->first == 0.0);
  CHECK_THROWS_AS(qsd::parse_backend_spec("what"), std::invalid_argument);
}

TEST_CASE("invalid configurations are rejected") {
  ExperimentConfig config;
  config.h_start = 1e-20;
  config.h_stop = 1e-1;  // increasing
  CHECK_THROWS_AS(qsd::run_sweep_h(config), std::invalid_argument);

  ExperimentConfig bad_grid;
  bad_grid.grid_points = 0;
  CHECK_THROWS_AS(qsd::run_grid_log(bad_grid), std::invalid_argument);

  ExperimentConfig bad_window;
  bad_window.window = -1.0;
  CHECK_THROWS_AS(qsd::run_grid_log(bad_window), std::invalid_argument);
}
