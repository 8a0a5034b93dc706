#include <doctest.h>

#include <complex>

#include "qsd/bicomplex.hpp"
#include "qsd/errors.hpp"
#include "test_util.hpp"

using qsd::Bicomplex;
using qsd::Multivector;
using qsd::UnitQuaternion;
using namespace qsd::test;

TEST_CASE("embedding the canonical directions") {
  // q = k lands on e21, i.e. coefficient -1 on e12
  const Multivector mk = qsd::embed(Bicomplex(0.0, 1.0, UnitQuaternion::qk()));
  CHECK(mk[Multivector::kE12] == -1.0);
  for (int i = 0; i < 8; ++i) {
    if (i != Multivector::kE12) CHECK(mk[i] == 0.0);
  }

  // z1 = i is the pseudoscalar
  const Multivector mi = qsd::embed(Bicomplex(std::complex<double>(0.0, 1.0)));
  CHECK(mi[Multivector::kE123] == 1.0);
}

TEST_CASE("to_bicomplex recovers explicit components") {
  const UnitQuaternion j = UnitQuaternion::qj();
  const Bicomplex w({1.0, 2.0}, {3.0, 4.0}, j);
  const Bicomplex back = qsd::to_bicomplex(qsd::embed(w), j);
  CHECK(back.z1() == w.z1());
  CHECK(back.z2() == w.z2());

  const Bicomplex s = qsd::to_bicomplex(qsd::embed(Bicomplex(5.0, 0.0, j)), UnitQuaternion::qi());
  CHECK(s.z1() == std::complex<double>(5.0));
  CHECK(s.z2() == std::complex<double>(0.0));
}

TEST_CASE("to_bicomplex rejects residues outside the subalgebra") {
  const Multivector x =
      Multivector::blade(Multivector::kE13) + Multivector::blade(Multivector::kE23);
  CHECK_THROWS_AS(qsd::to_bicomplex(x, UnitQuaternion::qj()), qsd::not_in_subalgebra_error);
}

TEST_CASE("round trip through the multivector carrier") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Bicomplex w = rng.bicomplex_in(-2.0, 2.0);
    const Bicomplex back = qsd::to_bicomplex(qsd::embed(w), w.direction());
    CHECK(approx_ulps(back.z1(), w.z1(), 4.0));
    CHECK(approx_ulps(back.z2(), w.z2(), 4.0));
  }
}

TEST_CASE("shared-direction product commutes exactly") {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const UnitQuaternion q = rng.direction();
    const Bicomplex u(rng.complex_in(-2, 2), rng.complex_in(-2, 2), q);
    const Bicomplex v(rng.complex_in(-2, 2), rng.complex_in(-2, 2), q);
    const Bicomplex uv = u * v, vu = v * u;
    CHECK(uv.z1() == vu.z1());
    CHECK(uv.z2() == vu.z2());
  }
}

TEST_CASE("mixing directions is rejected") {
  const Bicomplex u(1.0, 2.0, UnitQuaternion::qi());
  const Bicomplex v(1.0, 2.0, UnitQuaternion::qj());
  CHECK_THROWS_AS(u * v, std::invalid_argument);
  CHECK_THROWS_AS(u + v, std::invalid_argument);
}

TEST_CASE("product against the geometric-product oracle") {
  // the bicomplex shortcut must agree with the full 64-multiply kernel
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const UnitQuaternion q = rng.direction();
    const Bicomplex u(rng.complex_in(-2, 2), rng.complex_in(-2, 2), q);
    const Bicomplex v(rng.complex_in(-2, 2), rng.complex_in(-2, 2), q);
    const Bicomplex fast = u * v;
    const Bicomplex slow = qsd::to_bicomplex(qsd::embed(u) * qsd::embed(v), q);
    CHECK(rel_diff(fast, slow) <= 64 * kEps);
  }
}
