#include "qsd/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsd/errors.hpp"

namespace qsd {
namespace {

void require_same_direction(const Bicomplex& u, const Bicomplex& v) {
  if (u.direction() != v.direction()) {
    throw std::invalid_argument("Bicomplex: operands carry different step directions");
  }
}

}  // namespace

Bicomplex operator+(const Bicomplex& u, const Bicomplex& v) {
  require_same_direction(u, v);
  return Bicomplex(u.z1_ + v.z1_, u.z2_ + v.z2_, u.dir_);
}

Bicomplex operator-(const Bicomplex& u, const Bicomplex& v) {
  require_same_direction(u, v);
  return Bicomplex(u.z1_ - v.z1_, u.z2_ - v.z2_, u.dir_);
}

Bicomplex operator*(const Bicomplex& u, const Bicomplex& v) {
  require_same_direction(u, v);
  // q^2 = -1 with everything commuting, so this is a complex-over-complex
  // product. The symmetric form makes commutativity exact coefficient-wise.
  return Bicomplex(u.z1_ * v.z1_ - u.z2_ * v.z2_, u.z1_ * v.z2_ + u.z2_ * v.z1_, u.dir_);
}

Multivector embed(const Bicomplex& w) {
  const UnitQuaternion& q = w.direction();
  Multivector m;
  m[Multivector::kScalar] = w.a();
  m[Multivector::kE123] = w.b();
  // c * q on the bivectors (qi = -e23, qj = e13, qk = -e12)
  m[Multivector::kE23] = -w.c() * q.ci();
  m[Multivector::kE13] = w.c() * q.cj();
  m[Multivector::kE12] = -w.c() * q.ck();
  // d * iq on the vectors (i*qi = e1, i*qj = e2, i*qk = e3)
  m[Multivector::kE1] = w.d() * q.ci();
  m[Multivector::kE2] = w.d() * q.cj();
  m[Multivector::kE3] = w.d() * q.ck();
  return m;
}

Bicomplex to_bicomplex(const Multivector& x, const UnitQuaternion& direction, double tol) {
  const std::complex<double> z1 = complex_part(x);
  // x * q^{-1} = x * (-q) moves the q-channel onto the complex part.
  const Multivector qinv = -embed(direction);
  const std::complex<double> z2 = complex_part(x * qinv);
  const Bicomplex w(z1, z2, direction);

  double max_abs = 0.0;
  for (int i = 0; i < 8; ++i) max_abs = std::max(max_abs, std::abs(x[i]));
  if (tol < 0.0) tol = 1e-12 * max_abs;

  const Multivector residue = x - embed(w);
  for (int i = 0; i < 8; ++i) {
    if (std::abs(residue[i]) > tol) {
      throw not_in_subalgebra_error(
          "to_bicomplex: multivector has a residue outside span{1, i, q, iq}");
    }
  }
  return w;
}

}  // namespace qsd
