#include "qsd/multivector.hpp"

#include <stdexcept>

namespace qsd {
namespace {

// Blade products in storage order {1, e1, e2, e3, e12, e13, e23, e123},
// transcribed from the Cayley table of G(R^3). Entry [r][c] gives the result
// of blade_r * blade_c. A generation test rebuilds this table from vector
// anticommutation and compares entry for entry.
constexpr std::int8_t kSign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
    {+1, -1, -1, +1, +1, -1, -1, +1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
    {+1, -1, -1, +1, +1, -1, -1, +1},
    {+1, +1, -1, +1, -1, +1, -1, -1},
    {+1, +1, -1, +1, -1, +1, -1, -1},
};

constexpr std::uint8_t kIndex[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 4, 5, 2, 3, 7, 6},
    {2, 4, 0, 6, 1, 7, 3, 5},
    {3, 5, 6, 0, 7, 1, 2, 4},
    {4, 2, 1, 7, 0, 6, 5, 3},
    {5, 3, 7, 1, 6, 0, 4, 2},
    {6, 7, 3, 2, 5, 4, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

constexpr int kGrade[8] = {0, 1, 1, 1, 2, 2, 2, 3};

}  // namespace

Multivector Multivector::blade(int index, double value) {
  if (index < 0 || index > 7) {
    throw std::invalid_argument("Multivector::blade: index out of range");
  }
  Multivector m;
  m.c_[static_cast<std::size_t>(index)] = value;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector out;
  for (std::size_t r = 0; r < 8; ++r) {
    const double ar = a.c_[r];
    if (ar == 0.0) continue;
    for (std::size_t c = 0; c < 8; ++c) {
      const double bc = b.c_[c];
      if (bc == 0.0) continue;
      out.c_[kIndex[r][c]] += static_cast<double>(kSign[r][c]) * ar * bc;
    }
  }
  return out;
}

Multivector grade(const Multivector& x, int r) {
  if (r < 0 || r > 3) {
    throw std::invalid_argument("grade: r must lie in 0..3");
  }
  Multivector out;
  for (int i = 0; i < 8; ++i) {
    if (kGrade[i] == r) out[i] = x[i];
  }
  return out;
}

std::complex<double> complex_part(const Multivector& x) {
  return {x[Multivector::kScalar], x[Multivector::kE123]};
}

Multivector reverse(const Multivector& x) {
  Multivector out = x;
  for (int i = 0; i < 8; ++i) {
    if (kGrade[i] >= 2) out[i] = -out[i];
  }
  return out;
}

Multivector embed(const UnitQuaternion& q) {
  // qi = e32 = -e23, qj = e13, qk = e21 = -e12.
  Multivector m;
  m[Multivector::kE23] = -q.ci();
  m[Multivector::kE13] = q.cj();
  m[Multivector::kE12] = -q.ck();
  return m;
}

}  // namespace qsd
