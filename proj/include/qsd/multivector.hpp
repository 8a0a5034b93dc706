#ifndef QSD_MULTIVECTOR_HPP
#define QSD_MULTIVECTOR_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "qsd/direction.hpp"

namespace qsd {

// Element of the geometric algebra of 3D Euclidean space, G(R^3).
// Coefficients are stored against the canonical blades in the fixed order
//   {1, e1, e2, e3, e12, e13, e23, e123}.
// The quaternion units are identified as qi = e32, qj = e13, qk = e21 and the
// pseudoscalar e123 plays the role of the commuting imaginary unit.
class Multivector {
 public:
  enum Blade : int {
    kScalar = 0,
    kE1 = 1,
    kE2 = 2,
    kE3 = 3,
    kE12 = 4,
    kE13 = 5,
    kE23 = 6,
    kE123 = 7,
  };

  Multivector() : c_{} {}
  explicit Multivector(const std::array<double, 8>& coeffs) : c_(coeffs) {}

  static Multivector scalar(double s) {
    Multivector m;
    m.c_[kScalar] = s;
    return m;
  }
  static Multivector blade(int index, double value = 1.0);

  double operator[](int index) const { return c_[static_cast<std::size_t>(index)]; }
  double& operator[](int index) { return c_[static_cast<std::size_t>(index)]; }
  const std::array<double, 8>& coefficients() const { return c_; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator-(const Multivector& a) { return a * -1.0; }

  // Geometric product, driven by the precomputed blade table.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

 private:
  std::array<double, 8> c_;
};

inline Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

// Projection onto the grade-r part, r in {0,1,2,3}.
Multivector grade(const Multivector& x, int r);

// Complex part <x>_0 + <x>_3, returned as scalar + e123 * i.
std::complex<double> complex_part(const Multivector& x);

// Reversion (the ~ operation): sign (+,+,-,-) on grades (0,1,2,3).
Multivector reverse(const Multivector& x);

// The bivector c_i*e32 + c_j*e13 + c_k*e21 induced by a step direction.
Multivector embed(const UnitQuaternion& q);

}  // namespace qsd

#endif  // QSD_MULTIVECTOR_HPP
