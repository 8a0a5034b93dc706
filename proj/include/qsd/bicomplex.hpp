#ifndef QSD_BICOMPLEX_HPP
#define QSD_BICOMPLEX_HPP

#include <complex>

#include "qsd/direction.hpp"
#include "qsd/multivector.hpp"

namespace qsd {

// Element w = z1 + q*z2 of the commutative subalgebra span{1, i, q, iq},
// with z1, z2 complex over the pseudoscalar i and q the attached step
// direction. In coordinate form w = a + b*i + c*q + d*iq with
// z1 = a + b*i and z2 = c + d*i.
//
// All arithmetic keeps the direction symbolic; two operands must carry the
// same direction. This is the preferred computational carrier: a product
// costs 4 complex multiplies and keeps the h-order channel in its own slot.
class Bicomplex {
 public:
  using Complex = std::complex<double>;

  explicit Bicomplex(Complex z1 = 0.0, Complex z2 = 0.0,
                     UnitQuaternion direction = UnitQuaternion::qj())
      : z1_(z1), z2_(z2), dir_(direction) {}

  Complex z1() const { return z1_; }
  Complex z2() const { return z2_; }
  const UnitQuaternion& direction() const { return dir_; }

  // (a, b, c, d) coordinate accessors.
  double a() const { return z1_.real(); }
  double b() const { return z1_.imag(); }
  double c() const { return z2_.real(); }
  double d() const { return z2_.imag(); }

  // A value with the same direction but different components.
  Bicomplex with(Complex z1, Complex z2 = 0.0) const { return Bicomplex(z1, z2, dir_); }

  Bicomplex operator-() const { return Bicomplex(-z1_, -z2_, dir_); }

  friend Bicomplex operator+(const Bicomplex& u, const Bicomplex& v);
  friend Bicomplex operator-(const Bicomplex& u, const Bicomplex& v);
  friend Bicomplex operator*(const Bicomplex& u, const Bicomplex& v);

  friend Bicomplex operator+(const Bicomplex& u, Complex s) { return u.with(u.z1_ + s, u.z2_); }
  friend Bicomplex operator+(Complex s, const Bicomplex& u) { return u + s; }
  friend Bicomplex operator-(const Bicomplex& u, Complex s) { return u.with(u.z1_ - s, u.z2_); }
  friend Bicomplex operator-(Complex s, const Bicomplex& u) { return u.with(s - u.z1_, -u.z2_); }
  friend Bicomplex operator*(const Bicomplex& u, Complex s) {
    return Bicomplex(u.z1_ * s, u.z2_ * s, u.dir_);
  }
  friend Bicomplex operator*(Complex s, const Bicomplex& u) { return u * s; }
  friend Bicomplex operator+(const Bicomplex& u, double s) { return u + Complex(s); }
  friend Bicomplex operator+(double s, const Bicomplex& u) { return u + Complex(s); }
  friend Bicomplex operator-(const Bicomplex& u, double s) { return u - Complex(s); }
  friend Bicomplex operator-(double s, const Bicomplex& u) { return Complex(s) - u; }
  friend Bicomplex operator*(const Bicomplex& u, double s) { return u * Complex(s); }
  friend Bicomplex operator*(double s, const Bicomplex& u) { return u * Complex(s); }

 private:
  Complex z1_, z2_;
  UnitQuaternion dir_;
};

inline std::complex<double> complex_part(const Bicomplex& w) { return w.z1(); }
inline std::complex<double> quaternion_part(const Bicomplex& w) { return w.z2(); }

// Reversion: i ~-> -i, q ~-> -q, iq ~-> iq.
inline Bicomplex reverse(const Bicomplex& w) {
  return Bicomplex(std::conj(w.z1()), -std::conj(w.z2()), w.direction());
}

// Expansion onto the 8 blades: z1 on {1, e123}, z2 on the q and iq patterns.
Multivector embed(const Bicomplex& w);

// Decompose a multivector lying in span{1, i, q, iq} for the given direction.
// tol < 0 selects the default 1e-12 * max|coefficient|. A residue outside the
// subalgebra larger than tol raises not_in_subalgebra_error.
Bicomplex to_bicomplex(const Multivector& x, const UnitQuaternion& direction, double tol = -1.0);

}  // namespace qsd

#endif  // QSD_BICOMPLEX_HPP
