#include "qsd/elementary.hpp"

#include <cmath>
#include <numbers>

#include "qsd/errors.hpp"

namespace qsd {
namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// atan2 with range (-pi, pi]: the platform returns -pi for atan2(-0, x<0),
// which must map to +pi so that Ln(-1) = i*pi.
double atan2_principal(double y, double x) {
  const double r = std::atan2(y, x);
  return r == -kPi ? kPi : r;
}

// |z1^2 + z2^2| computed as |z1 + i z2| * |z1 - i z2| to avoid the
// cancellation of the direct sum. Zero exactly on the zero-divisor set.
double invertibility_norm(const Bicomplex& x) {
  const Complex iz2 = Complex(0.0, 1.0) * x.z2();
  return std::abs(x.z1() + iz2) * std::abs(x.z1() - iz2);
}

// Scale part of the polar decomposition as real coefficients (s0, s1) on
// {1, iq}, together with gn = [[X ~X]] = s0^2 - s1^2.
struct ScaleParts {
  double s0, s1, gn;
};

ScaleParts scale_parts(const Bicomplex& x) {
  const double m0 = std::norm(x.z1()) + std::norm(x.z2());
  const double m1 = 2.0 * std::imag(x.z2() * std::conj(x.z1()));
  const double gn = invertibility_norm(x);
  if (gn == 0.0) {
    throw non_invertible_error("polar: element is a zero divisor (or zero)");
  }
  const double den = std::sqrt(2.0 * (m0 + gn));
  return {(m0 + gn) / den, m1 / den, gn};
}

Bicomplex mul_i(const Bicomplex& w) { return w * Complex(0.0, 1.0); }

}  // namespace

GradeNorm grade_norm(const Bicomplex& m) {
  // <M>_0 = a, <M>_1 = d * iq and (iq)^2 = +1.
  return std::sqrt(Complex(m.a() * m.a() - m.d() * m.d(), 0.0));
}

Bicomplex exp(const Bicomplex& w) {
  // e^{z1 + q z2} = e^{z1} (cos z2 + q sin z2), the coordinate expansion of
  // e^a [cos b + i sin b][cos c + q sin c][cosh d + iq sinh d].
  const Complex e = std::exp(w.z1());
  return w.with(e * std::cos(w.z2()), e * std::sin(w.z2()));
}

PolarParts polar(const Bicomplex& x) {
  const ScaleParts sp = scale_parts(x);
  const Bicomplex scale = x.with(sp.s0, Complex(0.0, sp.s1));
  // S^{-1} = (s0 - iq s1) / (s0^2 - s1^2), and s0^2 - s1^2 = gn.
  const Bicomplex scale_inv = x.with(sp.s0 / sp.gn, Complex(0.0, -sp.s1 / sp.gn));
  return {x * scale_inv, scale};
}

Bicomplex principal_log(const Bicomplex& x) {
  const ScaleParts sp = scale_parts(x);
  // S = e^{a + d iq}: a from the grade norm, d = arctanh(s1/s0). Positivity
  // of s0 + [[S]] guarantees s0 > |s1|.
  const double a = 0.5 * std::log(sp.gn);
  const double d = 0.5 * std::log((sp.s0 + sp.s1) / (sp.s0 - sp.s1));

  const Bicomplex scale_inv = x.with(sp.s0 / sp.gn, Complex(0.0, -sp.s1 / sp.gn));
  const Bicomplex u = x * scale_inv;
  const double u0 = u.a(), u3 = u.b(), u2 = u.c(), u1 = u.d();

  // U = e^{b i + c q}; recover c first to keep Ln(-1) = i*pi:
  //   sin 2c = 2 (U0 U2 + U1 U3), cos 2c = 2 (U0^2 + U3^2) - 1.
  const double sin2c = 2.0 * (u0 * u2 + u1 * u3);
  const double cos2c = 2.0 * (u0 * u0 + u3 * u3) - 1.0;
  const double c = 0.5 * atan2_principal(sin2c, cos2c);

  // Then b from whichever pair of grades carries the larger factor. The case
  // switch at |cos c| = 1/sqrt(2) avoids dividing by a vanishing cos(c)
  // without introducing an arbitrary epsilon.
  double sin_b, cos_b;
  const double cc = std::cos(c);
  if (std::abs(cc) > 1.0 / std::sqrt(2.0)) {
    sin_b = u3 / cc;
    cos_b = u0 / cc;
  } else {
    const double sc = std::sin(c);
    sin_b = u1 / sc;
    cos_b = u2 / sc;
  }
  const double b = atan2_principal(sin_b, cos_b);

  if (!(b > -kPi && b <= kPi) || !(c > -kPi / 2 && c <= kPi / 2)) {
    throw evaluation_error("principal_log: branch extraction out of range");
  }
  return x.with(Complex(a, b), Complex(c, d));
}

Bicomplex sqrt(const Bicomplex& x) {
  if (x.z1() == 0.0 && x.z2() == 0.0) return x.with(0.0);

  const ScaleParts sp = scale_parts(x);  // throws for zero divisors
  const Bicomplex scale_inv = x.with(sp.s0 / sp.gn, Complex(0.0, -sp.s1 / sp.gn));
  const Bicomplex u = x * scale_inv;

  // sqrt(S) = (S + [[S]]) / (sqrt(2) sqrt(S0 + [[S]])), unique once
  // S0 + [[S]] > 0, which holds for every polar scale.
  const double gns = std::sqrt(sp.gn);
  if (!(sp.s0 + gns > 0.0)) {
    throw evaluation_error("sqrt: scale positivity violated");
  }
  const double den_s = std::sqrt(2.0 * (sp.s0 + gns));
  const Bicomplex sqrt_scale = x.with((sp.s0 + gns) / den_s, Complex(0.0, sp.s1 / den_s));

  // sqrt(U) = (1 + U) * Sp^{-1} with Sp the polar scale of 1 + U. The scalar
  // part of the result is (1 + U0)/sp0 >= 0, which is the principal branch.
  const Bicomplex p = 1.0 + u;
  const double gnp = invertibility_norm(p);
  if (gnp == 0.0) {
    // U = -1 or U = +-iq: 1 + U is a zero divisor. exp(Ln/2) covers these and
    // resolves the sign toward +i (b = pi halves to pi/2).
    const Bicomplex half_log = principal_log(x) * 0.5;
    return exp(half_log);
  }
  const double mp0 = std::norm(p.z1()) + std::norm(p.z2());
  const double mp1 = 2.0 * std::imag(p.z2() * std::conj(p.z1()));
  const double den_p = std::sqrt(2.0 * (mp0 + gnp));
  const double sp0 = (mp0 + gnp) / den_p;
  const double sp1 = mp1 / den_p;
  const Bicomplex p_scale_inv = x.with(sp0 / gnp, Complex(0.0, -sp1 / gnp));
  const Bicomplex sqrt_u = p * p_scale_inv;

  return sqrt_u * sqrt_scale;
}

Bicomplex sin(const Bicomplex& w) {
  // (e^{iw} - e^{-iw}) / 2i in closed coordinates:
  // sin(z1 + q z2) = sin z1 cosh z2 + q cos z1 sinh z2.
  return w.with(std::sin(w.z1()) * std::cosh(w.z2()), std::cos(w.z1()) * std::sinh(w.z2()));
}

Bicomplex cos(const Bicomplex& w) {
  return w.with(std::cos(w.z1()) * std::cosh(w.z2()), -std::sin(w.z1()) * std::sinh(w.z2()));
}

Bicomplex tan(const Bicomplex& w) { return sin(w) * inverse(cos(w)); }

Bicomplex arcsin(const Bicomplex& w) {
  // -i ln(i w + sqrt(1 - w^2))
  return -mul_i(principal_log(mul_i(w) + sqrt(1.0 - w * w)));
}

Bicomplex arccos(const Bicomplex& w) {
  // -i ln(w + sqrt(w^2 - 1))
  return -mul_i(principal_log(w + sqrt(w * w - 1.0)));
}

Bicomplex arctan(const Bicomplex& w) {
  // (i/2) [ln(1 - i w) - ln(1 + i w)]
  const Bicomplex iw = mul_i(w);
  return Complex(0.0, 0.5) * (principal_log(1.0 - iw) - principal_log(1.0 + iw));
}

Bicomplex inverse(const Bicomplex& w) {
  const Complex den = w.z1() * w.z1() + w.z2() * w.z2();
  if (den == 0.0) {
    throw non_invertible_error("inverse: element is a zero divisor (or zero)");
  }
  return w.with(w.z1() / den, -w.z2() / den);
}

}  // namespace qsd
