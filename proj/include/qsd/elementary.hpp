#ifndef QSD_ELEMENTARY_HPP
#define QSD_ELEMENTARY_HPP

#include <complex>

#include "qsd/bicomplex.hpp"

namespace qsd {

// Closed-form transcendental and algebraic functions on the commutative
// subalgebra. Everything is evaluated in (a,b,c,d) coordinates with the
// direction carried symbolically, which keeps the identity-proportional and
// q-proportional channels in separate storage; this is what lets a step of
// 1e-20 (or 1e-200) survive the evaluation.

// Polar decomposition X = U * S with U unitary (U * ~U = 1) and S
// self-reverse (~S = S, components on {1, iq} only).
struct PolarParts {
  Bicomplex unitary;
  Bicomplex scale;
};

// The scalar [[M]] = sqrt(<M>_0^2 - <M>_1^2), where <M>_1 is the iq (vector)
// component within the subalgebra. Real for the self-reverse elements
// produced along the polar/sqrt paths; complex in general.
using GradeNorm = std::complex<double>;
GradeNorm grade_norm(const Bicomplex& m);

Bicomplex exp(const Bicomplex& w);

// Requires X invertible; X = 1 +- iq (and any zero divisor) raises
// non_invertible_error.
PolarParts polar(const Bicomplex& x);

// Principal square root: non-negative real part, ties toward +i.
// sqrt(0) = 0; the U = +-iq edge falls back to exp(principal_log(X)/2).
Bicomplex sqrt(const Bicomplex& x);

// Principal logarithm with b in (-pi, pi] and c in (-pi/2, pi/2], so that
// Ln(-1) = i*pi. Requires X invertible.
Bicomplex principal_log(const Bicomplex& x);

Bicomplex sin(const Bicomplex& w);
Bicomplex cos(const Bicomplex& w);
Bicomplex tan(const Bicomplex& w);

Bicomplex arcsin(const Bicomplex& w);
Bicomplex arccos(const Bicomplex& w);
Bicomplex arctan(const Bicomplex& w);

// w^{-1} = (z1 - q z2) / (z1^2 + z2^2); zero divisors raise
// non_invertible_error.
Bicomplex inverse(const Bicomplex& w);

}  // namespace qsd

#endif  // QSD_ELEMENTARY_HPP
