#ifndef QSD_MATRIX_REP_HPP
#define QSD_MATRIX_REP_HPP

#include <array>
#include <complex>
#include <span>

#include "qsd/bicomplex.hpp"
#include "qsd/direction.hpp"
#include "qsd/functions.hpp"

namespace qsd {

// Matrix representation backends: the 2x2 Pauli-based defining representation
// (I2 = -i s1, J2 = -i s2, K2 = -i s3) and the 4x4 real representation whose
// basis matrices occupy disjoint entries, so trace orthogonality never relies
// on cancellation.
enum class Rep { pauli2, real4 };

inline int rep_dimension(Rep rep) { return rep == Rep::pauli2 ? 2 : 4; }

// Dense n x n complex matrix, n in {2, 4}, tagged with its representation.
class MatrixElement {
 public:
  using Complex = std::complex<double>;

  explicit MatrixElement(Rep rep) : rep_(rep), n_(rep_dimension(rep)), e_{} {}

  static MatrixElement identity(Rep rep);

  Rep rep() const { return rep_; }
  int n() const { return n_; }

  Complex& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  Complex at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  Complex trace() const;

  MatrixElement& operator+=(const MatrixElement& o);
  MatrixElement& operator-=(const MatrixElement& o);
  MatrixElement& operator*=(Complex s);

  friend MatrixElement operator+(MatrixElement a, const MatrixElement& b) { return a += b; }
  friend MatrixElement operator-(MatrixElement a, const MatrixElement& b) { return a -= b; }
  friend MatrixElement operator*(MatrixElement a, Complex s) { return a *= s; }
  friend MatrixElement operator*(Complex s, MatrixElement a) { return a *= s; }
  friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);

 private:
  Rep rep_;
  int n_;
  std::array<Complex, 16> e_;
};

// Q_n = c_i I_n + c_j J_n + c_k K_n; satisfies Q^2 = -1 and Q^{-1} = -Q.
MatrixElement quaternion_matrix(const UnitQuaternion& q, Rep rep);

// z * 1_n + h * Q_n: the matrix argument of the trace formula.
MatrixElement embed_matrix(std::complex<double> z, double h, const UnitQuaternion& q, Rep rep);

// (a + b i) 1_n + (c + d i) Q_n for a general subalgebra element.
MatrixElement embed_matrix(const Bicomplex& w, Rep rep);

// <W>_C = tr(W) / n.
std::complex<double> extract_complex(const MatrixElement& w);

// Both trace projections: z1 = tr(W)/n, z2 = tr(W Q^{-1})/n.
Bicomplex extract_bicomplex(const MatrixElement& w, const UnitQuaternion& q);

MatrixElement matrix_exp(const MatrixElement& a);
MatrixElement matrix_sin(const MatrixElement& a);
MatrixElement matrix_cos(const MatrixElement& a);
MatrixElement matrix_inverse(const MatrixElement& a);
MatrixElement matrix_polynomial(std::span<const std::complex<double>> coeffs,
                                const MatrixElement& a);

// Matrix counterpart of a named function. Supports exp, sin, cos, inv and
// poly; anything else raises std::invalid_argument. Matrix log/sqrt are
// deliberately absent: Schur-style algorithms destroy the step channel, so
// those routes go through the closed forms (see eval_matrix).
MatrixElement matrix_function(const FunctionId& id, const MatrixElement& a);

// Evaluation of any registry function on z*1 + h*Q. Functions with a native
// matrix form are composed from matrix_function; ln/sqrt/arc* round-trip
// through the bicomplex closed forms via the trace projections.
MatrixElement eval_matrix(const FunctionId& id, const MatrixElement& a, const UnitQuaternion& q);

// f'(z) = tr[f(z 1 + h Q) Q^{-1}] / (n h).
std::complex<double> matrix_qsd_derivative(const FunctionId& id, std::complex<double> z, double h,
                                           const UnitQuaternion& q, Rep rep);

// Both sides of the trace-formula / imaginary-step equivalence:
//   lhs = tr[f(z 1 + h Q2) Q2^{-1}] / (2h),  rhs = (f(z + h i) - f(z - h i)) / (2h).
// h must lie in [1e-6, 1e-1] so both sides are numerically meaningful.
struct LemmaSides {
  std::complex<double> lhs;
  std::complex<double> rhs;
};
LemmaSides lemma_equivalence_check(const FunctionId& id, std::complex<double> z, double h,
                                   double theta, double phi);

}  // namespace qsd

#endif  // QSD_MATRIX_REP_HPP
