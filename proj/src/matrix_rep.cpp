#include "qsd/matrix_rep.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qsd/errors.hpp"

namespace qsd {
namespace {

using Complex = std::complex<double>;

const Complex kI{0.0, 1.0};

// Defining 2x2 representation via Pauli matrices (row-major).
constexpr Complex kI2[4] = {{0, 0}, {0, -1}, {0, -1}, {0, 0}};
constexpr Complex kJ2[4] = {{0, 0}, {-1, 0}, {1, 0}, {0, 0}};
constexpr Complex kK2[4] = {{0, -1}, {0, 0}, {0, 0}, {0, 1}};

// 4x4 real representation; the three basis matrices and the identity occupy
// pairwise disjoint entries.
constexpr double kI4[16] = {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0};
constexpr double kJ4[16] = {0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0};
constexpr double kK4[16] = {0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0};

double norm_inf(const MatrixElement& a) {
  double worst = 0.0;
  for (int i = 0; i < a.n(); ++i) {
    double row = 0.0;
    for (int j = 0; j < a.n(); ++j) row += std::abs(a.at(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

}  // namespace

MatrixElement MatrixElement::identity(Rep rep) {
  MatrixElement m(rep);
  for (int i = 0; i < m.n_; ++i) m.at(i, i) = 1.0;
  return m;
}

MatrixElement::Complex MatrixElement::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

MatrixElement& MatrixElement::operator+=(const MatrixElement& o) {
  if (rep_ != o.rep_) throw std::invalid_argument("MatrixElement: representation mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatrixElement& MatrixElement::operator-=(const MatrixElement& o) {
  if (rep_ != o.rep_) throw std::invalid_argument("MatrixElement: representation mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

MatrixElement& MatrixElement::operator*=(Complex s) {
  for (auto& x : e_) x *= s;
  return *this;
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
  if (a.rep_ != b.rep_) throw std::invalid_argument("MatrixElement: representation mismatch");
  MatrixElement out(a.rep_);
  const int n = a.n_;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

MatrixElement quaternion_matrix(const UnitQuaternion& q, Rep rep) {
  MatrixElement m(rep);
  if (rep == Rep::pauli2) {
    for (int i = 0; i < 4; ++i) {
      m.at(i / 2, i % 2) = q.ci() * kI2[i] + q.cj() * kJ2[i] + q.ck() * kK2[i];
    }
  } else {
    for (int i = 0; i < 16; ++i) {
      m.at(i / 4, i % 4) = q.ci() * kI4[i] + q.cj() * kJ4[i] + q.ck() * kK4[i];
    }
  }
  return m;
}

MatrixElement embed_matrix(Complex z, double h, const UnitQuaternion& q, Rep rep) {
  MatrixElement m = quaternion_matrix(q, rep);
  m *= Complex(h);
  for (int i = 0; i < m.n(); ++i) m.at(i, i) += z;
  return m;
}

MatrixElement embed_matrix(const Bicomplex& w, Rep rep) {
  MatrixElement m = quaternion_matrix(w.direction(), rep);
  m *= w.z2();
  for (int i = 0; i < m.n(); ++i) m.at(i, i) += w.z1();
  return m;
}

Complex extract_complex(const MatrixElement& w) {
  return w.trace() / static_cast<double>(w.n());
}

Bicomplex extract_bicomplex(const MatrixElement& w, const UnitQuaternion& q) {
  MatrixElement qinv = quaternion_matrix(q, w.rep());
  qinv *= Complex(-1.0);
  return Bicomplex(extract_complex(w), extract_complex(w * qinv), q);
}

MatrixElement matrix_exp(const MatrixElement& a) {
  // Taylor with scaling and squaring: scale so the inf-norm is at most 0.5,
  // sum through B^20, square back. For a diagonal-plus-antidiagonal argument
  // the two channels never mix subtractively, preserving order separation.
  const double nrm = norm_inf(a);
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  MatrixElement b = a;
  b *= Complex(std::ldexp(1.0, -s));

  MatrixElement sum = MatrixElement::identity(a.rep());
  MatrixElement term = MatrixElement::identity(a.rep());
  for (int k = 1; k <= 20; ++k) {
    term = term * b;
    term *= Complex(1.0 / k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

MatrixElement matrix_sin(const MatrixElement& a) {
  // (e^{iA} - e^{-iA}) / 2i
  MatrixElement ia = a;
  ia *= kI;
  MatrixElement mia = a;
  mia *= -kI;
  MatrixElement out = matrix_exp(ia) - matrix_exp(mia);
  out *= Complex(0.0, -0.5);
  return out;
}

MatrixElement matrix_cos(const MatrixElement& a) {
  MatrixElement ia = a;
  ia *= kI;
  MatrixElement mia = a;
  mia *= -kI;
  MatrixElement out = matrix_exp(ia) + matrix_exp(mia);
  out *= Complex(0.5);
  return out;
}

MatrixElement matrix_inverse(const MatrixElement& a) {
  // Gauss-Jordan with partial pivoting on [A | I].
  const int n = a.n();
  Complex m[4][8] = {};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    m[i][n + i] = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[p][col])) p = r;
    }
    if (m[p][col] == 0.0) {
      throw non_invertible_error("matrix_inverse: singular matrix");
    }
    if (p != col) {
      for (int j = 0; j < 2 * n; ++j) std::swap(m[p][j], m[col][j]);
    }
    const Complex piv = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0.0) continue;
      const Complex f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  MatrixElement out(a.rep());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = m[i][n + j];
  }
  return out;
}

MatrixElement matrix_polynomial(std::span<const Complex> coeffs, const MatrixElement& a) {
  MatrixElement acc(a.rep());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * a;
    for (int i = 0; i < a.n(); ++i) acc.at(i, i) += coeffs[k];
  }
  return acc;
}

MatrixElement matrix_function(const FunctionId& id, const MatrixElement& a) {
  switch (id.fn) {
    case Fn::exp:
      return matrix_exp(a);
    case Fn::sin:
      return matrix_sin(a);
    case Fn::cos:
      return matrix_cos(a);
    case Fn::inv:
      return matrix_inverse(a);
    case Fn::poly:
      return matrix_polynomial(id.poly_coeffs, a);
    default:
      throw std::invalid_argument("matrix_function: no matrix form for tag '" +
                                  function_tag(id) + "'");
  }
}

MatrixElement eval_matrix(const FunctionId& id, const MatrixElement& a, const UnitQuaternion& q) {
  switch (id.fn) {
    case Fn::exp:
    case Fn::sin:
    case Fn::cos:
    case Fn::inv:
    case Fn::poly:
      return matrix_function(id, a);
    case Fn::tan:
      return matrix_sin(a) * matrix_inverse(matrix_cos(a));
    case Fn::lyness: {
      const MatrixElement c = matrix_cos(a), s = matrix_sin(a);
      return matrix_exp(a) * matrix_inverse(c * c * c + s * s * s);
    }
    case Fn::ln:
    case Fn::sqrt:
    case Fn::arcsin:
    case Fn::arccos:
    case Fn::arctan:
      // No precision-preserving native matrix algorithm; evaluate the closed
      // form on the trace projections and re-embed.
      return embed_matrix(eval_bicomplex(id, extract_bicomplex(a, q)), a.rep());
  }
  throw std::invalid_argument("eval_matrix: unhandled function tag");
}

Complex matrix_qsd_derivative(const FunctionId& id, Complex z, double h, const UnitQuaternion& q,
                              Rep rep) {
  if (!(h > 0.0)) throw std::invalid_argument("matrix_qsd_derivative: h must be positive");
  const MatrixElement arg = embed_matrix(z, h, q, rep);
  const MatrixElement w = eval_matrix(id, arg, q);
  MatrixElement qinv = quaternion_matrix(q, rep);
  qinv *= Complex(-1.0);
  return (w * qinv).trace() / (static_cast<double>(rep_dimension(rep)) * h);
}

LemmaSides lemma_equivalence_check(const FunctionId& id, Complex z, double h, double theta,
                                   double phi) {
  if (!(h >= 1e-6 && h <= 1e-1)) {
    throw std::invalid_argument("lemma_equivalence_check: h must lie in [1e-6, 1e-1]");
  }
  const UnitQuaternion q = from_angles(theta, phi);
  const Complex lhs = matrix_qsd_derivative(id, z, h, q, Rep::pauli2);
  const Complex rhs =
      (eval_complex(id, z + Complex(0.0, h)) - eval_complex(id, z - Complex(0.0, h))) / (2.0 * h);
  return {lhs, rhs};
}

}  // namespace qsd
