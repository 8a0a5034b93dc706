#ifndef QSD_DERIVATIVE_HPP
#define QSD_DERIVATIVE_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "qsd/direction.hpp"
#include "qsd/functions.hpp"

namespace qsd {

// How a derivative estimate is computed.
//   bicomplex   closed forms on z1/z2 complex pairs (the fast path)
//   multivector same closed forms, but argument construction, subalgebra
//               validation and the final q^{-1} extraction run through full
//               8-blade geometric products (the oracle path)
//   pauli2      2x2 matrix trace formula
//   real4       4x4 matrix trace formula
//   central     n-th order central difference
//   csd         imaginary-step baseline, real evaluation points only
enum class Backend { bicomplex, multivector, pauli2, real4, central, csd };

Backend parse_backend(std::string_view name);
std::string backend_name(Backend backend);

struct DiffRequest {
  FunctionId fn;
  std::complex<double> z;
  double h = 1e-20;
  UnitQuaternion direction = UnitQuaternion::qj();
  Backend backend = Backend::bicomplex;
  int order = 1;  // central differences only
};

struct DiffResult {
  std::complex<double> estimate;
  std::optional<std::complex<double>> reference;
  std::optional<double> rel_err;
};

// f'(z) = <f(z + h q) q^{-1}>_C / h on the requested backend (one of
// bicomplex, multivector, pauli2, real4). Non-finite estimates raise
// evaluation_error; zero-divisor evaluations propagate non_invertible_error.
std::complex<double> qsd_derivative(const FunctionId& id, std::complex<double> z, double h,
                                    const UnitQuaternion& q, Backend backend);

// Im[f(x + i h)] / h.
double csd_derivative(const FunctionId& id, double x, double h);

// n-th derivative estimate from the n-th order central difference
//   sum_i (-1)^i C(n,i) f(z + (n/2 - i) h dir) / h^n
// along the given unit step direction (real axis by default; the imaginary
// axis variant feeds the trace-formula equivalence check).
std::complex<double> central_difference(const FunctionId& id, std::complex<double> z, double h,
                                        int order, std::complex<double> direction = {1.0, 0.0});

// |est - ref| / |ref|; a zero reference raises undefined_reference_error.
double relative_error(std::complex<double> est, std::complex<double> ref);

// Dispatches on request.backend and attaches the closed-form reference and
// relative error when available.
DiffResult differentiate(const DiffRequest& request);

}  // namespace qsd

#endif  // QSD_DERIVATIVE_HPP
