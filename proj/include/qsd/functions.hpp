#ifndef QSD_FUNCTIONS_HPP
#define QSD_FUNCTIONS_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/bicomplex.hpp"

namespace qsd {

// The differentiable functions known to the experiment harness. "poly" takes
// coefficients c0..cn via the tag syntax "poly:c0,c1,...", constant term
// first; complex coefficients are written re@im.
enum class Fn {
  lyness,  // e^z / (cos^3 z + sin^3 z), the classic trial function
  exp,
  sin,
  cos,
  tan,
  ln,
  sqrt,
  arcsin,
  arccos,
  arctan,
  inv,
  poly,
};

struct FunctionId {
  Fn fn = Fn::lyness;
  std::vector<std::complex<double>> poly_coeffs;  // only for Fn::poly
};

// Parses tags like "exp", "ln", "poly:0,0,1". Unknown tags raise
// std::invalid_argument.
FunctionId parse_function_tag(std::string_view tag);
std::string function_tag(const FunctionId& id);

// All fixed registry tags (poly excluded, it is parameterized).
const std::vector<std::string>& registry_tags();

// f(z) in standard complex arithmetic: used by the CSD baseline, the central
// differences and the lemma check.
std::complex<double> eval_complex(const FunctionId& id, std::complex<double> z);

// f(w) over the commutative subalgebra via the closed forms.
Bicomplex eval_bicomplex(const FunctionId& id, const Bicomplex& w);

// Closed-form f'(z) in standard complex arithmetic; the reference every
// experiment measures against.
std::complex<double> reference_derivative(const FunctionId& id, std::complex<double> z);

}  // namespace qsd

#endif  // QSD_FUNCTIONS_HPP
