#ifndef QSD_ERRORS_HPP
#define QSD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsd {

// Thrown when an algebra element has no inverse (zero divisors such as
// 1 + iq, or the scalar 0).
class non_invertible_error : public std::runtime_error {
 public:
  explicit non_invertible_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by to_bicomplex when the multivector has a residue outside
// span{1, i, q, iq} larger than the tolerance. Usually means the caller
// mixed values built with incompatible step directions.
class not_in_subalgebra_error : public std::runtime_error {
 public:
  explicit not_in_subalgebra_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a derivative evaluation produces NaN/Inf. Distinguishes pole
// proximity from contract violations, which throw std::invalid_argument.
class evaluation_error : public std::runtime_error {
 public:
  explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by relative_error when the reference value is zero.
class undefined_reference_error : public std::runtime_error {
 public:
  explicit undefined_reference_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsd

#endif  // QSD_ERRORS_HPP
