#ifndef QSD_DIRECTION_HPP
#define QSD_DIRECTION_HPP

#include <cmath>
#include <stdexcept>

namespace qsd {

// A unit quaternion q = c_i*qi + c_j*qj + c_k*qk selecting the axis of the
// quaternionic step. Coefficients are renormalized on construction so that
// q^2 = -1 holds to rounding.
class UnitQuaternion {
 public:
  UnitQuaternion(double ci, double cj, double ck) : ci_(ci), cj_(cj), ck_(ck) {
    const double n = std::sqrt(ci_ * ci_ + cj_ * cj_ + ck_ * ck_);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw std::invalid_argument("UnitQuaternion: direction must be finite and nonzero");
    }
    ci_ /= n;
    cj_ /= n;
    ck_ /= n;
  }

  double ci() const { return ci_; }
  double cj() const { return cj_; }
  double ck() const { return ck_; }

  static UnitQuaternion qi() { return UnitQuaternion(1.0, 0.0, 0.0); }
  static UnitQuaternion qj() { return UnitQuaternion(0.0, 1.0, 0.0); }
  static UnitQuaternion qk() { return UnitQuaternion(0.0, 0.0, 1.0); }

  friend bool operator==(const UnitQuaternion& a, const UnitQuaternion& b) {
    return a.ci_ == b.ci_ && a.cj_ == b.cj_ && a.ck_ == b.ck_;
  }
  friend bool operator!=(const UnitQuaternion& a, const UnitQuaternion& b) { return !(a == b); }

 private:
  double ci_, cj_, ck_;
};

// Spherical parameterization of the step axis:
//   c_i = sin(theta) cos(phi), c_j = sin(theta) sin(phi), c_k = cos(theta)
// with theta in [0, pi] and phi in [0, 2*pi).
inline UnitQuaternion from_angles(double theta, double phi) {
  constexpr double kPi = 3.14159265358979323846;
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("from_angles: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::invalid_argument("from_angles: phi must lie in [0, 2*pi)");
  }
  const double st = std::sin(theta);
  return UnitQuaternion(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

}  // namespace qsd

#endif  // QSD_DIRECTION_HPP
