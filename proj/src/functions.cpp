#include "qsd/functions.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "qsd/elementary.hpp"
#include "qsd/errors.hpp"

namespace qsd {
namespace {

using Complex = std::complex<double>;

const std::pair<std::string_view, Fn> kTagTable[] = {
    {"lyness", Fn::lyness}, {"exp", Fn::exp},       {"sin", Fn::sin},
    {"cos", Fn::cos},       {"tan", Fn::tan},       {"ln", Fn::ln},
    {"sqrt", Fn::sqrt},     {"arcsin", Fn::arcsin}, {"arccos", Fn::arccos},
    {"arctan", Fn::arctan}, {"inv", Fn::inv},
};

double parse_double(std::string_view s) {
  char* end = nullptr;
  const std::string buf(s);
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) {
    throw std::invalid_argument("poly coefficient is not a number: '" + buf + "'");
  }
  return v;
}

// "1.5" or "1.5@-2" (re@im)
Complex parse_coefficient(std::string_view s) {
  const auto at = s.find('@');
  if (at == std::string_view::npos) return Complex(parse_double(s));
  return Complex(parse_double(s.substr(0, at)), parse_double(s.substr(at + 1)));
}

}  // namespace

FunctionId parse_function_tag(std::string_view tag) {
  for (const auto& [name, fn] : kTagTable) {
    if (tag == name) return FunctionId{fn, {}};
  }
  if (tag.rfind("poly:", 0) == 0) {
    FunctionId id{Fn::poly, {}};
    std::string_view rest = tag.substr(5);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      id.poly_coeffs.push_back(parse_coefficient(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (id.poly_coeffs.empty()) {
      throw std::invalid_argument("poly tag needs at least one coefficient");
    }
    return id;
  }
  throw std::invalid_argument("unknown function tag: '" + std::string(tag) + "'");
}

std::string function_tag(const FunctionId& id) {
  for (const auto& [name, fn] : kTagTable) {
    if (id.fn == fn) return std::string(name);
  }
  std::string out = "poly:";
  for (std::size_t i = 0; i < id.poly_coeffs.size(); ++i) {
    if (i) out += ',';
    const Complex c = id.poly_coeffs[i];
    out += std::to_string(c.real());
    if (c.imag() != 0.0) out += '@' + std::to_string(c.imag());
  }
  return out;
}

const std::vector<std::string>& registry_tags() {
  static const std::vector<std::string> tags = {
      "lyness", "exp", "sin", "cos", "tan", "ln", "sqrt", "arcsin", "arccos", "arctan", "inv",
  };
  return tags;
}

std::complex<double> eval_complex(const FunctionId& id, Complex z) {
  switch (id.fn) {
    case Fn::lyness: {
      const Complex c = std::cos(z), s = std::sin(z);
      return std::exp(z) / (c * c * c + s * s * s);
    }
    case Fn::exp:
      return std::exp(z);
    case Fn::sin:
      return std::sin(z);
    case Fn::cos:
      return std::cos(z);
    case Fn::tan:
      return std::tan(z);
    case Fn::ln:
      return std::log(z);
    case Fn::sqrt:
      return std::sqrt(z);
    case Fn::arcsin:
      return std::asin(z);
    case Fn::arccos:
      return std::acos(z);
    case Fn::arctan:
      return std::atan(z);
    case Fn::inv:
      return 1.0 / z;
    case Fn::poly: {
      Complex acc = 0.0;
      for (auto it = id.poly_coeffs.rbegin(); it != id.poly_coeffs.rend(); ++it) {
        acc = acc * z + *it;
      }
      return acc;
    }
  }
  throw std::invalid_argument("eval_complex: unhandled function tag");
}

Bicomplex eval_bicomplex(const FunctionId& id, const Bicomplex& w) {
  switch (id.fn) {
    case Fn::lyness: {
      const Bicomplex c = qsd::cos(w), s = qsd::sin(w);
      return qsd::exp(w) * inverse(c * c * c + s * s * s);
    }
    case Fn::exp:
      return qsd::exp(w);
    case Fn::sin:
      return qsd::sin(w);
    case Fn::cos:
      return qsd::cos(w);
    case Fn::tan:
      return qsd::tan(w);
    case Fn::ln:
      return principal_log(w);
    case Fn::sqrt:
      return qsd::sqrt(w);
    case Fn::arcsin:
      return qsd::arcsin(w);
    case Fn::arccos:
      return qsd::arccos(w);
    case Fn::arctan:
      return qsd::arctan(w);
    case Fn::inv:
      return inverse(w);
    case Fn::poly: {
      Bicomplex acc = w.with(0.0);
      for (auto it = id.poly_coeffs.rbegin(); it != id.poly_coeffs.rend(); ++it) {
        acc = acc * w + *it;
      }
      return acc;
    }
  }
  throw std::invalid_argument("eval_bicomplex: unhandled function tag");
}

std::complex<double> reference_derivative(const FunctionId& id, Complex z) {
  switch (id.fn) {
    case Fn::lyness: {
      // g' = g * (1 - 3 (sin^2 z cos z - cos^2 z sin z) / (cos^3 z + sin^3 z))
      const Complex c = std::cos(z), s = std::sin(z);
      const Complex den = c * c * c + s * s * s;
      const Complex g = std::exp(z) / den;
      return g * (1.0 - 3.0 * (s * s * c - c * c * s) / den);
    }
    case Fn::exp:
      return std::exp(z);
    case Fn::sin:
      return std::cos(z);
    case Fn::cos:
      return -std::sin(z);
    case Fn::tan: {
      const Complex c = std::cos(z);
      return 1.0 / (c * c);
    }
    case Fn::ln:
      return 1.0 / z;
    case Fn::sqrt:
      return 0.5 / std::sqrt(z);
    case Fn::arcsin:
      return 1.0 / std::sqrt(1.0 - z * z);
    case Fn::arccos:
      return -1.0 / std::sqrt(1.0 - z * z);
    case Fn::arctan:
      return 1.0 / (1.0 + z * z);
    case Fn::inv:
      return -1.0 / (z * z);
    case Fn::poly: {
      Complex acc = 0.0;
      for (std::size_t k = id.poly_coeffs.size(); k-- > 1;) {
        acc = acc * z + static_cast<double>(k) * id.poly_coeffs[k];
      }
      return acc;
    }
  }
  throw std::invalid_argument("reference_derivative: unhandled function tag");
}

}  // namespace qsd
