#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "loghankel/classes.hpp"
#include "loghankel/error.hpp"

namespace loghankel {

enum class BoundKind { Constant, QuarticOver2304, Rational };

/// Closed-form description of a class's sharp bound. For the polynomial
/// kinds the bound is scale * X(eta) with X = numerator; for the rational
/// kind X = numerator / denominator. eta is the critical point of X inside
/// eta_bracket. Coefficients are ascending.
struct BoundSpec {
  GeometricClass tag;
  BoundKind kind;
  std::vector<double> numerator;
  std::vector<double> denominator;
  std::pair<double, double> eta_bracket;
  double scale;
};

namespace detail {

inline double polyval(std::span<const double> poly, double x) {
  double acc = 0.0;
  for (std::size_t n = poly.size(); n-- > 0;) acc = acc * x + poly[n];
  return acc;
}

inline std::vector<double> polyder(std::span<const double> poly) {
  std::vector<double> out;
  for (std::size_t n = 1; n < poly.size(); ++n) out.push_back(static_cast<double>(n) * poly[n]);
  return out;
}

inline std::vector<double> polymul(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace detail

inline BoundSpec bound_spec(GeometricClass tag) {
  switch (tag) {
    case GeometricClass::SS:
    case GeometricClass::F2:
      return {tag, BoundKind::Constant, {0.25}, {1.0}, {0.0, 0.0}, 1.0};
    case GeometricClass::F1:
      return {tag, BoundKind::QuarticOver2304, {357, 24, -392, -96, -48}, {1.0}, {0.0, 0.1},
              1.0 / 2304.0};
    case GeometricClass::F3:
      return {tag, BoundKind::QuarticOver2304, {469, 328, -264, -224, -176}, {1.0}, {0.2, 0.5},
              1.0 / 2304.0};
    case GeometricClass::F4: {
      // 48 (17 + x) X(x) = (1 + x)(x^4 + 20x^3 - 114x^2 + 4x + 125)
      const std::vector<double> one_plus_x{1, 1};
      const std::vector<double> quartic{125, 4, -114, 20, 1};
      return {tag, BoundKind::Rational, detail::polymul(one_plus_x, quartic), {48 * 17, 48},
              {0.3369, 0.9}, 1.0};
    }
  }
  throw InputError("unknown class");
}

/// scale * X(x).
inline double bound_function(const BoundSpec& spec, double x) {
  return spec.scale * detail::polyval(spec.numerator, x) / detail::polyval(spec.denominator, x);
}

/// d/dx of bound_function; the rational case uses the quotient rule.
inline double bound_function_derivative(const BoundSpec& spec, double x) {
  const auto dn = detail::polyder(spec.numerator);
  const auto dd = detail::polyder(spec.denominator);
  const double n = detail::polyval(spec.numerator, x);
  const double d = detail::polyval(spec.denominator, x);
  const double dnv = detail::polyval(dn, x);
  const double ddv = dd.empty() ? 0.0 : detail::polyval(dd, x);
  return spec.scale * (dnv * d - n * ddv) / (d * d);
}

/// Critical point of X inside the class's bracket, by bisection to 1e-12.
inline double eta_root(GeometricClass tag) {
  const BoundSpec spec = bound_spec(tag);
  if (spec.kind == BoundKind::Constant) {
    throw InputError("class " + std::string(to_string(tag)) + " has a constant bound and no eta");
  }
  auto [lo, hi] = spec.eta_bracket;
  double flo = bound_function_derivative(spec, lo);
  const double fhi = bound_function_derivative(spec, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericalError("X' does not change sign across the eta bracket");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = bound_function_derivative(spec, mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double theoretical_bound(GeometricClass tag) {
  const BoundSpec spec = bound_spec(tag);
  if (spec.kind == BoundKind::Constant) return spec.numerator.front();
  return bound_function(spec, eta_root(tag));
}

}  // namespace loghankel
