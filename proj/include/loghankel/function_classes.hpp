#pragma once

#include <cmath>
#include <optional>

#include "loghankel/bounds.hpp"
#include "loghankel/caratheodory.hpp"
#include "loghankel/classes.hpp"
#include "loghankel/series.hpp"

namespace loghankel {

/// f(z) = z + a2 z^2 + ... belonging to `tag`. a0 = 0 and a1 = 1 exactly.
class ClassFunction {
 public:
  ClassFunction(GeometricClass tag, TruncatedSeries f) : tag_(tag), f_(std::move(f)) {
    if (f_.order() < 1 || f_[0] != cplx(0.0) || f_[1] != cplx(1.0)) {
      throw NormalizationError("class function must start z + a2 z^2 + ...");
    }
  }

  GeometricClass tag() const noexcept { return tag_; }
  const TruncatedSeries& series() const noexcept { return f_; }
  cplx a(std::size_t n) const { return f_[n]; }

 private:
  GeometricClass tag_;
  TruncatedSeries f_;
};

/// Builds f of the given order from p in the Caratheodory class.
/// F1..F4: f = integral of p / w. SS: the coefficients of
/// 2 z f' = p (f(z) - f(-z)), solved term by term:
///   n a_n = sum_{k odd, k <= n} c_{n-k} a_k,
/// where for odd n the k = n term cancels against the left side.
inline ClassFunction build_from_p(GeometricClass tag, const TruncatedSeries& p, std::size_t order) {
  if (order < 1) throw InputError("class function order must be at least 1");
  if (std::abs(p[0] - 1.0) > kSingularThreshold) {
    throw NormalizationError("p must satisfy p(0) = 1");
  }
  if (p.order() + 1 < order) throw InputError("p is truncated below the requested order");

  TruncatedSeries c = resized(p, order - 1);
  c[0] = 1.0;

  if (const auto w = weight(tag)) {
    const TruncatedSeries weight_series = TruncatedSeries::from_poly(
        std::array<cplx, 3>{(*w)[0], (*w)[1], (*w)[2]}, order - 1);
    return {tag, integrate(c * reciprocal(weight_series))};
  }

  TruncatedSeries f(order);
  f[1] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    cplx acc = 0.0;
    for (std::size_t k = 1; k < n; k += 2) acc += c[n - k] * f[k];
    const double lead = (n % 2 == 0) ? static_cast<double>(n) : static_cast<double>(n - 1);
    f[n] = acc / lead;
  }
  return {tag, std::move(f)};
}

/// a2, a3, a4 in terms of c1, c2, c3. For SS the a4 consistent with the
/// defining relation is (c1 c2 + 2 c3) / 8; the sign-flipped form
/// (c1 c2 - 2 c3) / 8 that also circulates is kept in printed_a4.
struct ClosedFormCoeffs {
  cplx a2;
  cplx a3;
  cplx a4;
  std::optional<cplx> printed_a4;
};

inline ClosedFormCoeffs closed_form_a234(GeometricClass tag, const CaratheodoryCoeffs& c) {
  const auto [c1, c2, c3] = c;
  switch (tag) {
    case GeometricClass::SS:
      return {c1 / 2.0, c2 / 2.0, (c1 * c2 + 2.0 * c3) / 8.0, (c1 * c2 - 2.0 * c3) / 8.0};
    case GeometricClass::F1:
      return {(1.0 + c1) / 2.0, (1.0 + c1 + c2) / 3.0, (1.0 + c1 + c2 + c3) / 4.0, std::nullopt};
    case GeometricClass::F2:
      return {c1 / 2.0, (1.0 + c2) / 3.0, (c1 + c3) / 4.0, std::nullopt};
    case GeometricClass::F3:
      return {(1.0 + c1) / 2.0, (c1 + c2) / 3.0, (c2 + c3 - 1.0) / 4.0, std::nullopt};
    case GeometricClass::F4:
      return {(c1 + 2.0) / 2.0, (2.0 * c1 + c2 + 3.0) / 3.0,
              (3.0 * c1 + 2.0 * c2 + c3 + 4.0) / 4.0, std::nullopt};
  }
  throw InputError("unknown class");
}

/// Schur parameters of the function attaining each class's sharp bound.
inline SchurParams extremal_witness(GeometricClass tag) {
  switch (tag) {
    case GeometricClass::SS:
    case GeometricClass::F2:
      return {0.0, 1.0, 1.0};
    case GeometricClass::F1:
      return {eta_root(tag), 1.0, 0.0};
    case GeometricClass::F3:
      return {eta_root(tag), -1.0, 0.0};
    case GeometricClass::F4: {
      // Real maximizer B / (2 (1 + |C|)) of the envelope's middle Y branch
      // at zeta1 = eta, with B and C the F4 case coefficients; about -0.0871127.
      const double eta = eta_root(tag);
      const double zeta2 = -(1.0 - eta) * (3.0 + eta) / ((1.0 + eta) * (17.0 + eta));
      return {eta, zeta2, 1.0};
    }
  }
  throw InputError("unknown class");
}

}  // namespace loghankel
