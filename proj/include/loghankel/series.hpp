#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loghankel/error.hpp"

namespace loghankel {

using cplx = std::complex<double>;

/// Power series truncated at degree N: coefficient n multiplies z^n, and
/// exactly N+1 coefficients are stored. Binary operations require equal
/// orders and preserve them.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  explicit TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InputError("series needs at least one coefficient");
  }

  TruncatedSeries(std::initializer_list<cplx> coeffs)
      : TruncatedSeries(std::vector<cplx>(coeffs)) {}

  static TruncatedSeries constant(cplx value, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
  }

  /// Coefficients listed from degree 0, zero-padded or cut to `order`.
  static TruncatedSeries from_poly(std::span<const cplx> poly, std::size_t order) {
    TruncatedSeries s(order);
    const std::size_t n = std::min(poly.size(), order + 1);
    std::copy_n(poly.begin(), n, s.coeffs_.begin());
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const cplx& operator[](std::size_t n) const { return coeffs_.at(n); }
  cplx& operator[](std::size_t n) { return coeffs_.at(n); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<cplx> coeffs_;
};

namespace detail {

inline void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw InputError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}

}  // namespace detail

/// alpha * a + beta * b, coefficient-wise.
inline TruncatedSeries linear(const TruncatedSeries& a, const TruncatedSeries& b, cplx alpha,
                              cplx beta) {
  detail::require_same_order(a, b);
  TruncatedSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = alpha * a[n] + beta * b[n];
  return out;
}

/// Cauchy product; terms above the common order are dropped.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b);
  const std::size_t order = a.order();
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return linear(a, b, 1.0, 1.0);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return linear(a, b, 1.0, -1.0);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return mul(a, b);
}

inline constexpr double kSingularThreshold = 1e-12;

inline TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (std::abs(a[0]) <= kSingularThreshold) {
    throw SingularInputError("reciprocal of a series with vanishing constant term");
  }
  const std::size_t order = a.order();
  TruncatedSeries b(order);
  const cplx inv0 = 1.0 / a[0];
  b[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    cplx acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -inv0 * acc;
  }
  return b;
}

/// Principal logarithm of a series with unit constant term (log 1 := 0).
/// Uses n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}, i.e. b' = a'/a.
inline TruncatedSeries log(const TruncatedSeries& a) {
  if (std::abs(a[0] - 1.0) > kSingularThreshold) {
    throw NormalizationError("log needs a series with constant term 1");
  }
  const std::size_t order = a.order();
  TruncatedSeries b(order);
  for (std::size_t n = 1; n <= order; ++n) {
    cplx acc = 0.0;
    for (std::size_t k = 1; k < n; ++k) acc += static_cast<double>(k) * b[k] * a[n - k];
    b[n] = a[n] - acc / static_cast<double>(n);
  }
  return b;
}

/// Antiderivative vanishing at 0; the order grows by one.
inline TruncatedSeries integrate(const TruncatedSeries& a) {
  TruncatedSeries out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) out[n + 1] = a[n] / static_cast<double>(n + 1);
  return out;
}

/// Term-wise derivative; the order drops by one (order 0 maps to the zero constant).
inline TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(0);
  TruncatedSeries out(a.order() - 1);
  for (std::size_t n = 1; n <= a.order(); ++n) out[n - 1] = static_cast<double>(n) * a[n];
  return out;
}

/// Same coefficients at a different order (cut or zero-padded).
inline TruncatedSeries resized(const TruncatedSeries& a, std::size_t order) {
  return TruncatedSeries::from_poly(a.coeffs(), order);
}

/// a(-z).
inline TruncatedSeries reflect(const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (std::size_t n = 1; n <= a.order(); n += 2) out[n] = -out[n];
  return out;
}

/// e^{-i theta} f(e^{i theta} z) for a normalized f (a0 = 0): a_n -> a_n e^{i(n-1)theta}.
inline TruncatedSeries rotate(const TruncatedSeries& a, double theta) {
  if (std::abs(a[0]) > kSingularThreshold) {
    throw NormalizationError("rotation needs a series with zero constant term");
  }
  TruncatedSeries out(a.order());
  for (std::size_t n = 1; n <= a.order(); ++n) {
    out[n] = a[n] * std::polar(1.0, static_cast<double>(n - 1) * theta);
  }
  return out;
}

/// Horner evaluation of the truncation at a point of the closed unit disk.
inline cplx evaluate(const TruncatedSeries& a, cplx z) {
  if (std::abs(z) > 1.0 + kSingularThreshold) {
    throw InputError("evaluation point outside the closed unit disk");
  }
  cplx acc = 0.0;
  for (std::size_t n = a.order() + 1; n-- > 0;) acc = acc * z + a[n];
  return acc;
}

/// Largest coefficient-wise modulus of a - b.
inline double max_deviation(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b);
  double worst = 0.0;
  for (std::size_t n = 0; n <= a.order(); ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
  return worst;
}

}  // namespace loghankel
