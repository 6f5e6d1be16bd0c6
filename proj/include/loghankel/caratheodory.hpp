#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>

#include "loghankel/error.hpp"
#include "loghankel/series.hpp"

namespace loghankel {

inline constexpr double kDiskSlack = 1e-12;

/// Coordinates (zeta1, zeta2, zeta3) in [0,1] x closed disk x closed disk that
/// parameterize the first three coefficients of a Caratheodory function.
class SchurParams {
 public:
  SchurParams(double zeta1, cplx zeta2, cplx zeta3) : zeta1_(zeta1), zeta2_(zeta2), zeta3_(zeta3) {
    if (!(zeta1 >= 0.0 && zeta1 <= 1.0)) throw InputError("zeta1 must lie in [0, 1]");
    if (!(std::abs(zeta2) <= 1.0 + kDiskSlack)) throw InputError("|zeta2| must be at most 1");
    if (!(std::abs(zeta3) <= 1.0 + kDiskSlack)) throw InputError("|zeta3| must be at most 1");
  }

  double zeta1() const noexcept { return zeta1_; }
  cplx zeta2() const noexcept { return zeta2_; }
  cplx zeta3() const noexcept { return zeta3_; }

  friend bool operator==(const SchurParams&, const SchurParams&) = default;

 private:
  double zeta1_;
  cplx zeta2_;
  cplx zeta3_;
};

/// c1, c2, c3 of p(z) = 1 + c1 z + c2 z^2 + c3 z^3 + ...
struct CaratheodoryCoeffs {
  cplx c1;
  cplx c2;
  cplx c3;
};

/// p = numerator / denominator with cubic (or lower) coefficient arrays,
/// listed from degree 0. denominator[0] is always 1.
struct RationalWitness {
  std::array<cplx, 4> numerator{};
  std::array<cplx, 4> denominator{};
};

inline CaratheodoryCoeffs schur_to_coeffs(const SchurParams& params) {
  const double z1 = params.zeta1();
  const cplx z2 = params.zeta2();
  const cplx z3 = params.zeta3();
  const double s = 1.0 - z1 * z1;
  const double m2 = std::norm(z2);
  return {
      2.0 * z1,
      2.0 * z1 * z1 + 2.0 * s * z2,
      2.0 * z1 * z1 * z1 + 4.0 * s * z1 * z2 - 2.0 * s * z1 * z2 * z2 + 2.0 * s * (1.0 - m2) * z3,
  };
}

/// The unique p attaining the given coefficients: the quadratic form when
/// zeta2 is on the unit circle (zeta3 is then irrelevant), the cubic form
/// otherwise.
inline RationalWitness rational_from_schur(const SchurParams& params) {
  const cplx z1 = params.zeta1();
  const cplx z2 = params.zeta2();
  const cplx z3 = params.zeta3();
  RationalWitness w;
  if (std::abs(std::abs(z2) - 1.0) <= kDiskSlack) {
    w.numerator = {1.0, std::conj(z1) * z2 + z1, z2, 0.0};
    w.denominator = {1.0, std::conj(z1) * z2 - z1, -z2, 0.0};
    return w;
  }
  const cplx lin = std::conj(z1) * z2 + std::conj(z2) * z3;
  const cplx mixed = z1 * std::conj(z2) * z3;
  w.numerator = {1.0, lin + z1, std::conj(z1) * z3 + mixed + z2, z3};
  w.denominator = {1.0, lin - z1, std::conj(z1) * z3 - mixed - z2, -z3};
  return w;
}

inline TruncatedSeries expand_p(const RationalWitness& w, std::size_t order) {
  if (w.denominator[0] != cplx(1.0)) throw InputError("witness denominator must start with 1");
  return mul(TruncatedSeries::from_poly(w.numerator, order),
             reciprocal(TruncatedSeries::from_poly(w.denominator, order)));
}

namespace detail {

inline cplx horner(std::span<const cplx> poly, cplx z) {
  cplx acc = 0.0;
  for (std::size_t n = poly.size(); n-- > 0;) acc = acc * z + poly[n];
  return acc;
}

}  // namespace detail

inline cplx evaluate(const RationalWitness& w, cplx z) {
  const cplx den = detail::horner(w.denominator, z);
  if (std::abs(den) < 1e-14) throw PoleError("witness denominator vanishes at sample point");
  return detail::horner(w.numerator, z) / den;
}

/// Minimum of Re p over the circles |z| = r (r in radii), each sampled at
/// `angles_per_radius` equally spaced angles. Uses the rational form, not a
/// truncation.
inline double positivity_scan(const RationalWitness& w, std::span<const double> radii,
                              int angles_per_radius) {
  if (angles_per_radius < 1) throw InputError("need at least one angle per radius");
  double lowest = std::numeric_limits<double>::infinity();
  for (const double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) throw InputError("scan radii must lie in [0, 1)");
    for (int k = 0; k < angles_per_radius; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angles_per_radius;
      lowest = std::min(lowest, evaluate(w, std::polar(r, theta)).real());
    }
  }
  return lowest;
}

// ---------------------------------------------------------------------------
// Seeded sampling. Uniform measure on [0,1] for zeta1 and on the closed disk
// for zeta2 and zeta3 (uniform squared modulus, uniform angle).

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline cplx uniform_disk(Rng& rng) {
  const double r = std::sqrt(unit_real(rng));
  const double theta = 2.0 * std::numbers::pi * unit_real(rng);
  return std::polar(r, theta);
}

inline SchurParams sample_schur(Rng& rng) {
  const double z1 = unit_real(rng);
  const cplx z2 = uniform_disk(rng);
  const cplx z3 = uniform_disk(rng);
  return {z1, z2, z3};
}

}  // namespace loghankel
