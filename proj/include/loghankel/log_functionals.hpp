#pragma once

#include <cmath>
#include <complex>

#include "loghankel/caratheodory.hpp"
#include "loghankel/function_classes.hpp"
#include "loghankel/series.hpp"

namespace loghankel {

/// gamma_n with log(f(z)/z) = 2 sum gamma_n z^n.
struct LogCoeffVector {
  cplx gamma1;
  cplx gamma2;
  cplx gamma3;
};

/// Real triple fed to the maximum of |A + B z + C z^2| + 1 - |z|^2.
struct CaseCoefficients {
  double A;
  double B;
  double C;
};

/// Which SS functional to use. Printed keeps the sign-flipped a4
/// (c1 c2 - 2 c3) / 8 and the zeta expression derived from it; Pipeline
/// follows the defining relation 2 z f' = p (f(z) - f(-z)). Ignored by F1..F4.
enum class SsVariant { Printed, Pipeline };

inline LogCoeffVector log_coeffs(const ClassFunction& f) {
  const TruncatedSeries& s = f.series();
  if (s.order() < 4) throw InputError("log coefficients up to gamma3 need f to order 4");
  TruncatedSeries f_over_z(s.order() - 1);
  for (std::size_t n = 1; n <= s.order(); ++n) f_over_z[n - 1] = s[n];
  const TruncatedSeries l = log(f_over_z);
  return {l[1] / 2.0, l[2] / 2.0, l[3] / 2.0};
}

inline LogCoeffVector gamma_closed_form(cplx a2, cplx a3, cplx a4) {
  return {a2 / 2.0, (a3 - a2 * a2 / 2.0) / 2.0, (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0};
}

inline cplx h21_log(const LogCoeffVector& g) { return g.gamma1 * g.gamma3 - g.gamma2 * g.gamma2; }

/// gamma1 gamma3 - gamma2^2 written in the Taylor coefficients of f.
inline cplx h21_log_from_a(cplx a2, cplx a3, cplx a4) {
  const cplx a2sq = a2 * a2;
  return (a2 * a4 - a3 * a3 + a2sq * a2sq / 12.0) / 4.0;
}

inline cplx fekete_szego(cplx a2, cplx a3) { return a3 - a2 * a2; }

/// H21 through the closed a-coefficient recipes; no series work. This is
/// what the global search evaluates.
inline cplx h21_closed(GeometricClass tag, const CaratheodoryCoeffs& c,
                       SsVariant variant = SsVariant::Pipeline) {
  const ClosedFormCoeffs a = closed_form_a234(tag, c);
  const cplx a4 = (variant == SsVariant::Printed && a.printed_a4) ? *a.printed_a4 : a.a4;
  return h21_log_from_a(a.a2, a.a3, a4);
}

inline cplx h21_closed(GeometricClass tag, const SchurParams& params,
                       SsVariant variant = SsVariant::Pipeline) {
  return h21_closed(tag, schur_to_coeffs(params), variant);
}

/// H21 through the full series route: rational witness -> p -> f -> log(f/z).
inline cplx h21_series(GeometricClass tag, const SchurParams& params, std::size_t order = 8) {
  const TruncatedSeries p = expand_p(rational_from_schur(params), order);
  return h21_log(log_coeffs(build_from_p(tag, p, order)));
}

/// Closed expressions of gamma1 gamma3 - gamma2^2 in (zeta1, zeta2, zeta3),
/// written term by term. For SS the Printed expression inherits the
/// sign-flipped a4; SsVariant::Pipeline returns the relation-consistent value
/// (c1^4 + 12 c1^2 c2 + 24 c1 c3 - 48 c2^2) / 768.
inline cplx zeta_form_value(GeometricClass tag, const SchurParams& params,
                            SsVariant variant = SsVariant::Printed) {
  const double z1 = params.zeta1();
  const cplx z2 = params.zeta2();
  const cplx z3 = params.zeta3();
  const double m2 = std::norm(z2);
  const double z1_2 = z1 * z1;
  const double z1_3 = z1_2 * z1;
  const double z1_4 = z1_2 * z1_2;
  const double s = 1.0 - z1_2;

  switch (tag) {
    case GeometricClass::SS: {
      if (variant == SsVariant::Pipeline) {
        const auto [c1, c2, c3] = schur_to_coeffs(params);
        const cplx c1sq = c1 * c1;
        return (c1sq * c1sq + 12.0 * c2 * c1sq + 24.0 * c3 * c1 - 48.0 * c2 * c2) / 768.0;
      }
      return (6.0 * z2 * z2 * (5.0 * z1_2 - 3.0 * z1_4 - 2.0) - 11.0 * z1_4 -
              6.0 * z1 * s * z3 * (1.0 - m2) - 30.0 * z2 * z1_2 * s) /
             48.0;
    }
    case GeometricClass::F2:
      return (z1_4 * (5.0 - 4.0 * z2 + 2.0 * z2 * z2) +
              2.0 * z1_2 * (1.0 + 10.0 * z2 + 7.0 * z2 * z2) - 4.0 * std::pow(1.0 + 2.0 * z2, 2) +
              18.0 * z1 * z3 * s * (1.0 - m2)) /
             144.0;
    case GeometricClass::F1: {
      const cplx inner = 1.0 + 2.0 * z3 * (1.0 - m2) + 2.0 * z1 * (1.0 + 2.0 * z2 - z2 * z2) +
                         2.0 * z2 + 2.0 * z1_3 * std::pow(1.0 - z2, 2) -
                         2.0 * z1_2 * (z3 * (1.0 - m2) + z2 - 1.0);
      const cplx square = 1.0 + 2.0 * (z1 + z2) + 2.0 * z1_2 * (1.0 - z2);
      return (72.0 * (1.0 + 2.0 * z1) * inner + 3.0 * std::pow(1.0 + 2.0 * z1, 4) -
              64.0 * square * square) /
             2304.0;
    }
    case GeometricClass::F3: {
      const cplx inner = 2.0 * z1_3 * std::pow(1.0 - z2, 2) + 2.0 * z1 * z2 * (2.0 - z2) +
                         2.0 * (z2 + z3) - 1.0 + 2.0 * z1_2 * (1.0 - z2 - z3 * (1.0 - m2)) -
                         2.0 * z3 * m2;
      const cplx square = z1 + z2 + (1.0 - z2) * z1_2;
      return (1.0 + 2.0 * z1) * inner / 32.0 + std::pow(1.0 + 2.0 * z1, 4) / 768.0 -
             square * square / 9.0;
    }
    case GeometricClass::F4: {
      const cplx inner = z1_2 * std::pow(1.0 - z2, 2) - z1 * (z2 * z2 - 1.0 + z3 * (1.0 - m2)) -
                         z3 * m2 + 2.0 * z2 + z3 + 2.0;
      const cplx square = 3.0 + 4.0 * z1 + 2.0 * z2 - 2.0 * z1_2 * (z2 - 1.0);
      return (18.0 * std::pow(1.0 + z1, 2) * inner + 3.0 * std::pow(1.0 + z1, 4) -
              4.0 * square * square) /
             144.0;
    }
  }
  throw InputError("unknown class");
}

namespace detail {

inline void require_interior(GeometricClass tag, double z1) {
  const bool open_at_zero = tag == GeometricClass::SS || tag == GeometricClass::F2;
  const bool ok = open_at_zero ? (z1 > 0.0 && z1 < 1.0) : (z1 >= 0.0 && z1 < 1.0);
  if (!ok) {
    throw DomainError("zeta1 = " + std::to_string(z1) + " is outside the case-coefficient domain of " +
                      std::string(to_string(tag)));
  }
}

}  // namespace detail

/// The (A, B, C) triple of each class's envelope inequality.
/// SS and F2 need zeta1 in (0, 1); F1, F3, F4 need zeta1 in [0, 1).
inline CaseCoefficients case_coefficients(GeometricClass tag, double z1) {
  detail::require_interior(tag, z1);
  const double z2 = z1 * z1;
  const double z3 = z2 * z1;
  const double z4 = z2 * z2;
  switch (tag) {
    case GeometricClass::SS:
      return {-11.0 * z3 / (6.0 * (1.0 - z2)), -5.0 * z1, 3.0 * z1 - 2.0 / z1};
    case GeometricClass::F2:
      return {(5.0 * z4 + 2.0 * z2 - 4.0) / (18.0 * z1 * (1.0 - z2)),
              -2.0 / (9.0 * z1) * (4.0 - z2), -(8.0 + z2) / (9.0 * z1)};
    case GeometricClass::F1:
      return {(11.0 + 56.0 * z1 - 8.0 * z2 + 16.0 * z3 + 80.0 * z4) /
                  (144.0 * (1.0 + 2.0 * z1) * (1.0 - z2)),
              (4.0 * z2 + 4.0 * z1 - 7.0) / (9.0 * (1.0 + 2.0 * z1)),
              -(2.0 * z2 + 9.0 * z1 + 16.0) / (9.0 * (1.0 + 2.0 * z1))};
    case GeometricClass::F3:
      return {(80.0 * z4 + 16.0 * z3 - 40.0 * z2 - 120.0 * z1 - 69.0) /
                  (144.0 * (1.0 + 2.0 * z1) * (1.0 - z2)),
              (4.0 * z2 + 4.0 * z1 + 9.0) / (9.0 * (1.0 + 2.0 * z1)),
              -(2.0 * z2 + 9.0 * z1 + 16.0) / (9.0 * (1.0 + 2.0 * z1))};
    case GeometricClass::F4:
      return {(5.0 * z4 + 2.0 * z3 - 4.0 * z2 + 6.0 * z1 + 3.0) /
                  (18.0 * (1.0 - z1) * (1.0 + z1) * (1.0 + z1)),
              -2.0 * (1.0 - z1) * (3.0 + z1) / (9.0 * (1.0 + z1)), -(8.0 + z1) / 9.0};
  }
  throw InputError("unknown class");
}

/// Factor multiplying Psi(A, B, C) in each class's envelope inequality.
inline double envelope_prefactor(GeometricClass tag, double z1) {
  const double s = 1.0 - z1 * z1;
  switch (tag) {
    case GeometricClass::SS:
    case GeometricClass::F2: return z1 * s / 8.0;
    case GeometricClass::F1:
    case GeometricClass::F3: return (1.0 + 2.0 * z1) * s / 16.0;
    case GeometricClass::F4: return (1.0 - z1) * (1.0 + z1) * (1.0 + z1) / 8.0;
  }
  throw InputError("unknown class");
}

/// |A + B z + C z^2| + 1 - |z|^2.
inline double psi(const CaseCoefficients& k, cplx z) {
  return std::abs(k.A + k.B * z + k.C * z * z) + 1.0 - std::norm(z);
}

/// Right-hand side of the class's envelope inequality at (zeta1, zeta2).
inline double envelope_value(GeometricClass tag, double z1, cplx z2) {
  return envelope_prefactor(tag, z1) * psi(case_coefficients(tag, z1), z2);
}

}  // namespace loghankel
