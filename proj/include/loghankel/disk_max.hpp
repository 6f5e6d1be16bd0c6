#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string_view>

#include "loghankel/error.hpp"
#include "loghankel/series.hpp"

// Closed-form maximum of |A + B z + C z^2| + 1 - |z|^2 over the closed unit
// disk for real A, B, C, plus a grid oracle that does not use the formula.

namespace loghankel {

enum class YBranch {
  SumOfModuli,        // AC >= 0, |B| >= 2(1 - |C|)
  NonNegInterior,     // AC >= 0, |B| <  2(1 - |C|)
  NegInteriorMinus,   // AC < 0, first case
  NegInteriorPlus,    // AC < 0, second case
  RSumMinusC,         // AC < 0, R: |A| + |B| - |C|
  RSumMinusA,         // AC < 0, R: -|A| + |B| + |C|
  RSqrt,              // AC < 0, R: (|C| + |A|) sqrt(1 - B^2 / (4AC))
  Oracle,
};

inline constexpr std::string_view to_string(YBranch b) noexcept {
  switch (b) {
    case YBranch::SumOfModuli: return "ac>=0:|A|+|B|+|C|";
    case YBranch::NonNegInterior: return "ac>=0:1+|A|+B^2/(4(1-|C|))";
    case YBranch::NegInteriorMinus: return "ac<0:1-|A|+B^2/(4(1-|C|))";
    case YBranch::NegInteriorPlus: return "ac<0:1+|A|+B^2/(4(1+|C|))";
    case YBranch::RSumMinusC: return "ac<0:R=|A|+|B|-|C|";
    case YBranch::RSumMinusA: return "ac<0:R=-|A|+|B|+|C|";
    case YBranch::RSqrt: return "ac<0:R=(|C|+|A|)sqrt(1-B^2/(4AC))";
    case YBranch::Oracle: return "oracle";
  }
  return "?";
}

struct YOutcome {
  double value;
  YBranch branch;
  std::optional<cplx> witness;  // set by the oracle only
};

namespace detail {

inline YOutcome r_outcome(double A, double B, double C) {
  const double a = std::abs(A);
  const double b = std::abs(B);
  const double c = std::abs(C);
  if (c * (b + 4.0 * a) <= std::abs(A * B)) return {a + b - c, YBranch::RSumMinusC, std::nullopt};
  if (std::abs(A * B) <= c * (b - 4.0 * a)) return {-a + b + c, YBranch::RSumMinusA, std::nullopt};
  return {(c + a) * std::sqrt(1.0 - B * B / (4.0 * A * C)), YBranch::RSqrt, std::nullopt};
}

}  // namespace detail

/// Auxiliary R(A, B, C); meaningful when AC < 0.
inline double r_closed(double A, double B, double C) { return detail::r_outcome(A, B, C).value; }

/// Y(A, B, C). Branches are tried in enum order and the first match
/// wins. The first AC < 0 branch uses B^2 / (4(1 - |C|)) and the
/// second compares against 4(1 + |C|)^2; those are the readings that agree
/// with y_oracle.
inline YOutcome y_closed(double A, double B, double C) {
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C)) {
    throw InputError("Y(A, B, C) needs finite inputs");
  }
  const double a = std::abs(A);
  const double b = std::abs(B);
  const double c = std::abs(C);
  const double b2 = B * B;

  if (A * C >= 0.0) {
    if (b >= 2.0 * (1.0 - c)) return {a + b + c, YBranch::SumOfModuli, std::nullopt};
    return {1.0 + a + b2 / (4.0 * (1.0 - c)), YBranch::NonNegInterior, std::nullopt};
  }

  // AC < 0 implies C != 0.
  const double t = -4.0 * A * C * (1.0 / (C * C) - 1.0);
  if (t <= b2 && b < 2.0 * (1.0 - c)) {
    return {1.0 - a + b2 / (4.0 * (1.0 - c)), YBranch::NegInteriorMinus, std::nullopt};
  }
  if (b2 < std::min(4.0 * (1.0 + c) * (1.0 + c), t)) {
    return {1.0 + a + b2 / (4.0 * (1.0 + c)), YBranch::NegInteriorPlus, std::nullopt};
  }
  return detail::r_outcome(A, B, C);
}

/// Polar-grid maximum of |A + B z + C z^2| + 1 - |z|^2: `radial` radii
/// spanning [0, 1] and `angular` angles on [0, 2 pi), then two rounds of
/// 10x subdivision around the best node. Ties keep the earliest node.
inline YOutcome y_oracle(double A, double B, double C, int radial = 720, int angular = 720) {
  if (radial < 64 || angular < 64) throw InputError("oracle grid needs at least 64 x 64 nodes");
  const auto objective = [&](double r, double theta) {
    const cplx z = std::polar(r, theta);
    return std::abs(A + B * z + C * z * z) + 1.0 - r * r;
  };

  double best = -1.0;
  double best_r = 0.0;
  double best_t = 0.0;
  for (int i = 0; i < radial; ++i) {
    const double r = static_cast<double>(i) / (radial - 1);
    for (int j = 0; j < angular; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / angular;
      const double v = objective(r, theta);
      if (v > best) {
        best = v;
        best_r = r;
        best_t = theta;
      }
    }
  }

  double dr = 1.0 / (radial - 1);
  double dt = 2.0 * std::numbers::pi / angular;
  for (int round = 0; round < 2; ++round) {
    const double r0 = best_r;
    const double t0 = best_t;
    for (int i = -10; i <= 10; ++i) {
      const double r = std::clamp(r0 + i * dr / 10.0, 0.0, 1.0);
      for (int j = -10; j <= 10; ++j) {
        const double theta = t0 + j * dt / 10.0;
        const double v = objective(r, theta);
        if (v > best) {
          best = v;
          best_r = r;
          best_t = theta;
        }
      }
    }
    dr /= 10.0;
    dt /= 10.0;
  }
  return {best, YBranch::Oracle, std::polar(best_r, best_t)};
}

}  // namespace loghankel
