#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "loghankel/error.hpp"

namespace loghankel {

/// The five function classes. F1..F4 are defined by Re w(z) f'(z) > 0 with
/// the weights (1-z), (1-z^2), (1-z+z^2), (1-z)^2; SS is the class of
/// functions starlike with respect to symmetric points.
enum class GeometricClass { SS, F1, F2, F3, F4 };

inline constexpr std::array<GeometricClass, 5> kAllClasses = {
    GeometricClass::SS, GeometricClass::F1, GeometricClass::F2, GeometricClass::F3,
    GeometricClass::F4};

inline constexpr std::string_view to_string(GeometricClass tag) noexcept {
  switch (tag) {
    case GeometricClass::SS: return "ss";
    case GeometricClass::F1: return "f1";
    case GeometricClass::F2: return "f2";
    case GeometricClass::F3: return "f3";
    case GeometricClass::F4: return "f4";
  }
  return "?";
}

inline GeometricClass parse_class(std::string_view name) {
  for (const auto tag : kAllClasses) {
    if (to_string(tag) == name) return tag;
  }
  throw InputError("unknown class '" + std::string(name) + "' (expected ss, f1, f2, f3 or f4)");
}

/// Weight polynomial w with w(z) f'(z) = p(z), ascending coefficients.
/// SS has no weight: it is built from 2 z f' = p (f(z) - f(-z)).
inline constexpr std::optional<std::array<double, 3>> weight(GeometricClass tag) noexcept {
  switch (tag) {
    case GeometricClass::F1: return std::array{1.0, -1.0, 0.0};
    case GeometricClass::F2: return std::array{1.0, 0.0, -1.0};
    case GeometricClass::F3: return std::array{1.0, -1.0, 1.0};
    case GeometricClass::F4: return std::array{1.0, -2.0, 1.0};
    case GeometricClass::SS: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace loghankel
