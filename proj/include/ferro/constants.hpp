#pragma once

#include <numbers>

namespace ferro {

inline constexpr double pi = std::numbers::pi;

// Vacuum permeability, H/m.
inline constexpr double mu0 = 4.0e-7 * pi;

}  // namespace ferro
