#pragma once

#include <numbers>

// Exact SI (2019) values.
namespace wqed::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double e = 1.602176634e-19;     // C
inline constexpr double h = 6.62607015e-34;      // J s
inline constexpr double hbar = h / two_pi;       // J s
inline constexpr double kB = 1.380649e-23;       // J / K
inline constexpr double R_K = h / (e * e);       // ohm, von Klitzing constant

} // namespace wqed::constants
