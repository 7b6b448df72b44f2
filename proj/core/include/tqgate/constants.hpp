#pragma once

#include <numbers>

namespace tqgate {

// Fundamental constants, SI units (CODATA 2018; h is exact by definition).
struct PhysConsts {
    double mu0 = 1.25663706212e-6;    // vacuum permeability [T m/A]
    double muB = 9.2740100783e-24;    // Bohr magneton [J/T]
    double h = 6.62607015e-34;        // Planck constant [J s]
    double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);
    double eps0 = 8.8541878128e-12;   // vacuum permittivity [F/m]
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace tqgate
