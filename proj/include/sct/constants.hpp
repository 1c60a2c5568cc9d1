#pragma once

// Physical constants, CODATA 2018. SI units throughout the toolkit.
namespace sct::constants {

inline constexpr double mu0 = 1.25663706212e-6;       // vacuum permeability [H/m]
inline constexpr double eps0 = 8.8541878128e-12;      // vacuum permittivity [F/m]
inline constexpr double hbar = 1.054571817e-34;       // reduced Planck constant [J s]
inline constexpr double elementary_charge = 1.602176634e-19;  // [C], exact
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // [kg]
inline constexpr double electron_mass_u = 5.48579909065e-4;   // electron mass [u]

// 9Be+ ion: isotope mass minus one electron.
inline constexpr double be9_ion_mass_u = 9.0121831 - electron_mass_u;
inline constexpr double be9_ion_mass = be9_ion_mass_u * atomic_mass_unit;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace sct::constants
