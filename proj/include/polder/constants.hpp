#pragma once

// CODATA-2018 physical constants, SI units.

namespace polder {

struct PhysicalConstants {
    double hbar;            // J s
    double c;               // m/s
    double k_B;             // J/K
    double eps0;            // F/m
    double mu0;             // H/m
    double e_charge;        // C
    double fine_structure;  // dimensionless
};

inline constexpr PhysicalConstants constants{
    1.054571817e-34,
    2.99792458e8,
    1.380649e-23,
    8.8541878128e-12,
    1.25663706212e-6,
    1.602176634e-19,
    7.2973525693e-3,
};

inline constexpr double pi = 3.14159265358979323846;

}  // namespace polder
