#pragma once

// Scattered electric and magnetic Green tensors of a half-space at a vacuum
// point, on the real and imaginary frequency axes, with distance-regime
// classification and the closed-form regime asymptotics.

#include <complex>

#include "polder/materials.hpp"
#include "polder/numerics.hpp"

namespace polder {

enum class FrequencyAxis { real_omega, imaginary_xi };
enum class GreenFlavor { electric, magnetic };
enum class DistanceRegime { sub_skin, non_retarded, retarded, crossover };

struct HalfSpaceGeometry {
    DielectricModel material;
    // mu = 1 (nonmagnetic) throughout.
};

struct GreenDiagonal {
    std::complex<double> g_xx;  // = g_yy; electric: 1/(F m^2), magnetic: H/m^4
    std::complex<double> g_zz;
    GreenFlavor flavor = GreenFlavor::electric;
    FrequencyAxis axis = FrequencyAxis::imaginary_xi;
    double L = 0.0;     // m
    double freq = 0.0;  // rad/s (omega or xi)
    bool regime_warning = false;
};

struct KappaPair {
    std::complex<double> kappa;    // vacuum, sqrt(k^2 - w^2/c^2)
    std::complex<double> kappa_m;  // medium, sqrt(k^2 - eps w^2/c^2)
};

// Branch: Im kappa <= 0 and Re kappa >= 0 (real axis); on the imaginary
// axis both are real and positive.
KappaPair kappa_pair(const DielectricModel& material, double freq,
                     FrequencyAxis axis, double k);

struct FresnelCoefficients {
    std::complex<double> r_te;
    std::complex<double> r_tm;
};

FresnelCoefficients fresnel(const DielectricModel& material, double freq,
                            FrequencyAxis axis, double k);

// Static (xi = 0) reflection limits used for the n = 0 Matsubara term:
// Drude -> r_tm = 1, r_te = 0; dielectrics -> r_tm = (eps(0)-1)/(eps(0)+1).
double static_rtm(const DielectricModel& material);

GreenDiagonal green_electric_imag_axis(const HalfSpaceGeometry& geom, double L,
                                       double xi,
                                       const QuadratureOptions& opt = {});

GreenDiagonal green_electric_real_axis(const HalfSpaceGeometry& geom, double L,
                                       double omega,
                                       const QuadratureOptions& opt = {});

GreenDiagonal green_magnetic(const HalfSpaceGeometry& geom, double L,
                             double freq, FrequencyAxis axis,
                             const QuadratureOptions& opt = {});

GreenDiagonal green_dispatch(const HalfSpaceGeometry& geom, GreenFlavor flavor,
                             double L, double freq, FrequencyAxis axis,
                             const QuadratureOptions& opt = {});

// Compares L against the skin depth and the vacuum wavelength with a guard
// factor 3; reports crossover inside the guard bands.
DistanceRegime classify_regime(const HalfSpaceGeometry& geom, double L,
                               double omega);

// Closed-form leading-order entries per regime (metals, |eps| >> 1), with
// g_zz carrying its own retarded envelope. The electric sub-skin cell has no
// closed form and throws std::invalid_argument. When the requested row does
// not match classify_regime the result carries regime_warning.
GreenDiagonal green_asymptotic(const HalfSpaceGeometry& geom, double L,
                               double omega, DistanceRegime row,
                               GreenFlavor flavor = GreenFlavor::electric);

}  // namespace polder
