#pragma once

// Forces on a cold particle from a surface and environment at unequal
// temperatures: S-tensor kernel (plane-wave decomposition with transmission
// factors and analytic depth integration), dipole-force potential,
// composition rule, radiation-pressure spectrum, large-distance asymptote.

#include "polder/equilibrium.hpp"
#include "polder/green_planar.hpp"
#include "polder/response.hpp"

namespace polder {

struct ThermalConditions {
    double T_S;        // surface, K
    double T_E;        // environment, K
    double T_A = 0.0;  // atom (fixed 0 in this module)
    bool equilibrium() const { return T_S == T_E; }
};

enum class SSector { total, evanescent, propagating };

struct STensorDiag {
    double s_xx;  // >= 0, same units as the electric Green tensor
    double s_zz;
    double L;      // m
    double omega;  // rad/s
    SSector sector = SSector::total;
};

// S_ij(r, r, w) = Im[eps0 eps(w)] int_halfspace d^3x G*_ik G_jk, evaluated in
// the plane-wave representation. The propagating sector is independent of L;
// the evanescent sector carries the entire distance dependence. Throws
// std::domain_error for lossless substrates (the depth integral diverges).
STensorDiag s_tensor(const HalfSpaceGeometry& geom, double L, double omega,
                     SSector sector = SSector::total,
                     const QuadratureOptions& opt = {});

// Dipole potential U = -alpha0 int dw/2pi 2 hbar N(w, T_S) [2 s_xx + s_zz],
// reported relative to its (L-independent) large-distance limit, i.e. built
// from the evanescent sector. T_S = 0 returns 0.
double neq_dipole_potential(double alpha0, const HalfSpaceGeometry& geom,
                            double L, double T_S,
                            const QuadratureOptions& opt = {});

// -d/dL of the dipole potential.
double neq_dipole_force(double alpha0, const HalfSpaceGeometry& geom, double L,
                        double T_S, const QuadratureOptions& opt = {});

// Composition rule
// F(T_S, T_E) = F_neq(T_S) + [F_eq(T_E) - F_neq(T_E)]; the equilibrium force
// is the Matsubara force of a static polarizability (zero-T integral when
// T_E = 0). At T_S = T_E this reduces to the equilibrium force identically.
double neq_force_total(double alpha0, const HalfSpaceGeometry& geom, double L,
                       const ThermalConditions& cond,
                       const QuadratureOptions& opt = {});

// Large-distance asymptote for dielectric substrates,
// -(pi/12) (alpha0/4 pi eps0) (eps(0)+1)/sqrt(eps(0)-1) k_B^2 (T_S^2-T_E^2)/(hbar c L^2).
// Throws std::domain_error for eps_static <= 1 and std::invalid_argument
// for diverging eps(0) (Drude substrates are not covered).
double neq_asymptote(double alpha0, double eps_static, double L, double T_S,
                     double T_E);

// Radiation-pressure force spectral density (force per unit omega) on an
// absorbing particle above the hot surface; positive = repulsive. Only the
// propagating sector contributes, so the value is independent of L.
double radiation_pressure_spectrum(const Polarizability& p,
                                   const HalfSpaceGeometry& geom, double L,
                                   double omega, double T_S,
                                   const QuadratureOptions& opt = {});

}  // namespace polder
