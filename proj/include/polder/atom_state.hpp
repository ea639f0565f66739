#pragma once

// State-dependent free energy: non-resonant Matsubara part plus the resonant
// real-photon contribution weighted by Bose-Einstein occupations, and its
// high-temperature asymptote.

#include "polder/equilibrium.hpp"
#include "polder/green_planar.hpp"
#include "polder/response.hpp"

namespace polder {

// Bose-Einstein occupation 1/(exp(hbar w / k_B T) - 1); the negative branch
// uses N(w) = -1 - N(-w). Returns +infinity at w = 0 (divergence marker).
double occupation(double omega, double T);

// Free energy of an atom prepared in the state carrying these (signed)
// lines: -k_B T sum'_n alpha^a(i xi_n) G(i xi_n)
//        + sum_b N(w_ba) d^ab_i d^ba_j Re G_ji(L, w_ba).
double free_energy_state(const AtomLines& atom, const HalfSpaceGeometry& geom,
                         double L, double T,
                         const EquilibriumOptions& opt = {});

// Resonant part alone (useful for ratio diagnostics).
double resonant_part(const AtomLines& atom, const HalfSpaceGeometry& geom,
                     double L, double T, const EquilibriumOptions& opt = {});
double nonresonant_part(const AtomLines& atom, const HalfSpaceGeometry& geom,
                        double L, double T,
                        const EquilibriumOptions& opt = {});

// High-temperature limit of the resonant term,
// (k_B T/hbar) [sum_{up} Re G^{ba}/w_ba - sum_{down} Re G^{b'a}/w_ab'].
// validity_ok is false when k_B T < 3 hbar |w_ba| for some retained line.
struct ResonantHighT {
    double value;
    bool validity_ok;
};
ResonantHighT resonant_high_T(const AtomLines& atom,
                              const HalfSpaceGeometry& geom, double L,
                              double T, const EquilibriumOptions& opt = {});

// Diagnostic proportional to the surface-modified decay rate of each line:
// sum_b d^2_b Im tr G(L, |w_ba|); no absolute normalization is attached.
double decay_rate_diagnostic(const AtomLines& atom,
                             const HalfSpaceGeometry& geom, double L,
                             const EquilibriumOptions& opt = {});

}  // namespace polder
