#pragma once

// Velocity-dependent radiative forces: blackbody friction, two-temperature
// Dedkov-Kyasov force, hot-field acceleration, near-surface friction, and
// the non-retarded closed forms.

#include <string>

#include "polder/green_planar.hpp"
#include "polder/response.hpp"

namespace polder {

struct FrictionResult {
    double force;       // N, signed component along the velocity
    std::string regime;
    bool relativistic_factor_used = false;
    bool small_v_expansion = false;
};

// f = -v (hbar^2/k_B T)/(12 pi^2 eps0 c^5) int dw w^5 Im alpha / sinh^2(hbar w/2 k_B T).
// T <= 0 returns exactly 0 (the vacuum is Lorentz-invariant).
FrictionResult blackbody_friction(const Polarizability& p, double T, double v,
                                  const QuadratureOptions& opt = {});

// Full two-temperature force, reduced by azimuthal symmetry to a nested
// (omega, cos theta) quadrature with the Doppler factor w' = gamma w (1 + beta u).
FrictionResult dedkov_kyasov(const Polarizability& p, double T_F, double T_A,
                             double v, const QuadratureOptions& opt = {});

// Ground-state atom in a hot field, first order in v:
// f = +v hbar/(3 pi^2 eps0 c^5) int dw w^2 Im alpha d/dw [w^3 N(w, T_F)].
FrictionResult hot_field_force(const Polarizability& p, double T_F, double v,
                               const QuadratureOptions& opt = {});

// Friction for motion parallel to the surface; the mixed gradients of the
// scattered Green tensor are taken analytically under the k-integral
// (factor k^2/2 on the trace kernel). The non-retarded option replaces the
// kernel by its quasi-static k^3 r_p form.
FrictionResult surface_friction(const Polarizability& p,
                                const HalfSpaceGeometry& geom, double L,
                                double T, double v_parallel,
                                bool nonretarded_kernel = false,
                                bool use_dressed = false,
                                const QuadratureOptions& opt = {});

// Scheel-Buhmann non-retarded closed form; lines need radiative widths and
// the surface plasmon frequency comes from the Drude substrate
// (omega_s = omega_p / sqrt 2).
FrictionResult scheel_buhmann_nonretarded(const AtomLines& atom,
                                          const HalfSpaceGeometry& geom,
                                          double L, double v);

// Harris-Schaich order-of-magnitude scaling
// f = -v hbar alpha_fs^2 / L^10 (alpha0 c / (4 pi eps0 omega_s))^2.
FrictionResult harris_schaich_scale(double alpha0, double L, double omega_s,
                                    double v);

}  // namespace polder
