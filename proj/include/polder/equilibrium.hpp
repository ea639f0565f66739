#pragma once

// Equilibrium Casimir-Polder free energies, forces, asymptotes, and the
// non-perturbative log-det variant. Sign convention: negative free energy =
// attraction toward the surface.

#include <functional>
#include <string>
#include <vector>

#include "polder/green_planar.hpp"
#include "polder/response.hpp"

namespace polder {

struct PotentialCurve {
    struct Entry {
        double L;      // m
        double value;  // J (free energy) or N (force)
    };
    std::vector<Entry> entries;
    std::string atom_label;
    std::string material_label;
    double T = 0.0;
    std::string kind;  // "free_energy" | "force"
};

struct EquilibriumOptions {
    QuadratureOptions quad{};
    double matsubara_rel_tol = 1e-8;
};

// -k_B T sum'_n alpha(i xi_n) [2 G_xx + G_zz](L, i xi_n), xi_n = 2 pi n k_B T/hbar.
// Magnetic nanospheres couple to the magnetic Green tensor automatically.
double free_energy_matsubara(const Polarizability& p,
                             const HalfSpaceGeometry& geom, double L, double T,
                             const EquilibriumOptions& opt = {});

// -(hbar/2 pi) int_0^inf dxi alpha(i xi) [2 G_xx + G_zz](L, i xi).
double free_energy_zero_T(const Polarizability& p,
                          const HalfSpaceGeometry& geom, double L,
                          const EquilibriumOptions& opt = {});

// Casimir-Polder asymptote -3 hbar c alpha0 / (2^5 pi^2 eps0 L^4).
double asymptote_cp(double alpha0, double L);

enum class VdwReflectivity { perfect, table_factor };

// van der Waals asymptote -(hbar / 16 pi^2 eps0 L^3) int_0^inf alpha(i xi) dxi;
// the table_factor option multiplies the integrand by (1 - 2/eps(i xi)).
double asymptote_vdw(const Polarizability& p, double L,
                     VdwReflectivity refl = VdwReflectivity::perfect,
                     const DielectricModel* material = nullptr,
                     const EquilibriumOptions& opt = {});

// Lifshitz asymptote -k_B T alpha0 / (16 pi eps0 L^3).
double asymptote_lifshitz(double alpha0, double L, double T);

// Wick-rotated log-det free energy
// k_B T sum'_n [2 ln(1 - a_v g_xx) + ln(1 - a_v g_zz)](i xi_n).
// Throws std::domain_error naming the offending n when 1 - a_v g <= 0.
double free_energy_nonperturbative(const DampedOscillator& osc,
                                   const HalfSpaceGeometry& geom, double L,
                                   double T,
                                   const EquilibriumOptions& opt = {});

// Real-frequency cross-check path for the free energy (coth integral with
// the damping floor); low accuracy by construction, ~5% target.
double free_energy_real_axis_check(const DampedOscillator& osc,
                                   const HalfSpaceGeometry& geom, double L,
                                   double T);

// -d/dL of the selected free energy; negative = attraction.
double force_matsubara(const Polarizability& p, const HalfSpaceGeometry& geom,
                       double L, double T, const EquilibriumOptions& opt = {});
double force_zero_T(const Polarizability& p, const HalfSpaceGeometry& geom,
                    double L, const EquilibriumOptions& opt = {});
double force_of(const std::function<double(double)>& free_energy, double L);

// Free-energy or force curve over a distance grid (parallel over points;
// T = 0 selects the zero-temperature integral). Entries come out ordered
// and finite.
PotentialCurve potential_curve(const Polarizability& p,
                               const HalfSpaceGeometry& geom,
                               const std::vector<double>& distances, double T,
                               bool force = false, int jobs = 0,
                               const EquilibriumOptions& opt = {});

}  // namespace polder
