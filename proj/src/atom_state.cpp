#include "polder/atom_state.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polder/constants.hpp"
#include "polder/numerics.hpp"

namespace polder {

double occupation(double omega, double T) {
    if (!(T > 0.0)) throw std::domain_error("occupation: T must be > 0");
    if (omega == 0.0) return std::numeric_limits<double>::infinity();
    if (omega < 0.0) return -1.0 - occupation(-omega, T);
    const double x = constants.hbar * omega / (constants.k_B * T);
    return 1.0 / std::expm1(x);
}

namespace {

// Contraction d_i^{ab} d_j^{ba} Re G_ji for one line; isotropic weights give
// (d^2/3)(2 Re g_xx + Re g_zz).
double line_green_contraction(const TransitionLine& line,
                              const GreenDiagonal& g) {
    const auto& w = line.axis_weights;
    return line.d_sq * ((w[0] + w[1]) * g.g_xx.real() + w[2] * g.g_zz.real());
}

}  // namespace

double nonresonant_part(const AtomLines& atom, const HalfSpaceGeometry& geom,
                        double L, double T, const EquilibriumOptions& opt) {
    return free_energy_matsubara(Polarizability(atom), geom, L, T, opt);
}

double resonant_part(const AtomLines& atom, const HalfSpaceGeometry& geom,
                     double L, double T, const EquilibriumOptions& opt) {
    double sum = 0.0;
    for (const auto& line : atom.lines) {
        if (line.d_sq == 0.0 || line.omega_ba == 0.0) continue;
        // Re G is even in omega: evaluate at |w_ba| and keep the sign
        // bookkeeping in N(w_ba).
        const GreenDiagonal g = green_electric_real_axis(
            geom, L, std::abs(line.omega_ba), opt.quad);
        sum += occupation(line.omega_ba, T) * line_green_contraction(line, g);
    }
    return sum;
}

double free_energy_state(const AtomLines& atom, const HalfSpaceGeometry& geom,
                         double L, double T, const EquilibriumOptions& opt) {
    return nonresonant_part(atom, geom, L, T, opt) +
           resonant_part(atom, geom, L, T, opt);
}

ResonantHighT resonant_high_T(const AtomLines& atom,
                              const HalfSpaceGeometry& geom, double L,
                              double T, const EquilibriumOptions& opt) {
    if (!(T > 0.0)) throw std::domain_error("resonant_high_T: T must be > 0");
    ResonantHighT out{0.0, true};
    const double kT = constants.k_B * T;
    for (const auto& line : atom.lines) {
        if (line.d_sq == 0.0 || line.omega_ba == 0.0) continue;
        const double w = std::abs(line.omega_ba);
        if (kT < 3.0 * constants.hbar * w) out.validity_ok = false;
        const GreenDiagonal g =
            green_electric_real_axis(geom, L, w, opt.quad);
        const double contraction = line_green_contraction(line, g);
        // up transitions (w_ba > 0) enter with +, down transitions with -.
        out.value += (line.omega_ba > 0.0 ? 1.0 : -1.0) * contraction / w;
    }
    out.value *= kT / constants.hbar;
    return out;
}

double decay_rate_diagnostic(const AtomLines& atom,
                             const HalfSpaceGeometry& geom, double L,
                             const EquilibriumOptions& opt) {
    double sum = 0.0;
    for (const auto& line : atom.lines) {
        if (line.d_sq == 0.0 || line.omega_ba == 0.0) continue;
        const GreenDiagonal g = green_electric_real_axis(
            geom, L, std::abs(line.omega_ba), opt.quad);
        const auto& w = line.axis_weights;
        sum += line.d_sq *
               ((w[0] + w[1]) * g.g_xx.imag() + w[2] * g.g_zz.imag());
    }
    return sum;
}

}  // namespace polder
