#pragma once

// Polarizabilities of atoms, oscillators and nanospheres: bare, thermal,
// state-dependent, and surface-dressed. Electric variants are real and
// non-negative on the positive imaginary axis (ground-state lines).

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "polder/materials.hpp"

namespace polder {

struct TransitionLine {
    double d_sq;      // |d^{ba}|^2, C^2 m^2
    double omega_ba;  // signed transition frequency, rad/s (> 0: b above a)
    double width = 0.0;  // radiative width Gamma_a, rad/s (0 = not supplied)
    // Per-axis weights of the dipole dyadic diagonal; isotropic by default.
    std::array<double, 3> axis_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
};

struct AtomLines {
    std::string state = "g";
    std::vector<TransitionLine> lines;
    bool isotropic = true;
};

struct TwoLevel {
    double d_sq;     // C^2 m^2
    double omega_0;  // rad/s, > 0
};

struct DampedOscillator {
    double q;        // C
    double mass;     // kg
    double omega_0;  // renormalized resonance, rad/s
    double gamma;    // damping rate, rad/s (constant)
};

struct NanosphereElectric {
    double radius;  // m
    DielectricModel material;
};

struct NanosphereMagnetic {
    double radius;  // m
    DielectricModel material;
};

struct StaticPolarizability {
    double alpha0;  // C m^2 / V
};

using Polarizability =
    std::variant<AtomLines, TwoLevel, DampedOscillator, NanosphereElectric,
                 NanosphereMagnetic, StaticPolarizability>;

// Boltzmann-weighted family of state-resolved line sets.
struct ThermalAtomState {
    double energy;  // J
    AtomLines lines;
};

struct ThermalAtom {
    std::vector<ThermalAtomState> states;
};

// Isotropic scalar polarizability on the real axis. The i0+ prescription is
// realized as a small Lorentzian damping eta = eta_scale * |omega_ba| per
// line (explicit per-line widths take precedence). Magnetic nanospheres
// return beta.
std::complex<double> alpha_real_axis(const Polarizability& p, double omega,
                                     double eta_scale = 1e-6);

// Real evaluation at omega = i xi, xi >= 0.
double alpha_imag_axis(const Polarizability& p, double xi);

// Static value alpha(0) (equals alpha_imag_axis at xi = 0).
double alpha_static(const Polarizability& p);

// Per-axis diagonal (xx, yy, zz) on the imaginary axis; differs from the
// isotropic scalar only for anisotropic AtomLines weights.
std::array<double, 3> alpha_imag_axis_diagonal(const Polarizability& p,
                                               double xi);

double alpha_thermal_imag_axis(const ThermalAtom& atom, double T, double xi);
std::complex<double> alpha_thermal_real_axis(const ThermalAtom& atom, double T,
                                             double omega,
                                             double eta_scale = 1e-6);

// Clausius-Mossotti electric polarizability 4 pi eps0 R^3 (eps-1)/(eps+2).
std::complex<double> alpha_nanosphere_electric(double radius,
                                               const DielectricModel& material,
                                               double omega);
double alpha_nanosphere_electric_imag_axis(double radius,
                                           const DielectricModel& material,
                                           double xi);

// Eddy-current magnetic polarizability (2 pi / 15 mu0)(R omega/c)^2 (eps-1) R^3.
std::complex<double> beta_nanosphere_magnetic(double radius,
                                              const DielectricModel& material,
                                              double omega);
double beta_nanosphere_magnetic_imag_axis(double radius,
                                          const DielectricModel& material,
                                          double xi);

struct OscillatorStrengths {
    double electric;  // integral of Im alpha over the real axis
    double magnetic;  // integral of Im beta up to the cutoff
};

// Numerical oscillator-strength integrals; the cutoff applies to the
// magnetic sphere integral (divergent without one).
OscillatorStrengths oscillator_strength_integrals(const Polarizability& p,
                                                  double cutoff);

// Per-axis dressed polarizability alpha_ii = alpha_v / (1 - alpha_v G_ii).
// Throws std::domain_error at a vanishing denominator (surface-shifted mode).
struct DressedPolarizability {
    std::complex<double> xx;  // = yy
    std::complex<double> zz;
};
DressedPolarizability alpha_dressed(std::complex<double> alpha_v,
                                    std::complex<double> g_xx,
                                    std::complex<double> g_zz);

// Bare oscillator response alpha_v = (q^2/m) / (omega_0^2 - omega^2 - i gamma omega).
std::complex<double> oscillator_alpha_real_axis(const DampedOscillator& osc,
                                                double omega);
double oscillator_alpha_imag_axis(const DampedOscillator& osc, double xi);

// A frequency scale characterizing the decay of alpha(i xi); used to pick
// quadrature decay scales.
double response_frequency_scale(const Polarizability& p);

// Positions and widths of the Im alpha peaks (quadrature split points).
struct ResonancePeak {
    double omega;
    double width;
};
std::vector<ResonancePeak> absorption_resonances(const Polarizability& p);

// Atom/particle files: line=d_sq,omega_ba[,width], state_energy=... blocks
// for thermal sets, nanosphere records radius= and material=<file|preset>,
// static records alpha0=.
struct ParticleSpec {
    Polarizability polarizability;
    ThermalAtom thermal;  // empty unless state_energy records present
    std::string label;
};
ParticleSpec parse_particle(const std::string& text);
ParticleSpec load_particle_file(const std::string& path);
ParticleSpec particle_preset(const std::string& name);
bool is_particle_preset(const std::string& name);
std::string particle_preset_text(const std::string& name);

}  // namespace polder
