#pragma once

// Experiment-facing quantities: BEC center-of-mass frequency shift with
// Thomas-Fermi averaging, Bloch-oscillation period, and the Shimizu model
// potential.

#include <functional>

namespace polder {

struct TrapConfig {
    double omega_trap;  // rad/s
    double R_z;         // Thomas-Fermi radius, m
    double mass;        // kg
    double L_center;    // trap center - surface distance, m (> R_z)
};

// (15/16 R_z)(1 - (z/R_z)^2)^2 for |z| <= R_z, else 0. Normalized to 1.
double thomas_fermi_profile(double R_z, double z);

struct TrapShift {
    double gamma;  // (omega_cm - omega_trap)/omega_trap
    double curvature_integral;  // int n0(z) F''(L+z) dz, N/m
    bool nonlinearity_flag;     // |F'''| amplitude ~ |F''| at the center
};

// omega_cm^2 = omega_trap^2 + (1/m) int dz n0(z) d^2/dz^2 F(L_center + z).
// `amplitude` (m) only feeds the nonlinearity flag; 0 disables it.
TrapShift trap_shift(const std::function<double(double)>& potential,
                     const TrapConfig& trap, double amplitude = 0.0);

struct BlochResult {
    double tau_B;            // s; +infinity marker when the mean force is 0
    double mean_force;       // N (signed, -dU/dL averaged over the probe)
    double relative_shift;   // |mean_force| / reference_force (0 if no ref)
};

// 1/tau_B = |mean of -dU/dL over [L - probe/2, L + probe/2]| / (hbar q_width).
BlochResult bloch_period(const std::function<double(double)>& potential,
                         double q_width, double L, double probe_extent,
                         double reference_force = 0.0);

// Shimizu model potential V = -C4 / ((d + a) d^3).
double shimizu_potential(double C4, double a, double d);

}  // namespace polder
