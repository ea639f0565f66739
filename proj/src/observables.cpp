#include "polder/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polder/constants.hpp"
#include "polder/numerics.hpp"

namespace polder {

double thomas_fermi_profile(double R_z, double z) {
    if (!(R_z > 0.0))
        throw std::domain_error("thomas_fermi_profile: R_z must be > 0");
    const double u = z / R_z;
    if (std::abs(u) >= 1.0) return 0.0;
    const double w = 1.0 - u * u;
    return 15.0 / (16.0 * R_z) * w * w;
}

TrapShift trap_shift(const std::function<double(double)>& potential,
                     const TrapConfig& trap, double amplitude) {
    if (!(trap.R_z > 0.0) || !(trap.R_z < trap.L_center))
        throw std::domain_error(
            "trap_shift: requires 0 < R_z < L_center (cloud clear of the "
            "surface)");
    if (!(trap.omega_trap > 0.0) || !(trap.mass > 0.0))
        throw std::domain_error("trap_shift: omega_trap, mass must be > 0");

    auto curvature = [&](double z) {
        const double x = trap.L_center + z;
        double d2;
        try {
            d2 = second_derivative_rel_step(potential, x);
        } catch (const std::exception& e) {
            throw std::runtime_error(
                "trap_shift: potential curvature failed inside the cloud at "
                "z = " +
                std::to_string(z) + ": " + e.what());
        }
        if (!std::isfinite(d2))
            throw std::runtime_error(
                "trap_shift: potential curvature failed inside the cloud at "
                "z = " +
                std::to_string(z));
        return thomas_fermi_profile(trap.R_z, z) * d2;
    };
    const double kappa =
        integrate_finite(curvature, -trap.R_z, trap.R_z, 1e-6).value;

    TrapShift out{};
    out.curvature_integral = kappa;
    const double w2 = trap.omega_trap * trap.omega_trap + kappa / trap.mass;
    if (!(w2 > 0.0))
        throw std::runtime_error(
            "trap_shift: attractive curvature destabilizes the trap");
    out.gamma = std::sqrt(w2) / trap.omega_trap - 1.0;

    out.nonlinearity_flag = false;
    if (amplitude > 0.0) {
        const double d2c =
            second_derivative_rel_step(potential, trap.L_center);
        auto d2fn = [&](double x) {
            return second_derivative_rel_step(potential, x);
        };
        const double d3c =
            derivative_rel_step(d2fn, trap.L_center, 1e-2);
        out.nonlinearity_flag = std::abs(d3c) * amplitude >
                                0.5 * std::abs(d2c);
    }
    return out;
}

BlochResult bloch_period(const std::function<double(double)>& potential,
                         double q_width, double L, double probe_extent,
                         double reference_force) {
    if (!(q_width > 0.0))
        throw std::domain_error("bloch_period: q_width must be > 0");
    if (!(L > 0.0)) throw std::domain_error("bloch_period: L must be > 0");

    BlochResult out{};
    auto force = [&](double x) {
        return -derivative_rel_step(potential, x, 1e-4);
    };
    if (probe_extent > 0.0) {
        const double a = L - 0.5 * probe_extent;
        const double b = L + 0.5 * probe_extent;
        if (!(a > 0.0))
            throw std::domain_error("bloch_period: probe extends below 0");
        out.mean_force =
            integrate_finite(force, a, b, 1e-6).value / probe_extent;
    } else {
        out.mean_force = force(L);
    }
    const double f = std::abs(out.mean_force);
    out.tau_B = f > 0.0 ? constants.hbar * q_width / f
                        : std::numeric_limits<double>::infinity();
    out.relative_shift =
        reference_force != 0.0 ? f / std::abs(reference_force) : 0.0;
    return out;
}

double shimizu_potential(double C4, double a, double d) {
    if (!(d > 0.0)) throw std::domain_error("shimizu_potential: d must be > 0");
    if (!(a >= 0.0))
        throw std::domain_error("shimizu_potential: a must be >= 0");
    return -C4 / ((d + a) * d * d * d);
}

}  // namespace polder
