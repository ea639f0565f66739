#include "polder/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "polder/constants.hpp"
#include "polder/numerics.hpp"
#include "polder/sweep.hpp"

namespace polder {

namespace {

double xi_n(long n, double T) {
    return 2.0 * pi * n * constants.k_B * T / constants.hbar;
}

GreenFlavor flavor_of(const Polarizability& p) {
    return std::holds_alternative<NanosphereMagnetic>(p)
               ? GreenFlavor::magnetic
               : GreenFlavor::electric;
}

// alpha_ij G_ji contraction for a diagonal pair: 2 a_xx g_xx + a_zz g_zz,
// with per-axis atom weights when anisotropic.
double trace_term(const Polarizability& p, const GreenDiagonal& g, double xi) {
    const auto a = alpha_imag_axis_diagonal(p, xi);
    return (a[0] + a[1]) * g.g_xx.real() + a[2] * g.g_zz.real();
}

}  // namespace

double free_energy_matsubara(const Polarizability& p,
                             const HalfSpaceGeometry& geom, double L, double T,
                             const EquilibriumOptions& opt) {
    if (!(T > 0.0))
        throw std::domain_error("free_energy_matsubara: T must be > 0");
    const GreenFlavor flavor = flavor_of(p);
    auto term = [&](long n) {
        const double xi = xi_n(n, T);
        const GreenDiagonal g = green_dispatch(geom, flavor, L, xi,
                                               FrequencyAxis::imaginary_xi,
                                               opt.quad);
        return trace_term(p, g, xi);
    };
    MatsubaraOptions mopt;
    mopt.rel_tol = opt.matsubara_rel_tol;
    return -constants.k_B * T * matsubara_sum(term, T, mopt);
}

double free_energy_zero_T(const Polarizability& p,
                          const HalfSpaceGeometry& geom, double L,
                          const EquilibriumOptions& opt) {
    if (!(L > 0.0)) throw std::domain_error("free_energy_zero_T: L > 0");
    const GreenFlavor flavor = flavor_of(p);
    auto f = [&](double xi) {
        const GreenDiagonal g = green_dispatch(geom, flavor, L, xi,
                                               FrequencyAxis::imaginary_xi,
                                               opt.quad);
        return trace_term(p, g, xi);
    };
    const double omega_scale = response_frequency_scale(p);
    double decay = constants.c / (2.0 * L);
    if (omega_scale > 0.0) decay = std::min(decay, omega_scale);
    const auto r = integrate_semiinfinite(f, decay, opt.quad.rel_tol,
                                          opt.quad.abs_tol,
                                          opt.quad.max_intervals);
    return -(constants.hbar / (2.0 * pi)) * r.value;
}

double asymptote_cp(double alpha0, double L) {
    if (!(L > 0.0)) throw std::domain_error("asymptote_cp: L > 0");
    return -3.0 * constants.hbar * constants.c * alpha0 /
           (32.0 * pi * pi * constants.eps0 * L * L * L * L);
}

double asymptote_vdw(const Polarizability& p, double L, VdwReflectivity refl,
                     const DielectricModel* material,
                     const EquilibriumOptions& opt) {
    if (!(L > 0.0)) throw std::domain_error("asymptote_vdw: L > 0");
    if (refl == VdwReflectivity::table_factor && !material)
        throw std::invalid_argument(
            "asymptote_vdw: table_factor needs a material");
    auto f = [&](double xi) {
        double v = alpha_imag_axis(p, xi);
        if (refl == VdwReflectivity::table_factor) {
            const double eps = permittivity_imag_axis(*material, xi);
            v *= std::isinf(eps) ? 1.0 : 1.0 - 2.0 / eps;
        }
        return v;
    };
    const double scale = std::max(response_frequency_scale(p), 1e10);
    const auto r = integrate_semiinfinite(f, scale, opt.quad.rel_tol,
                                          opt.quad.abs_tol,
                                          opt.quad.max_intervals);
    if (!std::isfinite(r.value))
        throw std::runtime_error("asymptote_vdw: divergent alpha integral");
    return -constants.hbar * r.value /
           (16.0 * pi * pi * constants.eps0 * L * L * L);
}

double asymptote_lifshitz(double alpha0, double L, double T) {
    if (!(L > 0.0) || !(T > 0.0))
        throw std::domain_error("asymptote_lifshitz: L, T > 0");
    return -constants.k_B * T * alpha0 /
           (16.0 * pi * constants.eps0 * L * L * L);
}

double free_energy_nonperturbative(const DampedOscillator& osc,
                                   const HalfSpaceGeometry& geom, double L,
                                   double T, const EquilibriumOptions& opt) {
    if (!(T > 0.0))
        throw std::domain_error("free_energy_nonperturbative: T must be > 0");
    auto term = [&](long n) {
        const double xi = xi_n(n, T);
        const GreenDiagonal g = green_electric_imag_axis(geom, L, xi,
                                                         opt.quad);
        const double av = oscillator_alpha_imag_axis(osc, xi);
        const double dxx = 1.0 - av * g.g_xx.real();
        const double dzz = 1.0 - av * g.g_zz.real();
        if (!(dxx > 0.0) || !(dzz > 0.0))
            throw std::domain_error(
                "free_energy_nonperturbative: 1 - alpha_v G <= 0 at n = " +
                std::to_string(n) + " (overcoupled oscillator)");
        return 2.0 * std::log(dxx) + std::log(dzz);
    };
    MatsubaraOptions mopt;
    mopt.rel_tol = opt.matsubara_rel_tol;
    return constants.k_B * T * matsubara_sum(term, T, mopt);
}

double free_energy_real_axis_check(const DampedOscillator& osc,
                                   const HalfSpaceGeometry& geom, double L,
                                   double T) {
    // Low-accuracy coth-integral representation over real frequencies, kept
    // as a cross-check of the Wick-rotated production path. The integrand
    // oscillates with the round-trip phase 2 w L / c and does not decay;
    // the truncation is averaged over four quarter-period offsets, which
    // cancels the oscillatory tail through second order.
    QuadratureOptions q;
    q.rel_tol = 1e-5;
    q.max_intervals = 20000;
    auto f = [&](double omega) {
        if (omega <= 0.0) return 0.0;
        const GreenDiagonal g = green_electric_real_axis(geom, L, omega, q);
        const std::complex<double> av = oscillator_alpha_real_axis(osc, omega);
        const double tr = (av * (2.0 * g.g_xx + g.g_zz)).imag();
        return tr / std::tanh(constants.hbar * omega /
                              (2.0 * constants.k_B * T));
    };
    const double w0 = osc.omega_0;
    const double period = pi * constants.c / L;
    const double cut0 = 20.0 * w0;

    std::vector<double> breaks{0.0,
                               0.5 * w0,
                               w0 - 5.0 * osc.gamma,
                               w0 - osc.gamma,
                               w0,
                               w0 + osc.gamma,
                               w0 + 5.0 * osc.gamma,
                               2.0 * w0};
    for (double w = 2.0 * w0; w < cut0; w += period / 8.0)
        breaks.push_back(w);
    breaks.push_back(cut0);
    double partial = integrate_panels(f, breaks, 1e-4).value;

    double acc = partial;
    double lo = cut0;
    for (int j = 1; j < 4; ++j) {
        const double hi = cut0 + j * period / 4.0;
        std::vector<double> sliver{lo, 0.5 * (lo + hi), hi};
        partial += integrate_panels(f, sliver, 1e-4).value;
        acc += partial;
        lo = hi;
    }
    return -(constants.hbar / (2.0 * pi)) * acc / 4.0;
}

double force_of(const std::function<double(double)>& free_energy, double L) {
    return -derivative_rel_step(free_energy, L);
}

double force_matsubara(const Polarizability& p, const HalfSpaceGeometry& geom,
                       double L, double T, const EquilibriumOptions& opt) {
    return force_of(
        [&](double l) { return free_energy_matsubara(p, geom, l, T, opt); },
        L);
}

double force_zero_T(const Polarizability& p, const HalfSpaceGeometry& geom,
                    double L, const EquilibriumOptions& opt) {
    return force_of(
        [&](double l) { return free_energy_zero_T(p, geom, l, opt); }, L);
}

PotentialCurve potential_curve(const Polarizability& p,
                               const HalfSpaceGeometry& geom,
                               const std::vector<double>& distances, double T,
                               bool force, int jobs,
                               const EquilibriumOptions& opt) {
    auto value = [&](double L) {
        if (force)
            return T > 0.0 ? force_matsubara(p, geom, L, T, opt)
                           : force_zero_T(p, geom, L, opt);
        return T > 0.0 ? free_energy_matsubara(p, geom, L, T, opt)
                       : free_energy_zero_T(p, geom, L, opt);
    };
    const auto values = map_grid(distances, value, jobs);
    PotentialCurve curve;
    curve.T = T;
    curve.kind = force ? "force" : "free_energy";
    curve.entries.reserve(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        if (i > 0 && !(distances[i] > distances[i - 1]))
            throw std::domain_error(
                "potential_curve: distances must be strictly increasing");
        if (!std::isfinite(values[i]))
            throw std::runtime_error("potential_curve: non-finite value at L=" +
                                     std::to_string(distances[i]));
        curve.entries.push_back({distances[i], values[i]});
    }
    return curve;
}

}  // namespace polder
