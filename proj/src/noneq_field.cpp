#include "polder/noneq_field.hpp"

#include <cmath>
#include <stdexcept>

#include "polder/atom_state.hpp"
#include "polder/constants.hpp"
#include "polder/numerics.hpp"

namespace polder {

namespace {

using C = std::complex<double>;

// Per-k ingredients of the S kernel. Upper-half-plane convention:
// k_z = sqrt(w^2/c^2 - k^2), k_zm = sqrt(eps w^2/c^2 - k^2), Im >= 0.
struct SKernel {
    C eps;
    double w;  // rad/s
    double k0;

    struct Parts {
        double weight;  // 1 / (2 Im k_zm |k_zm|^2), depth integral included
        double b_xx;    // polarization bracket for xx (phi-averaged)
        double b_zz;
        double re_kz;   // Re k_z (radiation-pressure phase factor)
        double im_kz;   // Im k_z (evanescent decay rate)
    };

    Parts at(double k) const {
        const double c = constants.c;
        const C kz = [&] {
            const double r = k0 * k0 - k * k;
            return r >= 0.0 ? C(std::sqrt(r), 0.0) : C(0.0, std::sqrt(-r));
        }();
        C kzm = std::sqrt(eps * k0 * k0 - k * k);
        if (kzm.imag() < 0.0) kzm = -kzm;
        const double im_kzm = kzm.imag();
        const double abs2_kzm = std::norm(kzm);
        const double abs2_kz = std::norm(kz);

        const C ts = 2.0 * kzm / (kzm + kz);
        const C tp = 2.0 * std::sqrt(eps) * kzm / (kzm + eps * kz);
        const double pm =
            (abs2_kzm + k * k) * c * c / (std::abs(eps) * w * w);

        Parts out;
        out.weight = 1.0 / (2.0 * im_kzm * abs2_kzm);
        out.b_xx = 0.5 * (std::norm(ts) +
                          std::norm(tp) * pm * abs2_kz * c * c / (w * w));
        out.b_zz = std::norm(tp) * pm * k * k * c * c / (w * w);
        out.re_kz = kz.real();
        out.im_kz = kz.imag();
        return out;
    }
};

SKernel make_kernel(const HalfSpaceGeometry& geom, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("s_tensor: omega must be > 0");
    if (is_lossless(geom.material))
        throw std::domain_error(
            "s_tensor: lossless substrate, depth integral diverges");
    SKernel ker;
    ker.eps = permittivity_real_axis(geom.material, omega);
    ker.w = omega;
    ker.k0 = omega / constants.c;
    return ker;
}

double prefactor(const SKernel& ker) {
    // Im eps / eps0 * (w/c)^4 / (8 pi)
    const double k0 = ker.k0;
    return ker.eps.imag() / constants.eps0 * k0 * k0 * k0 * k0 /
           (8.0 * pi);
}

}  // namespace

STensorDiag s_tensor(const HalfSpaceGeometry& geom, double L, double omega,
                     SSector sector, const QuadratureOptions& opt) {
    if (!(L > 0.0)) throw std::domain_error("s_tensor: L must be > 0");
    if (std::holds_alternative<VacuumModel>(geom.material))
        return {0.0, 0.0, L, omega, sector};
    const SKernel ker = make_kernel(geom, omega);
    const double pref = prefactor(ker);
    const double k0 = ker.k0;

    double s_xx = 0.0, s_zz = 0.0;
    if (sector != SSector::evanescent) {
        auto fxx = [&](double k) {
            const auto p = ker.at(k);
            return k * p.weight * p.b_xx;
        };
        auto fzz = [&](double k) {
            const auto p = ker.at(k);
            return k * p.weight * p.b_zz;
        };
        s_xx += integrate_finite(fxx, 0.0, k0, opt.rel_tol, opt.abs_tol).value;
        s_zz += integrate_finite(fzz, 0.0, k0, opt.rel_tol, opt.abs_tol).value;
    }
    if (sector != SSector::propagating) {
        // k = sqrt(k0^2 + kv^2), k dk = kv dkv, decay e^{-2 kv L}.
        auto gxx = [&](double kv) {
            const double k = std::hypot(k0, kv);
            const auto p = ker.at(k);
            return kv * p.weight * p.b_xx * std::exp(-2.0 * kv * L);
        };
        auto gzz = [&](double kv) {
            const double k = std::hypot(k0, kv);
            const auto p = ker.at(k);
            return kv * p.weight * p.b_zz * std::exp(-2.0 * kv * L);
        };
        s_xx += integrate_semiinfinite(gxx, 0.5 / L, opt.rel_tol, opt.abs_tol)
                    .value;
        s_zz += integrate_semiinfinite(gzz, 0.5 / L, opt.rel_tol, opt.abs_tol)
                    .value;
    }
    return {pref * s_xx, pref * s_zz, L, omega, sector};
}

namespace {

// Evanescent S trace 2 s_xx + s_zz in a single k-quadrature.
double evanescent_trace(const SKernel& ker, double L,
                        const QuadratureOptions& opt) {
    const double k0 = ker.k0;
    auto g = [&](double kv) {
        const double k = std::hypot(k0, kv);
        const auto p = ker.at(k);
        return kv * p.weight * (2.0 * p.b_xx + p.b_zz) *
               std::exp(-2.0 * kv * L);
    };
    return prefactor(ker) * integrate_semiinfinite(g, 0.5 / L, opt.rel_tol,
                                                   opt.abs_tol,
                                                   opt.max_intervals)
                                .value;
}

// Thermal omega-integral of the evanescent S trace:
// U = -alpha0 int_0^inf dw/pi hbar N(w, T_S) [2 s_xx + s_zz]_evan.
double potential_integral(double alpha0, const HalfSpaceGeometry& geom,
                          double L, double T_S, const QuadratureOptions& opt) {
    const double w_th = constants.k_B * T_S / constants.hbar;
    QuadratureOptions inner = opt;
    inner.rel_tol = std::max(opt.rel_tol, 1e-7);
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        return occupation(w, T_S) *
               evanescent_trace(make_kernel(geom, w), L, inner);
    };
    const auto r = integrate_semiinfinite(f, w_th, std::max(opt.rel_tol, 1e-6),
                                          opt.abs_tol, opt.max_intervals);
    return -alpha0 * (constants.hbar / pi) * r.value;
}

}  // namespace

double neq_dipole_potential(double alpha0, const HalfSpaceGeometry& geom,
                            double L, double T_S,
                            const QuadratureOptions& opt) {
    if (!(T_S >= 0.0)) throw std::domain_error("neq potential: T_S >= 0");
    if (T_S == 0.0 || alpha0 == 0.0) return 0.0;
    return potential_integral(alpha0, geom, L, T_S, opt);
}

double neq_dipole_force(double alpha0, const HalfSpaceGeometry& geom, double L,
                        double T_S, const QuadratureOptions& opt) {
    if (T_S == 0.0 || alpha0 == 0.0) return 0.0;
    return -derivative_rel_step(
        [&](double l) { return neq_dipole_potential(alpha0, geom, l, T_S, opt); },
        L, 1e-4);
}

double neq_force_total(double alpha0, const HalfSpaceGeometry& geom, double L,
                       const ThermalConditions& cond,
                       const QuadratureOptions& opt) {
    if (cond.T_A != 0.0)
        throw std::domain_error("neq_force_total: T_A must be 0");
    const Polarizability p = StaticPolarizability{alpha0};
    EquilibriumOptions eopt;
    eopt.quad = opt;
    const double f_eq = cond.T_E > 0.0
                            ? force_matsubara(p, geom, L, cond.T_E, eopt)
                            : force_zero_T(p, geom, L, eopt);
    const double f_hot = neq_dipole_force(alpha0, geom, L, cond.T_S, opt);
    const double f_env = neq_dipole_force(alpha0, geom, L, cond.T_E, opt);
    return f_hot + (f_eq - f_env);
}

double neq_asymptote(double alpha0, double eps_static, double L, double T_S,
                     double T_E) {
    if (std::isinf(eps_static))
        throw std::invalid_argument(
            "neq_asymptote: not valid for Drude substrates");
    if (!(eps_static > 1.0))
        throw std::domain_error("neq_asymptote: requires eps(0) > 1");
    if (!(L > 0.0)) throw std::domain_error("neq_asymptote: L > 0");
    const double kb2 = constants.k_B * constants.k_B;
    return -(pi / 12.0) * (alpha0 / (4.0 * pi * constants.eps0)) *
           (eps_static + 1.0) / std::sqrt(eps_static - 1.0) * kb2 *
           (T_S * T_S - T_E * T_E) /
           (constants.hbar * constants.c * L * L);
}

double radiation_pressure_spectrum(const Polarizability& p,
                                   const HalfSpaceGeometry& geom, double L,
                                   double omega, double T_S,
                                   const QuadratureOptions& opt) {
    const double im_alpha = alpha_real_axis(p, omega).imag();
    if (im_alpha == 0.0 || !(T_S > 0.0)) return 0.0;
    const SKernel ker = make_kernel(geom, omega);
    const double pref = prefactor(ker);
    // Im d_2 S_ii trace: the unconjugated coordinate contributes a factor
    // Re k_z, so only propagating waves push.
    auto f = [&](double k) {
        const auto parts = ker.at(k);
        return k * parts.weight * (2.0 * parts.b_xx + parts.b_zz) *
               parts.re_kz;
    };
    const double kernel =
        pref *
        integrate_finite(f, 0.0, ker.k0, opt.rel_tol, opt.abs_tol).value;
    (void)L;  // the propagating sector is independent of L
    return (2.0 / pi) * constants.hbar * occupation(omega, T_S) * im_alpha *
           kernel;
}

}  // namespace polder
