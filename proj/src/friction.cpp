#include "polder/friction.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polder/atom_state.hpp"
#include "polder/constants.hpp"
#include "polder/numerics.hpp"

namespace polder {

namespace {

using C = std::complex<double>;

double im_alpha(const Polarizability& p, double omega) {
    return alpha_real_axis(p, omega).imag();
}

// -dN/dw = (hbar/k_B T) / (4 sinh^2(hbar w / 2 k_B T)).
double minus_dN_domega(double omega, double T) {
    const double x = 0.5 * constants.hbar * omega / (constants.k_B * T);
    if (x > 350.0) return 0.0;
    const double sh = std::sinh(x);
    return constants.hbar / (constants.k_B * T) / (4.0 * sh * sh);
}

// Split points for thermal omega-integrals: absorption peaks plus the
// thermal scale.
std::vector<double> thermal_splits(const Polarizability& p, double w_thermal,
                                   double hi) {
    std::vector<double> marks{0.0, hi};
    for (double m : {0.25 * w_thermal, w_thermal, 4.0 * w_thermal})
        if (m < hi) marks.push_back(m);
    for (const auto& peak : absorption_resonances(p)) {
        const double h = std::max(50.0 * peak.width, 1e-6 * peak.omega);
        for (double m : {peak.omega - h, peak.omega - peak.width, peak.omega,
                         peak.omega + peak.width, peak.omega + h})
            if (m > 0.0 && m < hi) marks.push_back(m);
    }
    return marks;
}

double omega_cutoff(const Polarizability& p, double T) {
    double hi = 50.0 * constants.k_B * T / constants.hbar;
    for (const auto& peak : absorption_resonances(p))
        hi = std::max(hi, 10.0 * peak.omega);
    return hi;
}

}  // namespace

FrictionResult blackbody_friction(const Polarizability& p, double T, double v,
                                  const QuadratureOptions& opt) {
    FrictionResult out{0.0, "blackbody", false, true};
    if (!(T > 0.0)) return out;  // Lorentz-invariant vacuum: exact zero
    if (v == 0.0) return out;
    const double hi = omega_cutoff(p, T);
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double x = 0.5 * constants.hbar * w / (constants.k_B * T);
        if (x > 350.0) return 0.0;
        const double sh = std::sinh(x);
        return w * w * w * w * w * im_alpha(p, w) / (sh * sh);
    };
    const double integral =
        integrate_panels(f, thermal_splits(p, constants.k_B * T / constants.hbar, hi),
                         opt.rel_tol, opt.abs_tol, opt.max_intervals)
            .value;
    const double c5 = std::pow(constants.c, 5);
    out.force = -v * (constants.hbar * constants.hbar / (constants.k_B * T)) /
                (12.0 * pi * pi * constants.eps0 * c5) * integral;
    return out;
}

FrictionResult dedkov_kyasov(const Polarizability& p, double T_F, double T_A,
                             double v, const QuadratureOptions& opt) {
    if (!(v >= 0.0) || v >= constants.c)
        throw std::domain_error("dedkov_kyasov: need 0 <= v < c");
    FrictionResult out{0.0, "dedkov-kyasov", true, false};
    if (v == 0.0 && T_A == T_F) return out;
    const double beta = v / constants.c;
    const double gamma_v = 1.0 / std::sqrt(1.0 - beta * beta);

    auto occ = [](double w, double T) {
        if (!(T > 0.0)) return 0.0;
        const double x = constants.hbar * w / (constants.k_B * T);
        if (x > 700.0) return 0.0;
        return 1.0 / std::expm1(x);
    };

    auto inner = [&](double w) {
        auto g = [&](double u) {
            const double wp = gamma_v * w * (1.0 + beta * u);
            return u * wp * wp * im_alpha(p, wp) *
                   (occ(w, T_F) - occ(wp, T_A));
        };
        return integrate_finite(g, -1.0, 1.0, std::max(opt.rel_tol, 1e-9),
                                1e-320)
            .value;
    };

    const double T_hi = std::max(T_F, T_A);
    const double hi = omega_cutoff(p, T_hi > 0.0 ? T_hi : 300.0);
    auto f = [&](double w) { return w > 0.0 ? w * w * inner(w) : 0.0; };
    const double w_th = T_hi > 0.0 ? constants.k_B * T_hi / constants.hbar
                                   : 0.1 * hi;
    const double integral =
        integrate_panels(f, thermal_splits(p, w_th, hi),
                         std::max(opt.rel_tol, 1e-7), opt.abs_tol,
                         opt.max_intervals)
            .value;
    const double c4 = std::pow(constants.c, 4);
    out.force = -(constants.hbar / (4.0 * pi * constants.eps0 * gamma_v)) *
                (2.0 / pi) * integral / c4;
    return out;
}

FrictionResult hot_field_force(const Polarizability& p, double T_F, double v,
                               const QuadratureOptions& opt) {
    FrictionResult out{0.0, "hot-field", false, true};
    if (!(T_F > 0.0) || v == 0.0) return out;
    const double hi = omega_cutoff(p, T_F);
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double n = occupation(w, T_F);
        const double dn = -minus_dN_domega(w, T_F);
        const double d_w3N = 3.0 * w * w * n + w * w * w * dn;
        return w * w * im_alpha(p, w) * d_w3N;
    };
    const double integral =
        integrate_panels(f,
                         thermal_splits(p, constants.k_B * T_F / constants.hbar, hi),
                         opt.rel_tol, opt.abs_tol, opt.max_intervals)
            .value;
    const double c5 = std::pow(constants.c, 5);
    out.force =
        v * constants.hbar / (3.0 * pi * pi * constants.eps0 * c5) * integral;
    return out;
}

namespace {

// Im of the mixed-gradient trace kernel Im[d_x d_x' tr G](L, w). In the
// kappa variable the integrand is regular:
//   (1/8 pi eps0) int dkappa (k^2/2) [(w^2/c^2) r_te + (k^2+kappa^2) r_tm] e^{-2 kappa L}
// with the propagating leg kappa = -i q.
double gradient_kernel_im(const HalfSpaceGeometry& geom, double L, double w,
                          bool nonretarded, const QuadratureOptions& opt) {
    const double k0 = w / constants.c;
    C eps = permittivity_real_axis(geom.material, w);
    const double floor = 1e-6 * std::max(1.0, std::abs(eps.real()));
    if (eps.imag() < floor) eps = C(eps.real(), floor);

    if (nonretarded) {
        // Quasi-static kernel: r_tm -> (eps-1)/(eps+1), kappa = k.
        const C rp = (eps - 1.0) / (eps + 1.0);
        // int k^4 e^{-2kL} dk = 24/(2L)^5 = 3/(4 L^5)
        return (1.0 / (8.0 * pi * constants.eps0)) * rp.imag() * 0.75 /
               std::pow(L, 5);
    }

    auto refl = [&](C kappa) {
        const C k2 = kappa * kappa + k0 * k0;
        C kappa_m = std::sqrt(k2 - eps * k0 * k0);
        if (kappa_m.imag() > 0.0) kappa_m = -kappa_m;
        const C r_te = (kappa - kappa_m) / (kappa + kappa_m);
        const C r_tm = (eps * kappa - kappa_m) / (eps * kappa + kappa_m);
        return std::pair<C, C>(r_te, r_tm);
    };
    auto integrand = [&](C kappa) {
        const C k2 = kappa * kappa + k0 * k0;
        auto [r_te, r_tm] = refl(kappa);
        return 0.5 * k2 *
               (k0 * k0 * r_te + (k2 + kappa * kappa) * r_tm);
    };

    // Evanescent leg.
    auto fe = [&](double kap) {
        return integrand(C(kap, 0.0)) * std::exp(-2.0 * kap * L);
    };
    C total = integrate_semiinfinite(fe, 0.5 / L, opt.rel_tol, opt.abs_tol,
                                     opt.max_intervals)
                  .value;
    // Propagating leg i int_0^k0 dq F(-iq) e^{2iqL}.
    auto fp = [&](double q) {
        return C(0.0, 1.0) * integrand(C(0.0, -q)) *
               std::exp(C(0.0, 2.0 * q * L));
    };
    const int panels =
        std::max(4, (int)std::ceil(8.0 * k0 * L / pi));
    std::vector<double> breaks(panels + 1);
    for (int i = 0; i <= panels; ++i) breaks[i] = k0 * i / panels;
    total += integrate_panels(fp, breaks, opt.rel_tol, opt.abs_tol,
                              std::max(opt.max_intervals, 4 * panels))
                 .value;
    return total.imag() / (8.0 * pi * constants.eps0);
}

}  // namespace

FrictionResult surface_friction(const Polarizability& p,
                                const HalfSpaceGeometry& geom, double L,
                                double T, double v_parallel,
                                bool nonretarded_kernel, bool use_dressed,
                                const QuadratureOptions& opt) {
    if (!(L > 0.0)) throw std::domain_error("surface_friction: L > 0");
    FrictionResult out{0.0, nonretarded_kernel ? "surface (non-retarded)"
                                               : "surface"};
    out.small_v_expansion = true;
    if (!(T > 0.0) || v_parallel == 0.0) return out;  // thermal weight gone

    const double hi = omega_cutoff(p, T);
    QuadratureOptions inner = opt;
    inner.rel_tol = std::max(opt.rel_tol, 1e-6);
    auto f = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double dn = minus_dN_domega(w, T);
        if (dn == 0.0) return 0.0;
        double ia;
        if (use_dressed) {
            const GreenDiagonal g = green_electric_real_axis(geom, L, w, inner);
            const C av = alpha_real_axis(p, w);
            const auto dressed = alpha_dressed(av, g.g_xx, g.g_zz);
            ia = (2.0 * dressed.xx.imag() + dressed.zz.imag()) / 3.0;
        } else {
            ia = im_alpha(p, w);
        }
        if (ia == 0.0) return 0.0;
        return dn * ia * gradient_kernel_im(geom, L, w, nonretarded_kernel,
                                            inner);
    };
    const double integral =
        integrate_panels(f,
                         thermal_splits(p, constants.k_B * T / constants.hbar, hi),
                         std::max(opt.rel_tol, 1e-6), opt.abs_tol,
                         opt.max_intervals)
            .value;
    out.force = -(constants.hbar / (2.0 * pi * pi)) * v_parallel * integral;
    return out;
}

FrictionResult scheel_buhmann_nonretarded(const AtomLines& atom,
                                          const HalfSpaceGeometry& geom,
                                          double L, double v) {
    if (!(L > 0.0)) throw std::domain_error("scheel_buhmann: L > 0");
    const auto* drude = std::get_if<DrudeModel>(&geom.material);
    if (!drude)
        throw std::invalid_argument(
            "scheel_buhmann: surface plasmon frequency needs a Drude "
            "substrate");
    const double omega_s = drude->omega_p / std::sqrt(2.0);
    double sum = 0.0;
    for (const auto& line : atom.lines) {
        if (line.omega_ba <= 0.0) continue;  // only upward transitions
        if (!(line.width > 0.0))
            throw std::domain_error(
                "scheel_buhmann: lines need radiative widths");
        const double den = std::pow(line.omega_ba + omega_s, 3);
        sum += line.d_sq * omega_s * line.width / den;
    }
    FrictionResult out{0.0, "scheel-buhmann (non-retarded)"};
    out.small_v_expansion = true;
    out.force = -v / (16.0 * pi * constants.eps0 * std::pow(L, 5)) * sum;
    return out;
}

FrictionResult harris_schaich_scale(double alpha0, double L, double omega_s,
                                    double v) {
    if (!(L > 0.0) || !(omega_s > 0.0))
        throw std::domain_error("harris_schaich: L, omega_s > 0");
    const double a = alpha0 * constants.c /
                     (4.0 * pi * constants.eps0 * omega_s);
    FrictionResult out{0.0, "harris-schaich (order of magnitude)"};
    out.small_v_expansion = true;
    out.force = -v * constants.hbar * constants.fine_structure *
                constants.fine_structure / std::pow(L, 10) * a * a;
    return out;
}

}  // namespace polder
