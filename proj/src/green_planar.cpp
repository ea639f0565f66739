#include "polder/green_planar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polder/constants.hpp"

namespace polder {

namespace {

using C = std::complex<double>;

C branch_sqrt(C z) {
    C w = std::sqrt(z);  // principal: Re >= 0
    if (w.imag() > 0.0) w = -w;
    return w;
}

// Small damping floor regularizing surface-mode poles of r_tm on the real
// axis (undamped models put them on the integration path). Surface modes
// require Re eps < 0; media with positive Re eps keep their exact loss so
// the radiative (propagating) sector stays physical at low frequency.
C floored_eps(const DielectricModel& material, double omega) {
    C eps = permittivity_real_axis(material, omega);
    const double floor = 1e-6 * std::max(1.0, std::abs(eps.real()));
    if (eps.real() < 0.0 && eps.imag() < floor) eps = C(eps.real(), floor);
    return eps;
}

struct Kernel {
    C eps;       // permittivity at the evaluation frequency
    double w_c;  // omega/c (real axis) or xi/c (imaginary axis)
    FrequencyAxis axis;
    bool swap_polarizations;  // magnetic flavor: r_te <-> r_tm

    // kappa = -i q on the propagating contour leg, real on the others.
    std::pair<C, C> reflections(C kappa) const {
        const C k2 = axis == FrequencyAxis::real_omega
                         ? kappa * kappa + w_c * w_c
                         : kappa * kappa - w_c * w_c;  // k^2 (in-plane)
        const C kappa_m = axis == FrequencyAxis::real_omega
                              ? branch_sqrt(k2 - eps * w_c * w_c)
                              : branch_sqrt(k2 + eps * w_c * w_c);
        C r_te = (kappa - kappa_m) / (kappa + kappa_m);
        C r_tm = (eps * kappa - kappa_m) / (eps * kappa + kappa_m);
        if (swap_polarizations) std::swap(r_te, r_tm);
        return {r_te, r_tm};
    }

    // Integrand of g_xx in the kappa variable: kappa^2 r_tm + (w^2/c^2) r_te
    // with w^2 -> -xi^2 on the imaginary axis.
    C f_xx(C kappa) const {
        auto [r_te, r_tm] = reflections(kappa);
        const double sign = axis == FrequencyAxis::real_omega ? 1.0 : -1.0;
        return kappa * kappa * r_tm + sign * w_c * w_c * r_te;
    }

    // Integrand of g_zz: 2 k^2 r_tm.
    C f_zz(C kappa) const {
        auto [r_te, r_tm] = reflections(kappa);
        const C k2 = axis == FrequencyAxis::real_omega
                         ? kappa * kappa + w_c * w_c
                         : kappa * kappa - w_c * w_c;
        return 2.0 * k2 * r_tm;
    }
};

// Evanescent leg: int_{kappa0}^inf dkappa F(kappa) e^{-2 kappa L} with
// kappa0 = 0 (real axis) or xi/c (imaginary axis).
template <class F>
C evanescent_leg(F&& f, double kappa0, double L,
                 const QuadratureOptions& opt) {
    auto g = [&](double s) -> C {
        const double kappa = kappa0 + s;
        return f(C(kappa, 0.0)) * std::exp(-2.0 * kappa * L);
    };
    return integrate_semiinfinite(g, 0.5 / L, opt.rel_tol, opt.abs_tol,
                                  opt.max_intervals)
        .value;
}

// Propagating leg (real axis only): i int_0^{w/c} dq F(-i q) e^{2 i q L},
// seeded with >= 8 panels per oscillation period.
template <class F>
C propagating_leg(F&& f, double k0, double L, const QuadratureOptions& opt) {
    auto g = [&](double q) -> C {
        return C(0.0, 1.0) * f(C(0.0, -q)) *
               std::exp(C(0.0, 2.0 * q * L));
    };
    const double period = pi / L;  // phase 2qL advances by 2 pi
    int panels = (int)std::ceil(8.0 * k0 / period);
    panels = std::max(panels, 4);
    panels = std::min(panels, 100000);
    std::vector<double> breaks(panels + 1);
    for (int i = 0; i <= panels; ++i) breaks[i] = k0 * i / panels;
    return integrate_panels(g, breaks, opt.rel_tol, opt.abs_tol,
                            std::max(opt.max_intervals, 4 * panels))
        .value;
}

GreenDiagonal green_electric_core(const HalfSpaceGeometry& geom, double L,
                                  double freq, FrequencyAxis axis,
                                  bool swap_pol, const QuadratureOptions& opt) {
    if (!(L > 0.0)) throw std::domain_error("green tensor: L must be > 0");
    if (!(freq >= 0.0))
        throw std::domain_error("green tensor: frequency must be >= 0");

    GreenDiagonal out;
    out.flavor = GreenFlavor::electric;
    out.axis = axis;
    out.L = L;
    out.freq = freq;

    if (std::holds_alternative<VacuumModel>(geom.material)) {
        out.g_xx = out.g_zz = 0.0;
        return out;
    }

    const double pref = 1.0 / (8.0 * pi * constants.eps0);

    if (axis == FrequencyAxis::imaginary_xi && freq == 0.0) {
        // Static limit: kappa = k, r_te = 0, r_tm constant in k.
        double r0 = static_rtm(geom.material);
        if (swap_pol) r0 = 0.0;  // static r_te vanishes
        out.g_xx = pref * r0 / (4.0 * L * L * L);
        out.g_zz = 2.0 * out.g_xx;
        return out;
    }

    Kernel ker;
    ker.axis = axis;
    ker.w_c = freq / constants.c;
    ker.swap_polarizations = swap_pol;
    ker.eps = axis == FrequencyAxis::real_omega
                  ? floored_eps(geom.material, freq)
                  : C(permittivity_imag_axis(geom.material, freq), 0.0);

    auto fxx = [&](C kappa) { return ker.f_xx(kappa); };
    auto fzz = [&](C kappa) { return ker.f_zz(kappa); };

    if (axis == FrequencyAxis::imaginary_xi) {
        const double kappa0 = ker.w_c;
        out.g_xx = pref * evanescent_leg(fxx, kappa0, L, opt);
        out.g_zz = pref * evanescent_leg(fzz, kappa0, L, opt);
    } else {
        const double k0 = ker.w_c;
        out.g_xx = pref * (propagating_leg(fxx, k0, L, opt) +
                           evanescent_leg(fxx, 0.0, L, opt));
        out.g_zz = pref * (propagating_leg(fzz, k0, L, opt) +
                           evanescent_leg(fzz, 0.0, L, opt));
    }
    return out;
}

}  // namespace

KappaPair kappa_pair(const DielectricModel& material, double freq,
                     FrequencyAxis axis, double k) {
    if (!(k >= 0.0)) throw std::domain_error("kappa_pair: k must be >= 0");
    const double w_c = freq / constants.c;
    if (axis == FrequencyAxis::imaginary_xi) {
        const double eps = permittivity_imag_axis(material, freq);
        const double kap = std::sqrt(k * k + w_c * w_c);
        const double kap_m = std::isinf(eps)
                                 ? std::numeric_limits<double>::infinity()
                                 : std::sqrt(k * k + eps * w_c * w_c);
        return {C(kap, 0.0), C(kap_m, 0.0)};
    }
    const C eps = permittivity_real_axis(material, freq);
    return {branch_sqrt(C(k * k - w_c * w_c, 0.0)),
            branch_sqrt(C(k * k, 0.0) - eps * w_c * w_c)};
}

FresnelCoefficients fresnel(const DielectricModel& material, double freq,
                            FrequencyAxis axis, double k) {
    const auto [kappa, kappa_m] = kappa_pair(material, freq, axis, k);
    if (std::isinf(kappa_m.real())) {
        // Drude xi = 0 marker: static reflection limits r_tm = 1, r_te = 0.
        return {C(0.0, 0.0), C(1.0, 0.0)};
    }
    const C eps = axis == FrequencyAxis::real_omega
                      ? permittivity_real_axis(material, freq)
                      : C(permittivity_imag_axis(material, freq), 0.0);
    return {(kappa - kappa_m) / (kappa + kappa_m),
            (eps * kappa - kappa_m) / (eps * kappa + kappa_m)};
}

double static_rtm(const DielectricModel& material) {
    const double eps0s = static_permittivity(material);
    if (std::isinf(eps0s)) return 1.0;  // Drude
    return (eps0s - 1.0) / (eps0s + 1.0);
}

GreenDiagonal green_electric_imag_axis(const HalfSpaceGeometry& geom, double L,
                                       double xi,
                                       const QuadratureOptions& opt) {
    return green_electric_core(geom, L, xi, FrequencyAxis::imaginary_xi, false,
                               opt);
}

GreenDiagonal green_electric_real_axis(const HalfSpaceGeometry& geom, double L,
                                       double omega,
                                       const QuadratureOptions& opt) {
    if (!(omega > 0.0))
        throw std::domain_error("green_electric_real_axis: omega must be > 0");
    return green_electric_core(geom, L, omega, FrequencyAxis::real_omega,
                               false, opt);
}

GreenDiagonal green_magnetic(const HalfSpaceGeometry& geom, double L,
                             double freq, FrequencyAxis axis,
                             const QuadratureOptions& opt) {
    // eps0 G(r_te <-> r_tm) = H / mu0, evaluated on the same quadrature path.
    GreenDiagonal h = green_electric_core(geom, L, freq, axis, true, opt);
    const double mu0_eps0 = 1.0 / (constants.c * constants.c);
    h.g_xx *= mu0_eps0;
    h.g_zz *= mu0_eps0;
    h.flavor = GreenFlavor::magnetic;
    return h;
}

GreenDiagonal green_dispatch(const HalfSpaceGeometry& geom, GreenFlavor flavor,
                             double L, double freq, FrequencyAxis axis,
                             const QuadratureOptions& opt) {
    if (flavor == GreenFlavor::magnetic)
        return green_magnetic(geom, L, freq, axis, opt);
    return axis == FrequencyAxis::imaginary_xi
               ? green_electric_imag_axis(geom, L, freq, opt)
               : green_electric_real_axis(geom, L, freq, opt);
}

DistanceRegime classify_regime(const HalfSpaceGeometry& geom, double L,
                               double omega) {
    if (!(L > 0.0) || !(omega > 0.0))
        throw std::domain_error("classify_regime: L, omega must be > 0");
    const double lambda = 2.0 * pi * constants.c / omega;
    const double delta = skin_depth(geom.material, omega);
    constexpr double guard = 3.0;
    if (std::isfinite(delta) && L < delta / guard &&
        delta <= lambda / guard)
        return DistanceRegime::sub_skin;
    if (L > guard * lambda) return DistanceRegime::retarded;
    const double lower = std::isfinite(delta) && delta <= lambda / guard
                             ? guard * delta
                             : 0.0;
    if (L > lower && L < lambda / guard) return DistanceRegime::non_retarded;
    return DistanceRegime::crossover;
}

GreenDiagonal green_asymptotic(const HalfSpaceGeometry& geom, double L,
                               double omega, DistanceRegime row,
                               GreenFlavor flavor) {
    if (!(L > 0.0) || !(omega > 0.0))
        throw std::domain_error("green_asymptotic: L, omega must be > 0");
    if (row == DistanceRegime::crossover)
        throw std::invalid_argument("green_asymptotic: no crossover row");
    if (row == DistanceRegime::sub_skin && flavor == GreenFlavor::electric)
        throw std::invalid_argument(
            "green_asymptotic: the electric sub-skin-depth cell has no "
            "closed form; use the full integral");

    GreenDiagonal out;
    out.flavor = flavor;
    out.axis = FrequencyAxis::real_omega;
    out.L = L;
    out.freq = omega;
    out.regime_warning = classify_regime(geom, L, omega) != row;

    const C eps = permittivity_real_axis(geom.material, omega);
    const double kL = omega * L / constants.c;  // = 2 pi L / lambda
    // Retarded envelopes consistent with the defining k-integral: the xx
    // component carries (1 - 2ikL - 4 k^2 L^2) e^{2ikL}, the zz component
    // (1 - 2ikL) e^{2ikL} (no far-field term on the dipole axis).
    const C phase = std::exp(C(0.0, 2.0 * kL));
    const C env_xx = (C(1.0, 0.0) - C(0.0, 2.0 * kL) - 4.0 * kL * kL) * phase;
    const C env_zz = (C(1.0, 0.0) - C(0.0, 2.0 * kL)) * phase;

    if (flavor == GreenFlavor::electric) {
        const C quasi = (1.0 - 2.0 / eps) /
                        (32.0 * pi * constants.eps0 * L * L * L);
        if (row == DistanceRegime::non_retarded) {
            out.g_xx = quasi;
            out.g_zz = 2.0 * quasi;
        } else {
            out.g_xx = quasi * env_xx;
            out.g_zz = 2.0 * quasi * env_zz;
        }
        return out;
    }

    if (row == DistanceRegime::sub_skin) {
        const double delta = skin_depth(geom.material, omega);
        if (!std::isfinite(delta))
            throw std::invalid_argument(
                "green_asymptotic: sub-skin row needs a lossy material");
        const C hxx = C(0.0, 1.0) * constants.mu0 /
                      (32.0 * pi * delta * delta * L);
        out.g_xx = hxx;
        out.g_zz = 2.0 * hxx;
        return out;
    }
    const C quasi = -constants.mu0 / (32.0 * pi * L * L * L);
    if (row == DistanceRegime::non_retarded) {
        out.g_xx = quasi;
        out.g_zz = 2.0 * quasi;
    } else {
        out.g_xx = quasi * env_xx;
        out.g_zz = 2.0 * quasi * env_zz;
    }
    return out;
}

}  // namespace polder
