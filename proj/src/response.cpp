#include "polder/response.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polder/config.hpp"
#include "polder/constants.hpp"
#include "polder/numerics.hpp"

namespace polder {

namespace {

using C = std::complex<double>;

// One transition line on the real axis: (d^2/3hbar) 2 w_ba / (w_ba^2 - (w + i eta)^2).
C line_alpha_real(const TransitionLine& line, double omega, double eta_scale) {
    const double w = line.omega_ba;
    const double eta =
        line.width > 0.0 ? line.width : eta_scale * std::abs(w);
    const C om(omega, 0.5 * eta);  // (w + i eta/2)^2 ~ w^2 + i eta w
    return (line.d_sq / (3.0 * constants.hbar)) * 2.0 * w / (w * w - om * om);
}

double line_alpha_imag(const TransitionLine& line, double xi) {
    const double w = line.omega_ba;
    return (line.d_sq / (3.0 * constants.hbar)) * 2.0 * w / (w * w + xi * xi);
}

C cm_factor(C eps) {
    const C den = eps + 2.0;
    if (den == C(0.0, 0.0))
        throw std::domain_error(
            "nanosphere: epsilon = -2 plasmon pole (undamped)");
    return (eps - 1.0) / den;
}

}  // namespace

std::complex<double> alpha_real_axis(const Polarizability& p, double omega,
                                     double eta_scale) {
    if (const auto* a = std::get_if<AtomLines>(&p)) {
        if (a->lines.empty())
            throw std::domain_error("AtomLines: needs at least one line");
        C sum(0.0, 0.0);
        for (const auto& line : a->lines) {
            if (line.width <= 0.0 && eta_scale <= 0.0 &&
                omega == std::abs(line.omega_ba))
                throw std::domain_error(
                    "alpha_real_axis: undamped pole at omega = |omega_ba|");
            sum += line_alpha_real(line, omega, eta_scale);
        }
        return sum;
    }
    if (const auto* t = std::get_if<TwoLevel>(&p)) {
        TransitionLine line{t->d_sq, t->omega_0};
        return line_alpha_real(line, omega, eta_scale);
    }
    if (const auto* o = std::get_if<DampedOscillator>(&p))
        return oscillator_alpha_real_axis(*o, omega);
    if (const auto* ns = std::get_if<NanosphereElectric>(&p))
        return alpha_nanosphere_electric(ns->radius, ns->material, omega);
    if (const auto* nm = std::get_if<NanosphereMagnetic>(&p))
        return beta_nanosphere_magnetic(nm->radius, nm->material, omega);
    return C(std::get<StaticPolarizability>(p).alpha0, 0.0);
}

double alpha_imag_axis(const Polarizability& p, double xi) {
    if (!(xi >= 0.0)) throw std::domain_error("alpha_imag_axis: xi >= 0");
    if (const auto* a = std::get_if<AtomLines>(&p)) {
        if (a->lines.empty())
            throw std::domain_error("AtomLines: needs at least one line");
        double sum = 0.0;
        for (const auto& line : a->lines) sum += line_alpha_imag(line, xi);
        return sum;
    }
    if (const auto* t = std::get_if<TwoLevel>(&p)) {
        return (t->d_sq / (3.0 * constants.hbar)) * 2.0 * t->omega_0 /
               (t->omega_0 * t->omega_0 + xi * xi);
    }
    if (const auto* o = std::get_if<DampedOscillator>(&p))
        return oscillator_alpha_imag_axis(*o, xi);
    if (const auto* ns = std::get_if<NanosphereElectric>(&p))
        return alpha_nanosphere_electric_imag_axis(ns->radius, ns->material,
                                                   xi);
    if (const auto* nm = std::get_if<NanosphereMagnetic>(&p))
        return beta_nanosphere_magnetic_imag_axis(nm->radius, nm->material,
                                                  xi);
    return std::get<StaticPolarizability>(p).alpha0;
}

double alpha_static(const Polarizability& p) { return alpha_imag_axis(p, 0.0); }

std::array<double, 3> alpha_imag_axis_diagonal(const Polarizability& p,
                                               double xi) {
    if (const auto* a = std::get_if<AtomLines>(&p); a && !a->isotropic) {
        std::array<double, 3> out{0.0, 0.0, 0.0};
        for (const auto& line : a->lines) {
            // line_alpha_imag carries the isotropic 1/3; per-axis weights
            // redistribute it.
            const double iso = line_alpha_imag(line, xi);
            for (int i = 0; i < 3; ++i)
                out[i] += 3.0 * line.axis_weights[i] * iso;
        }
        return out;
    }
    const double iso = alpha_imag_axis(p, xi);
    return {iso, iso, iso};
}

double alpha_thermal_imag_axis(const ThermalAtom& atom, double T, double xi) {
    if (atom.states.empty())
        throw std::domain_error("alpha_thermal: empty state set");
    if (!(T > 0.0)) throw std::domain_error("alpha_thermal: T must be > 0");
    double e_min = atom.states.front().energy;
    for (const auto& s : atom.states) e_min = std::min(e_min, s.energy);
    double z = 0.0, acc = 0.0;
    for (const auto& s : atom.states) {
        const double w = std::exp(-(s.energy - e_min) / (constants.k_B * T));
        z += w;
        acc += w * alpha_imag_axis(Polarizability(s.lines), xi);
    }
    return acc / z;
}

std::complex<double> alpha_thermal_real_axis(const ThermalAtom& atom, double T,
                                             double omega, double eta_scale) {
    if (atom.states.empty())
        throw std::domain_error("alpha_thermal: empty state set");
    if (!(T > 0.0)) throw std::domain_error("alpha_thermal: T must be > 0");
    double e_min = atom.states.front().energy;
    for (const auto& s : atom.states) e_min = std::min(e_min, s.energy);
    double z = 0.0;
    C acc(0.0, 0.0);
    for (const auto& s : atom.states) {
        const double w = std::exp(-(s.energy - e_min) / (constants.k_B * T));
        z += w;
        acc += w * alpha_real_axis(Polarizability(s.lines), omega, eta_scale);
    }
    return acc / z;
}

std::complex<double> alpha_nanosphere_electric(double radius,
                                               const DielectricModel& material,
                                               double omega) {
    if (!(radius > 0.0))
        throw std::domain_error("nanosphere: radius must be > 0");
    const C eps = permittivity_real_axis(material, omega);
    return 4.0 * pi * constants.eps0 * radius * radius * radius *
           cm_factor(eps);
}

double alpha_nanosphere_electric_imag_axis(double radius,
                                           const DielectricModel& material,
                                           double xi) {
    if (!(radius > 0.0))
        throw std::domain_error("nanosphere: radius must be > 0");
    const double eps = permittivity_imag_axis(material, xi);
    const double cm = std::isinf(eps) ? 1.0 : (eps - 1.0) / (eps + 2.0);
    return 4.0 * pi * constants.eps0 * radius * radius * radius * cm;
}

std::complex<double> beta_nanosphere_magnetic(double radius,
                                              const DielectricModel& material,
                                              double omega) {
    if (!(radius > 0.0))
        throw std::domain_error("nanosphere: radius must be > 0");
    const C eps = permittivity_real_axis(material, omega);
    const double ratio = radius * omega / constants.c;
    return (2.0 * pi / (15.0 * constants.mu0)) * ratio * ratio * (eps - 1.0) *
           radius * radius * radius;
}

double beta_nanosphere_magnetic_imag_axis(double radius,
                                          const DielectricModel& material,
                                          double xi) {
    if (!(radius > 0.0))
        throw std::domain_error("nanosphere: radius must be > 0");
    if (xi == 0.0) return 0.0;
    const double eps = permittivity_imag_axis(material, xi);
    if (std::isinf(eps)) {
        // Drude: (eps(i xi) - 1) xi^2 -> omega_p^2 at xi -> 0, but the xi = 0
        // value itself is the (finite) limit 0 handled above; never reached.
        throw std::domain_error("beta_nanosphere: diverging permittivity");
    }
    const double ratio = radius * xi / constants.c;
    // (R omega / c)^2 -> -(R xi / c)^2 under omega -> i xi.
    return -(2.0 * pi / (15.0 * constants.mu0)) * ratio * ratio * (eps - 1.0) *
           radius * radius * radius;
}

std::complex<double> oscillator_alpha_real_axis(const DampedOscillator& osc,
                                                double omega) {
    const double q2m = osc.q * osc.q / osc.mass;
    return q2m / C(osc.omega_0 * osc.omega_0 - omega * omega,
                   -osc.gamma * omega);
}

double oscillator_alpha_imag_axis(const DampedOscillator& osc, double xi) {
    const double q2m = osc.q * osc.q / osc.mass;
    return q2m / (osc.omega_0 * osc.omega_0 + xi * xi + osc.gamma * xi);
}

double response_frequency_scale(const Polarizability& p) {
    if (const auto* a = std::get_if<AtomLines>(&p)) {
        double w = 0.0;
        for (const auto& line : a->lines)
            w = std::max(w, std::abs(line.omega_ba));
        return w > 0.0 ? w : 1e15;
    }
    if (const auto* t = std::get_if<TwoLevel>(&p)) return t->omega_0;
    if (const auto* o = std::get_if<DampedOscillator>(&p)) return o->omega_0;
    if (const auto* ns = std::get_if<NanosphereElectric>(&p)) {
        if (const auto* d = std::get_if<DrudeModel>(&ns->material))
            return d->omega_p;
        return 1e16;
    }
    if (const auto* nm = std::get_if<NanosphereMagnetic>(&p)) {
        if (const auto* d = std::get_if<DrudeModel>(&nm->material))
            return d->omega_p;
        return 1e16;
    }
    return 0.0;  // static: no intrinsic scale
}

std::vector<ResonancePeak> absorption_resonances(const Polarizability& p) {
    std::vector<ResonancePeak> peaks;
    if (const auto* a = std::get_if<AtomLines>(&p)) {
        for (const auto& line : a->lines) {
            const double w = std::abs(line.omega_ba);
            peaks.push_back(
                {w, line.width > 0.0 ? line.width : 1e-6 * w});
        }
    } else if (const auto* t = std::get_if<TwoLevel>(&p)) {
        peaks.push_back({t->omega_0, 1e-6 * t->omega_0});
    } else if (const auto* o = std::get_if<DampedOscillator>(&p)) {
        peaks.push_back({o->omega_0, o->gamma});
    } else if (const auto* ns = std::get_if<NanosphereElectric>(&p)) {
        if (const auto* d = std::get_if<DrudeModel>(&ns->material))
            peaks.push_back({d->omega_p / std::sqrt(3.0), d->gamma});
    } else if (const auto* nm = std::get_if<NanosphereMagnetic>(&p)) {
        if (const auto* d = std::get_if<DrudeModel>(&nm->material))
            peaks.push_back({d->omega_p / std::sqrt(3.0), d->gamma});
    }
    return peaks;
}

namespace {

// Quadrature split points bracketing each Im alpha peak inside (lo, hi).
std::vector<double> resonance_splits(const Polarizability& p, double lo,
                                     double hi) {
    std::vector<double> marks;
    for (const auto& peak : absorption_resonances(p)) {
        const double w = peak.omega;
        if (w <= lo || w >= hi) continue;
        const double h = std::max(peak.width * 50.0, 1e-6 * w);
        for (double m : {w - h, w - peak.width, w, w + peak.width, w + h})
            if (m > lo && m < hi) marks.push_back(m);
    }
    return marks;
}

}  // namespace

OscillatorStrengths oscillator_strength_integrals(const Polarizability& p,
                                                  double cutoff) {
    if (!(cutoff > 0.0))
        throw std::domain_error(
            "oscillator_strength_integrals: cutoff must be > 0");
    OscillatorStrengths out{0.0, 0.0};

    const bool is_sphere = std::holds_alternative<NanosphereElectric>(p) ||
                           std::holds_alternative<NanosphereMagnetic>(p);
    double radius = 0.0;
    const DielectricModel* material = nullptr;
    if (const auto* ns = std::get_if<NanosphereElectric>(&p)) {
        radius = ns->radius;
        material = &ns->material;
    } else if (const auto* nm = std::get_if<NanosphereMagnetic>(&p)) {
        radius = nm->radius;
        material = &nm->material;
    }

    // Electric integral over [0, inf); the upper window is finite in
    // practice (Im alpha decays at least like 1/omega^3).
    Polarizability electric = p;
    if (is_sphere) electric = NanosphereElectric{radius, *material};
    const double w_hi = 50.0 * std::max(response_frequency_scale(electric),
                                        cutoff / 50.0);
    std::vector<double> breaks = resonance_splits(electric, 0.0, w_hi);
    breaks.push_back(1e-3 * w_hi);
    breaks.push_back(0.0);
    breaks.push_back(w_hi);
    auto f_el = [&](double w) {
        return w > 0.0 ? alpha_real_axis(electric, w).imag() : 0.0;
    };
    out.electric = integrate_panels(f_el, breaks, 1e-7).value;

    if (is_sphere) {
        auto f_mag = [&](double w) {
            return w > 0.0
                       ? beta_nanosphere_magnetic(radius, *material, w).imag()
                       : 0.0;
        };
        std::vector<double> mb = resonance_splits(electric, 0.0, cutoff);
        mb.push_back(0.0);
        mb.push_back(cutoff);
        out.magnetic = integrate_panels(f_mag, mb, 1e-7).value;
    }
    return out;
}

DressedPolarizability alpha_dressed(std::complex<double> alpha_v,
                                    std::complex<double> g_xx,
                                    std::complex<double> g_zz) {
    const C dxx = 1.0 - alpha_v * g_xx;
    const C dzz = 1.0 - alpha_v * g_zz;
    if (std::abs(dxx) == 0.0 || std::abs(dzz) == 0.0)
        throw std::domain_error(
            "alpha_dressed: vanishing denominator (surface-shifted mode)");
    return {alpha_v / dxx, alpha_v / dzz};
}

namespace {

const char* kRb87 =
    "# Rb87 ground state: single dominant line at 780 nm with\n"
    "# alpha(0)/(4 pi eps0) = 47.3e-30 m^3 (standard literature value).\n"
    "type=atom\n"
    "label=rb87\n"
    "line=2.01045e-57,2.414937e15\n";

}  // namespace

std::string particle_preset_text(const std::string& name) {
    if (name == "rb87") return kRb87;
    throw std::invalid_argument("unknown particle preset: " + name);
}

bool is_particle_preset(const std::string& name) { return name == "rb87"; }

ParticleSpec particle_preset(const std::string& name) {
    return parse_particle(particle_preset_text(name));
}

ParticleSpec parse_particle(const std::string& text) {
    ParticleSpec spec;
    std::string type;
    AtomLines atom;
    ThermalAtom thermal;
    double radius = 0.0;
    double alpha0 = 0.0;
    DielectricModel material = VacuumModel{};
    bool have_material = false;
    bool in_state = false;

    for (const auto& [key, value] : parse_key_values(text)) {
        if (key == "type") {
            type = value;
        } else if (key == "label") {
            spec.label = value;
        } else if (key == "state_energy") {
            thermal.states.push_back({parse_number(value, key), AtomLines{}});
            in_state = true;
        } else if (key == "line") {
            const auto f = parse_number_list(value, key);
            if (f.size() != 2 && f.size() != 3)
                throw std::invalid_argument(
                    "particle line= expects d_sq,omega_ba[,width]");
            TransitionLine line{f[0], f[1], f.size() == 3 ? f[2] : 0.0};
            if (in_state)
                thermal.states.back().lines.lines.push_back(line);
            else
                atom.lines.push_back(line);
        } else if (key == "radius") {
            radius = parse_number(value, key);
        } else if (key == "material") {
            material = load_material_file(value);
            have_material = true;
        } else if (key == "alpha0") {
            alpha0 = parse_number(value, key);
        } else {
            throw std::invalid_argument("particle file: unknown key '" + key +
                                        "'");
        }
    }

    if (type == "atom" || (type.empty() && !atom.lines.empty()) ||
        (type.empty() && !thermal.states.empty())) {
        spec.thermal = thermal;
        if (!thermal.states.empty())
            spec.polarizability = thermal.states.front().lines;
        else
            spec.polarizability = atom;
    } else if (type == "nanosphere" || (type.empty() && radius > 0.0)) {
        if (!(radius > 0.0) || !have_material)
            throw std::invalid_argument(
                "nanosphere record needs radius= and material=");
        spec.polarizability = NanosphereElectric{radius, material};
    } else if (type == "static") {
        spec.polarizability = StaticPolarizability{alpha0};
    } else {
        throw std::invalid_argument(
            "particle file: type= must be atom|nanosphere|static");
    }
    return spec;
}

ParticleSpec load_particle_file(const std::string& path) {
    if (is_particle_preset(path)) return particle_preset(path);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open particle file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_particle(ss.str());
}

}  // namespace polder
