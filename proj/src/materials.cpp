#include "polder/materials.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "polder/config.hpp"
#include "polder/constants.hpp"

namespace polder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

void validate(const DielectricModel& model) {
    if (const auto* d = std::get_if<DrudeModel>(&model)) {
        if (!(d->omega_p > 0.0) || !(d->gamma > 0.0))
            throw std::invalid_argument(
                "drude model: omega_p and gamma must be > 0");
    } else if (const auto* l = std::get_if<LorentzModel>(&model)) {
        if (!(l->eps_inf >= 1.0))
            throw std::invalid_argument("lorentz model: eps_inf must be >= 1");
        for (const auto& line : l->lines) {
            if (!(line.strength > 0.0) || !(line.omega_t > 0.0) ||
                !(line.gamma >= 0.0))
                throw std::invalid_argument(
                    "lorentz line: strength, omega_T must be > 0, gamma >= 0");
        }
    } else if (const auto* cst = std::get_if<ConstantModel>(&model)) {
        if (!(cst->eps >= 1.0))
            throw std::invalid_argument("constant model: eps must be >= 1");
    }
}

std::complex<double> permittivity_real_axis(const DielectricModel& model,
                                            double omega) {
    if (!(omega > 0.0))
        throw std::domain_error(
            "permittivity_real_axis: omega must be > 0 (use the "
            "imaginary-axis evaluator or the static limit)");
    using C = std::complex<double>;
    if (const auto* d = std::get_if<DrudeModel>(&model)) {
        return 1.0 - d->omega_p * d->omega_p /
                         (omega * C(omega, d->gamma));
    }
    if (const auto* l = std::get_if<LorentzModel>(&model)) {
        C eps(l->eps_inf, 0.0);
        for (const auto& line : l->lines) {
            eps += line.strength * line.omega_t * line.omega_t /
                   C(line.omega_t * line.omega_t - omega * omega,
                     -line.gamma * omega);
        }
        return eps;
    }
    if (const auto* cst = std::get_if<ConstantModel>(&model))
        return C(cst->eps, 0.0);
    return C(1.0, 0.0);
}

double permittivity_imag_axis(const DielectricModel& model, double xi) {
    if (!(xi >= 0.0))
        throw std::domain_error("permittivity_imag_axis: xi must be >= 0");
    if (const auto* d = std::get_if<DrudeModel>(&model)) {
        if (xi == 0.0) return kInf;
        return 1.0 + d->omega_p * d->omega_p / (xi * (xi + d->gamma));
    }
    if (const auto* l = std::get_if<LorentzModel>(&model)) {
        double eps = l->eps_inf;
        for (const auto& line : l->lines)
            eps += line.strength * line.omega_t * line.omega_t /
                   (line.omega_t * line.omega_t + xi * xi + line.gamma * xi);
        return eps;
    }
    if (const auto* cst = std::get_if<ConstantModel>(&model)) return cst->eps;
    return 1.0;
}

double skin_depth(const DielectricModel& model, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("skin_depth: omega must be > 0");
    if (is_lossless(model)) return kInf;
    const std::complex<double> eps = permittivity_real_axis(model, omega);
    const double im_n = std::sqrt(eps).imag();
    if (!(im_n > 0.0)) return kInf;
    return constants.c / (omega * im_n);
}

double plasma_wavelength(const DielectricModel& model) {
    const auto* d = std::get_if<DrudeModel>(&model);
    if (!d)
        throw std::invalid_argument(
            "plasma_wavelength: only defined for Drude models");
    return 2.0 * pi * constants.c / d->omega_p;
}

double static_permittivity(const DielectricModel& model) {
    return permittivity_imag_axis(model, 0.0);
}

bool is_lossless(const DielectricModel& model) {
    if (std::holds_alternative<DrudeModel>(model)) return false;
    if (const auto* l = std::get_if<LorentzModel>(&model)) {
        for (const auto& line : l->lines)
            if (line.gamma > 0.0) return false;
        return true;
    }
    return true;
}

DielectricModel parse_material(const std::string& text) {
    DielectricModel model = VacuumModel{};
    std::string type;
    DrudeModel drude{0.0, 0.0};
    LorentzModel lorentz;
    ConstantModel cst{1.0};
    for (const auto& [key, value] : parse_key_values(text)) {
        if (key == "type") {
            type = value;
        } else if (key == "omega_p") {
            drude.omega_p = parse_number(value, key);
        } else if (key == "gamma") {
            drude.gamma = parse_number(value, key);
        } else if (key == "eps_inf") {
            lorentz.eps_inf = parse_number(value, key);
        } else if (key == "line") {
            const auto f = parse_number_list(value, key);
            if (f.size() != 3)
                throw std::invalid_argument(
                    "material line= expects strength,omega_T,gamma");
            lorentz.lines.push_back({f[0], f[1], f[2]});
        } else if (key == "eps") {
            cst.eps = parse_number(value, key);
        } else {
            throw std::invalid_argument("material file: unknown key '" + key +
                                        "'");
        }
    }
    if (type == "drude") {
        model = drude;
    } else if (type == "lorentz") {
        model = lorentz;
    } else if (type == "constant") {
        model = cst;
    } else if (type == "vacuum") {
        model = VacuumModel{};
    } else {
        throw std::invalid_argument(
            "material file: type= must be drude|lorentz|constant|vacuum");
    }
    validate(model);
    return model;
}

DielectricModel load_material_file(const std::string& path) {
    if (is_material_preset(path)) return material_preset(path);
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open material file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_material(ss.str());
}

namespace {

// The gold Drude parameters follow the calibrated skin-depth check
// (0.79 um at 10 GHz); the oxide Lorentz sets are illustrative, with
// static permittivities in the 2-10 range.
const char* kGold =
    "# gold, Drude\n"
    "type=drude\n"
    "omega_p=1.37e16\n"
    "gamma=4.06e13\n";

const char* kSilica =
    "# fused silica, two-line Lorentz set (illustrative)\n"
    "type=lorentz\n"
    "eps_inf=1.0\n"
    "line=1.703,1.88e14,1.88e12\n"
    "line=1.098,2.034e16,2.034e14\n";

const char* kSapphire =
    "# sapphire, two-line Lorentz set (illustrative)\n"
    "type=lorentz\n"
    "eps_inf=1.0\n"
    "line=6.7,1.0e14,1.0e12\n"
    "line=1.7,2.0e16,2.0e14\n";

const char* kVacuum = "type=vacuum\n";

// Large constant permittivity standing in for a perfect reflector.
const char* kMirror =
    "type=constant\n"
    "eps=1e9\n";

}  // namespace

std::string material_preset_text(const std::string& name) {
    if (name == "gold") return kGold;
    if (name == "silica") return kSilica;
    if (name == "sapphire") return kSapphire;
    if (name == "vacuum") return kVacuum;
    if (name == "mirror") return kMirror;
    throw std::invalid_argument("unknown material preset: " + name);
}

bool is_material_preset(const std::string& name) {
    return name == "gold" || name == "silica" || name == "sapphire" ||
           name == "vacuum" || name == "mirror";
}

DielectricModel material_preset(const std::string& name) {
    return parse_material(material_preset_text(name));
}

}  // namespace polder
