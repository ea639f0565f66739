#pragma once

// Frequency-dependent permittivity models (Drude, Lorentz sets, constants)
// evaluable on the real axis and on the positive imaginary axis, plus the
// derived length and frequency scales. Divergent limits (Drude at xi = 0,
// lossless skin depth) are reported as +infinity markers rather than thrown.

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace polder {

struct DrudeModel {
    double omega_p;  // rad/s
    double gamma;    // rad/s
};

struct LorentzLine {
    double strength;  // dimensionless
    double omega_t;   // rad/s
    double gamma;     // rad/s
};

struct LorentzModel {
    double eps_inf = 1.0;
    std::vector<LorentzLine> lines;
};

struct ConstantModel {
    double eps;  // >= 1
};

struct VacuumModel {};

using DielectricModel =
    std::variant<DrudeModel, LorentzModel, ConstantModel, VacuumModel>;

// Throws std::invalid_argument on parameter-range violations.
void validate(const DielectricModel& model);

std::complex<double> permittivity_real_axis(const DielectricModel& model,
                                            double omega);

// Real, >= 1, monotonically decreasing in xi. Drude at xi = 0 returns the
// +infinity divergence marker consumed by the n = 0 Matsubara handler.
double permittivity_imag_axis(const DielectricModel& model, double xi);

// delta_omega = c / (omega Im sqrt(eps)); +infinity for lossless models.
double skin_depth(const DielectricModel& model, double omega);

// 2 pi c / omega_p; throws std::invalid_argument for non-Drude models.
double plasma_wavelength(const DielectricModel& model);

// xi -> 0 limit of permittivity_imag_axis (+infinity marker for Drude).
double static_permittivity(const DielectricModel& model);

bool is_lossless(const DielectricModel& model);

// Plain-text key=value records, e.g. type=drude / omega_p=... / gamma=...;
// Lorentz lines as repeated line=strength,omega_T,gamma entries.
// Unknown keys are rejected.
DielectricModel parse_material(const std::string& text);
DielectricModel load_material_file(const std::string& path);

// Bundled presets: "gold" (Drude), "silica"/"sapphire" (illustrative
// two-line Lorentz sets), "vacuum", "mirror" (large constant epsilon).
// Throws std::invalid_argument for unknown names.
DielectricModel material_preset(const std::string& name);
bool is_material_preset(const std::string& name);
std::string material_preset_text(const std::string& name);

}  // namespace polder
