#include "polder/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polder/atom_state.hpp"
#include "polder/constants.hpp"
#include "polder/equilibrium.hpp"
#include "polder/friction.hpp"
#include "polder/green_planar.hpp"
#include "polder/materials.hpp"
#include "polder/noneq_field.hpp"
#include "polder/numerics.hpp"
#include "polder/observables.hpp"
#include "polder/response.hpp"
#include "polder/sweep.hpp"

namespace polder {

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> meta;  // key=value strings
};

void emit(const Table& t, bool json_out, bool no_meta) {
    if (json_out) {
        nlohmann::json j;
        j["columns"] = t.columns;
        if (!no_meta) j["meta"] = t.meta;
        auto& rows = j["rows"] = nlohmann::json::array();
        for (const auto& r : t.rows) {
            nlohmann::json row;
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                row[t.columns[i]] = r[i];
            rows.push_back(row);
        }
        std::printf("%s\n", j.dump(2).c_str());
        return;
    }
    if (!no_meta)
        for (const auto& m : t.meta) std::printf("# %s\n", m.c_str());
    std::printf("#");
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        std::printf("%s%s", i ? "," : " ", t.columns[i].c_str());
    std::printf("\n");
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            std::printf("%s%.10e", i ? "," : "", r[i]);
        std::printf("\n");
    }
}

struct GridSpec {
    double lmin = 1e-9;
    double lmax = 1e-4;
    int points = 50;
    bool linear = false;
    std::vector<double> make() const {
        return make_grid(lmin, lmax, points, !linear);
    }
};

void add_grid(CLI::App* cmd, GridSpec& g) {
    cmd->add_option("--Lmin", g.lmin, "smallest distance, m");
    cmd->add_option("--Lmax", g.lmax, "largest distance, m");
    cmd->add_option("--points", g.points, "grid points")
        ->check(CLI::Range(2, 2000000));
    cmd->add_flag("--linear", g.linear, "linear instead of log spacing");
}

double env_tolerance() {
    if (const char* s = std::getenv("POLDER_TOL")) {
        const double t = std::atof(s);
        if (t > 0.0) return t;
    }
    return 1e-8;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{
        "polder: fluctuation-induced atom/nanoparticle-surface interactions "
        "(equilibrium, state-dependent, non-equilibrium, frictional)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");

    bool json_out = false;
    bool no_meta = false;
    int jobs = 0;
    double tol = env_tolerance();
    app.add_flag("--json", json_out, "emit JSON instead of CSV");
    app.add_flag("--no-meta", no_meta, "suppress metadata header lines");
    app.add_option("--jobs", jobs, "worker threads for grid sweeps");
    app.add_option("--tol", tol, "relative tolerance override");

    std::string material_name = "gold";
    std::string atom_name = "rb87";

    // --- materials ------------------------------------------------------
    auto* c_mat = app.add_subcommand("materials",
                                     "evaluate a dielectric model");
    double m_fmin = 1e12, m_fmax = 1e17;
    int m_points = 30;
    bool m_imag = false;
    c_mat->add_option("--material", material_name, "preset name or file");
    c_mat->add_option("--fmin", m_fmin, "lowest frequency, rad/s");
    c_mat->add_option("--fmax", m_fmax, "highest frequency, rad/s");
    c_mat->add_option("--points", m_points, "grid points");
    c_mat->add_flag("--imag-axis", m_imag, "evaluate eps(i xi)");

    // --- green ----------------------------------------------------------
    auto* c_green = app.add_subcommand("green",
                                       "scattered planar Green tensor");
    double g_L = 1e-6, g_freq = 1e14;
    bool g_imag = false, g_magnetic = false;
    GridSpec g_grid;
    bool g_sweep = false;
    c_green->add_option("--material", material_name);
    c_green->add_option("--L", g_L, "distance, m");
    c_green->add_option("--freq", g_freq, "frequency, rad/s");
    c_green->add_flag("--imag-axis", g_imag, "imaginary frequency axis");
    c_green->add_flag("--magnetic", g_magnetic, "magnetic flavor");
    c_green->add_flag("--sweep", g_sweep, "sweep L over the grid flags");
    add_grid(c_green, g_grid);

    // --- potential ------------------------------------------------------
    auto* c_pot = app.add_subcommand(
        "potential", "equilibrium Casimir-Polder free energy curve");
    GridSpec p_grid;
    double p_temp = 300.0;
    bool p_asymptotes = false, p_force = false, p_vdw_finite = false;
    c_pot->add_option("--atom", atom_name, "preset name or particle file");
    c_pot->add_option("--material", material_name);
    c_pot->add_option("--temp", p_temp, "temperature, K (0 = zero-T integral)")
        ->check(CLI::NonNegativeNumber);
    c_pot->add_flag("--asymptotes", p_asymptotes,
                    "append vdW/CP/Lifshitz asymptote columns");
    c_pot->add_flag("--force", p_force, "append the force column");
    c_pot->add_flag("--vdw-finite-eps", p_vdw_finite,
                    "vdW asymptote with the (1 - 2/eps) factor");
    add_grid(c_pot, p_grid);

    // --- state-potential --------------------------------------------------
    auto* c_state = app.add_subcommand(
        "state-potential", "state-dependent free energy with resonant term");
    GridSpec s_grid;
    double s_temp = 300.0;
    int s_state = 0;
    c_state->add_option("--atom", atom_name, "particle file with line sets");
    c_state->add_option("--material", material_name);
    c_state->add_option("--temp", s_temp, "temperature, K")
        ->check(CLI::NonNegativeNumber);
    c_state->add_option("--state", s_state, "state block index");
    add_grid(c_state, s_grid);

    // --- noneq ------------------------------------------------------------
    auto* c_neq = app.add_subcommand(
        "noneq", "non-equilibrium (hot surface) dipole potential and force");
    GridSpec n_grid;
    double n_TS = 605.0, n_TE = 310.0;
    c_neq->add_option("--TS", n_TS, "surface temperature, K")
        ->check(CLI::NonNegativeNumber);
    c_neq->add_option("--TE", n_TE, "environment temperature, K")
        ->check(CLI::NonNegativeNumber);
    c_neq->add_option("--atom", atom_name);
    c_neq->add_option("--material", material_name);
    add_grid(c_neq, n_grid);

    // --- friction -----------------------------------------------------------
    auto* c_fric = app.add_subcommand("friction",
                                      "velocity-dependent radiative forces");
    std::string f_mode = "blackbody";
    double f_T = 300.0, f_TA = 0.0, f_v = 1.0, f_L = 1e-7;
    double f_omega_s = 0.0;
    c_fric->add_option("--mode", f_mode,
                       "blackbody|dk|hotfield|surface|sb|hs")
        ->check(CLI::IsMember(
            {"blackbody", "dk", "hotfield", "surface", "sb", "hs"}));
    c_fric->add_option("--atom", atom_name);
    c_fric->add_option("--material", material_name);
    c_fric->add_option("--temp", f_T, "field/surface temperature, K")
        ->check(CLI::NonNegativeNumber);
    c_fric->add_option("--TA", f_TA, "atom temperature, K (dk mode)")
        ->check(CLI::NonNegativeNumber);
    c_fric->add_option("--v", f_v, "velocity, m/s");
    c_fric->add_option("--L", f_L, "distance, m (surface modes)");
    c_fric->add_option("--omega-s", f_omega_s,
                       "surface plasmon frequency override, rad/s (hs mode)");

    // --- observables ---------------------------------------------------------
    auto* c_obs = app.add_subcommand("observables",
                                     "experiment-facing quantities");
    c_obs->require_subcommand(1);
    auto* c_trap = c_obs->add_subcommand(
        "trap-shift", "BEC center-of-mass frequency shift");
    double t_temp = 300.0, t_Lc = 7e-6, t_Rz = 2.4e-6, t_mass = 1.44316e-25;
    double t_ftrap = 230.0;
    c_trap->add_option("--atom", atom_name);
    c_trap->add_option("--material", material_name);
    c_trap->add_option("--temp", t_temp, "temperature, K")
        ->check(CLI::NonNegativeNumber);
    c_trap->add_option("--Lcenter", t_Lc, "trap center distance, m");
    c_trap->add_option("--Rz", t_Rz, "Thomas-Fermi radius, m");
    c_trap->add_option("--mass", t_mass, "atomic mass, kg");
    c_trap->add_option("--ftrap", t_ftrap, "trap frequency, Hz");

    auto* c_bloch = c_obs->add_subcommand("bloch",
                                          "Bloch oscillation period shift");
    double b_L = 5e-6, b_q = 1.61e7, b_probe = 0.0, b_temp = 300.0;
    double b_mass = 1.44316e-25;
    c_bloch->add_option("--atom", atom_name);
    c_bloch->add_option("--material", material_name);
    c_bloch->add_option("--temp", b_temp, "temperature, K")
        ->check(CLI::NonNegativeNumber);
    c_bloch->add_option("--L", b_L, "lattice distance from surface, m");
    c_bloch->add_option("--q", b_q, "Brillouin zone width, rad/m");
    c_bloch->add_option("--probe", b_probe, "lattice extent, m (0 = point)");
    c_bloch->add_option("--mass", b_mass,
                        "atomic mass, kg (gravity reference)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    QuadratureOptions quad;
    quad.rel_tol = tol;
    EquilibriumOptions eopt;
    eopt.quad = quad;
    eopt.matsubara_rel_tol = tol;

    Table out;
    std::string failed_module;
    try {
        if (*c_mat) {
            failed_module = "materials";
            const DielectricModel model = load_material_file(material_name);
            out.meta = {"command=materials", "material=" + material_name,
                        std::string("axis=") + (m_imag ? "imaginary" : "real")};
            const auto freqs = make_grid(m_fmin, m_fmax, m_points, true);
            if (m_imag) {
                out.columns = {"xi", "eps"};
                for (double xi : freqs)
                    out.rows.push_back(
                        {xi, permittivity_imag_axis(model, xi)});
            } else {
                out.columns = {"omega", "re_eps", "im_eps", "skin_depth"};
                for (double w : freqs) {
                    const auto eps = permittivity_real_axis(model, w);
                    out.rows.push_back(
                        {w, eps.real(), eps.imag(), skin_depth(model, w)});
                }
            }
        } else if (*c_green) {
            failed_module = "green_planar";
            const HalfSpaceGeometry geom{load_material_file(material_name)};
            const auto axis = g_imag ? FrequencyAxis::imaginary_xi
                                     : FrequencyAxis::real_omega;
            const auto flavor = g_magnetic ? GreenFlavor::magnetic
                                           : GreenFlavor::electric;
            out.meta = {"command=green", "material=" + material_name,
                        std::string("axis=") + (g_imag ? "imaginary" : "real"),
                        std::string("flavor=") +
                            (g_magnetic ? "magnetic" : "electric")};
            out.columns = {"L",      "freq",   "axis",   "flavor",
                           "re_gxx", "im_gxx", "re_gzz", "im_gzz"};
            const std::vector<double> ls =
                g_sweep ? g_grid.make() : std::vector<double>{g_L};
            for (double L : ls) {
                const GreenDiagonal g =
                    green_dispatch(geom, flavor, L, g_freq, axis, quad);
                out.rows.push_back({L, g_freq, g_imag ? 1.0 : 0.0,
                                    g_magnetic ? 1.0 : 0.0, g.g_xx.real(),
                                    g.g_xx.imag(), g.g_zz.real(),
                                    g.g_zz.imag()});
            }
        } else if (*c_pot) {
            failed_module = "equilibrium";
            const HalfSpaceGeometry geom{load_material_file(material_name)};
            const ParticleSpec atom = load_particle_file(atom_name);
            const Polarizability& p = atom.polarizability;
            const double alpha0 = alpha_static(p);
            out.meta = {"command=potential", "atom=" + atom_name,
                        "material=" + material_name,
                        "T=" + std::to_string(p_temp)};
            out.columns = {"L", "F"};
            if (p_asymptotes) {
                out.columns.insert(out.columns.end(),
                                   {"F_vdw", "F_cp", "F_lifshitz"});
            }
            if (p_force) out.columns.push_back("force");
            const auto ls = p_grid.make();
            const PotentialCurve curve =
                potential_curve(p, geom, ls, p_temp, false, jobs, eopt);
            for (std::size_t i = 0; i < ls.size(); ++i) {
                const double L = ls[i];
                std::vector<double> row{L, curve.entries[i].value};
                if (p_asymptotes) {
                    row.push_back(
                        p_vdw_finite
                            ? asymptote_vdw(p, L,
                                            VdwReflectivity::table_factor,
                                            &geom.material, eopt)
                            : asymptote_vdw(p, L, VdwReflectivity::perfect,
                                            nullptr, eopt));
                    row.push_back(asymptote_cp(alpha0, L));
                    row.push_back(p_temp > 0.0
                                      ? asymptote_lifshitz(alpha0, L, p_temp)
                                      : 0.0);
                }
                if (p_force)
                    row.push_back(p_temp > 0.0
                                      ? force_matsubara(p, geom, L, p_temp,
                                                        eopt)
                                      : force_zero_T(p, geom, L, eopt));
                out.rows.push_back(row);
            }
        } else if (*c_state) {
            failed_module = "atom_state";
            const HalfSpaceGeometry geom{load_material_file(material_name)};
            const ParticleSpec spec = load_particle_file(atom_name);
            AtomLines lines;
            if (!spec.thermal.states.empty()) {
                if (s_state < 0 ||
                    s_state >= (int)spec.thermal.states.size())
                    throw std::invalid_argument(
                        "state-potential: --state out of range");
                lines = spec.thermal.states[s_state].lines;
            } else if (const auto* a =
                           std::get_if<AtomLines>(&spec.polarizability)) {
                lines = *a;
            } else {
                throw std::invalid_argument(
                    "state-potential: particle file does not define atomic "
                    "lines");
            }
            out.meta = {"command=state-potential", "atom=" + atom_name,
                        "material=" + material_name,
                        "state=" + std::to_string(s_state),
                        "T=" + std::to_string(s_temp)};
            out.columns = {"L", "F", "F_nonres", "F_res"};
            for (double L : s_grid.make()) {
                const double fnr = nonresonant_part(lines, geom, L, s_temp,
                                                    eopt);
                const double fr = resonant_part(lines, geom, L, s_temp, eopt);
                out.rows.push_back({L, fnr + fr, fnr, fr});
            }
        } else if (*c_neq) {
            failed_module = "noneq_field";
            const HalfSpaceGeometry geom{load_material_file(material_name)};
            const ParticleSpec atom = load_particle_file(atom_name);
            const double alpha0 = alpha_static(atom.polarizability);
            const double eps0s = static_permittivity(geom.material);
            out.meta = {"command=noneq", "atom=" + atom_name,
                        "material=" + material_name,
                        "TS=" + std::to_string(n_TS),
                        "TE=" + std::to_string(n_TE)};
            out.columns = {"L", "U_neq", "F_neq", "U_asymptote"};
            const auto ls = n_grid.make();
            const ThermalConditions cond{n_TS, n_TE, 0.0};
            auto u_of = [&](double L) {
                return neq_dipole_potential(alpha0, geom, L, n_TS, quad) -
                       neq_dipole_potential(alpha0, geom, L, n_TE, quad);
            };
            const auto us = map_grid(ls, u_of, jobs);
            auto f_of = [&](double L) {
                return neq_force_total(alpha0, geom, L, cond, quad);
            };
            const auto fs = map_grid(ls, f_of, jobs);
            for (std::size_t i = 0; i < ls.size(); ++i) {
                double asym = std::numeric_limits<double>::quiet_NaN();
                if (std::isfinite(eps0s) && eps0s > 1.0)
                    asym = neq_asymptote(alpha0, eps0s, ls[i], n_TS, n_TE);
                out.rows.push_back({ls[i], us[i], fs[i], asym});
            }
        } else if (*c_fric) {
            failed_module = "friction";
            const ParticleSpec atom = load_particle_file(atom_name);
            const Polarizability& p = atom.polarizability;
            out.meta = {"command=friction", "mode=" + f_mode,
                        "atom=" + atom_name, "material=" + material_name};
            out.columns = {"L", "T", "T_A", "v", "force"};
            FrictionResult r{0.0, ""};
            if (f_mode == "blackbody") {
                r = blackbody_friction(p, f_T, f_v, quad);
            } else if (f_mode == "dk") {
                r = dedkov_kyasov(p, f_T, f_TA, f_v, quad);
            } else if (f_mode == "hotfield") {
                r = hot_field_force(p, f_T, f_v, quad);
            } else {
                const HalfSpaceGeometry geom{
                    load_material_file(material_name)};
                if (f_mode == "surface") {
                    r = surface_friction(p, geom, f_L, f_T, f_v, false, false,
                                         quad);
                } else if (f_mode == "sb") {
                    const auto* lines = std::get_if<AtomLines>(&p);
                    if (!lines)
                        throw std::invalid_argument(
                            "friction --mode sb needs an atomic line file");
                    r = scheel_buhmann_nonretarded(*lines, geom, f_L, f_v);
                } else {
                    double ws = f_omega_s;
                    if (ws <= 0.0) {
                        const auto* d =
                            std::get_if<DrudeModel>(&geom.material);
                        if (!d)
                            throw std::invalid_argument(
                                "friction --mode hs needs --omega-s or a "
                                "Drude material");
                        ws = d->omega_p / std::sqrt(2.0);
                    }
                    r = harris_schaich_scale(alpha_static(p), f_L, ws, f_v);
                }
            }
            out.meta.push_back("regime=" + r.regime);
            out.rows.push_back({f_L, f_T, f_TA, f_v, r.force});
        } else if (*c_trap) {
            failed_module = "observables";
            const HalfSpaceGeometry geom{load_material_file(material_name)};
            const ParticleSpec atom = load_particle_file(atom_name);
            const Polarizability& p = atom.polarizability;
            TrapConfig trap{2.0 * pi * t_ftrap, t_Rz, t_mass, t_Lc};
            auto potential = [&](double L) {
                return t_temp > 0.0
                           ? free_energy_matsubara(p, geom, L, t_temp, eopt)
                           : free_energy_zero_T(p, geom, L, eopt);
            };
            const TrapShift ts = trap_shift(potential, trap);
            out.meta = {"command=observables trap-shift", "atom=" + atom_name,
                        "material=" + material_name};
            out.columns = {"L_center", "R_z", "omega_trap", "gamma",
                           "curvature_integral"};
            out.rows.push_back({t_Lc, t_Rz, trap.omega_trap, ts.gamma,
                                ts.curvature_integral});
        } else if (*c_bloch) {
            failed_module = "observables";
            const HalfSpaceGeometry geom{load_material_file(material_name)};
            const ParticleSpec atom = load_particle_file(atom_name);
            const Polarizability& p = atom.polarizability;
            auto potential = [&](double L) {
                return b_temp > 0.0
                           ? free_energy_matsubara(p, geom, L, b_temp, eopt)
                           : free_energy_zero_T(p, geom, L, eopt);
            };
            const double gravity = b_mass * 9.80665;
            const BlochResult br =
                bloch_period(potential, b_q, b_L, b_probe, gravity);
            out.meta = {"command=observables bloch", "atom=" + atom_name,
                        "material=" + material_name};
            out.columns = {"L", "q_width", "tau_B", "mean_force",
                           "relative_shift"};
            out.rows.push_back(
                {b_L, b_q, br.tau_B, br.mean_force, br.relative_shift});
        }
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "numerical failure in %s: %s\n",
                     failed_module.c_str(), e.what());
        for (const auto& m : out.meta)
            std::fprintf(stderr, "  %s\n", m.c_str());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "configuration error in %s: %s\n",
                     failed_module.c_str(), e.what());
        return 2;
    }

    emit(out, json_out, no_meta);
    return 0;
}

}  // namespace polder
