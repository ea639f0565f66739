#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <cmath>

#include "polder/constants.hpp"
#include "polder/noneq_field.hpp"
#include "s_tensor_oracle.hpp"

using namespace polder;

namespace {

const HalfSpaceGeometry gold{material_preset("gold")};
const double alpha0_ref = 4.0 * pi * constants.eps0 * 1e-29;

// Lossy dielectric with eps(0) = 2 and a resonance far above the thermal
// band (static across it).
HalfSpaceGeometry eps2_substrate() {
    LorentzModel m;
    m.eps_inf = 1.0;
    m.lines.push_back({1.0, 1e16, 1e13});
    return {m};
}

double lambda_thermal(double T) {
    return constants.hbar * constants.c / (constants.k_B * T);
}

}  // namespace

TEST_CASE("s_tensor basics") {
    SUBCASE("vacuum gives zero") {
        const auto s = s_tensor(HalfSpaceGeometry{VacuumModel{}}, 1e-7, 1e14);
        CHECK(s.s_xx == 0.0);
        CHECK(s.s_zz == 0.0);
    }
    SUBCASE("lossless substrate is rejected") {
        CHECK_THROWS_AS(
            s_tensor(HalfSpaceGeometry{ConstantModel{2.0}}, 1e-7, 1e14),
            std::domain_error);
    }
    SUBCASE("positivity over a wide (L, omega) grid") {
        for (double L = 1e-8; L < 2e-4; L *= 21.5) {
            for (double w = 1e12; w < 2e16; w *= 21.5) {
                const auto s = s_tensor(gold, L, w);
                CHECK(s.s_xx >= 0.0);
                CHECK(s.s_zz >= 0.0);
            }
        }
    }
    SUBCASE("sectors add up to the total") {
        const auto t = s_tensor(gold, 5e-8, 1e14);
        const auto e = s_tensor(gold, 5e-8, 1e14, SSector::evanescent);
        const auto p = s_tensor(gold, 5e-8, 1e14, SSector::propagating);
        CHECK(t.s_xx ==
              rel(e.s_xx + p.s_xx, 1e-7));
        CHECK(t.s_zz ==
              rel(e.s_zz + p.s_zz, 1e-7));
    }
    SUBCASE("propagating sector is independent of L") {
        const auto a = s_tensor(gold, 1e-7, 1e14, SSector::propagating);
        const auto b = s_tensor(gold, 1e-5, 1e14, SSector::propagating);
        CHECK(a.s_xx == rel(b.s_xx, 1e-8));
    }
}

TEST_CASE("s_tensor matches the analytic transparent-medium limit") {
    // For eps -> 1 the body radiates the upward hemisphere of vacuum modes:
    // S_xx = S_zz = omega^3 / (12 pi eps0 c^3). The approach is O(sqrt(eps-1))
    // from the grazing band, hence the dilute contrast here.
    LorentzModel weak;
    weak.eps_inf = 1.0;
    weak.lines.push_back({1e-6, 1e17, 1e13});
    const HalfSpaceGeometry dilute{weak};
    const double w = 1e15;
    const auto s = s_tensor(dilute, 1e-6, w);
    const double expect =
        std::pow(w, 3) /
        (12.0 * pi * constants.eps0 * std::pow(constants.c, 3));
    CHECK(s.s_xx == rel(expect, 5e-3));
    CHECK(s.s_zz == rel(expect, 5e-3));
}

TEST_CASE("s_tensor matches the brute-force volume integral") {
    // Three cases a frequency decade apart over the strongly lossy metal,
    // deep in the near field where the surface-plasmon strip (whose lateral
    // coherence the truncated grid cannot hold) is subdominant.
    const double L = 8e-9;
    for (double w : {5e12, 5e13, 5e14}) {
        const auto fast = s_tensor(gold, L, w);
        const auto slow = testing::s_tensor_volume_oracle(gold, L, w);
        CHECK(fast.s_xx == rel(slow.s_xx, 0.10));
        CHECK(fast.s_zz == rel(slow.s_zz, 0.10));
    }
}

TEST_CASE("neq dipole potential") {
    const auto sub = eps2_substrate();
    SUBCASE("T_S = 0 and alpha0 = 0 give zero") {
        CHECK(neq_dipole_potential(alpha0_ref, sub, 1e-6, 0.0) == 0.0);
        CHECK(neq_dipole_potential(0.0, sub, 1e-6, 600.0) == 0.0);
    }
    SUBCASE("attractive for a hot surface") {
        CHECK(neq_dipole_potential(alpha0_ref, sub, 1e-5, 600.0) < 0.0);
    }
    SUBCASE("large-distance slope approaches -2") {
        const double T_S = 600.0;
        const double L1 = 8.0 * lambda_thermal(T_S);
        const double L2 = 2.0 * L1;
        const double u1 = neq_dipole_potential(alpha0_ref, sub, L1, T_S);
        const double u2 = neq_dipole_potential(alpha0_ref, sub, L2, T_S);
        const double slope = std::log(std::abs(u2 / u1)) / std::log(2.0);
        CHECK(slope == rel(-2.0, 0.05));
    }
}

TEST_CASE("neq potential approaches the analytic asymptote") {
    // The subleading correction is ~1.1 lambda_T / L, so the deviation
    // shrinks through the validity domain and sits inside 10% from
    // ~11 lambda_T on.
    const auto sub = eps2_substrate();
    const double T_S = 600.0;
    double dev_prev = std::numeric_limits<double>::infinity();
    for (double f : {6.0, 12.0, 20.0}) {
        const double L = f * lambda_thermal(T_S);
        const double u = neq_dipole_potential(alpha0_ref, sub, L, T_S);
        const double a = neq_asymptote(alpha0_ref, 2.0, L, T_S, 0.0);
        const double dev = std::abs(u - a) / std::abs(a);
        CHECK(dev < dev_prev);
        dev_prev = dev;
        if (f >= 12.0) CHECK(dev <= 0.10);
    }
}

TEST_CASE("neq asymptote formula") {
    SUBCASE("frozen reference value") {
        // -(pi/12)(1e-29 m^3)(3/1) k_B^2 (600^2-300^2)/(hbar c (10 um)^2),
        // evaluated independently: -1.2786e-34 J.
        const double u = neq_asymptote(alpha0_ref, 2.0, 1e-5, 600.0, 300.0);
        CHECK(u == rel(-1.2786e-34, 1e-3));
    }
    SUBCASE("equal temperatures vanish") {
        CHECK(neq_asymptote(alpha0_ref, 2.0, 1e-5, 450.0, 450.0) == 0.0);
    }
    SUBCASE("inverse-square distance scaling") {
        const double u1 = neq_asymptote(alpha0_ref, 2.0, 1e-5, 600.0, 300.0);
        const double u2 = neq_asymptote(alpha0_ref, 2.0, 2e-5, 600.0, 300.0);
        CHECK(u2 == rel(0.25 * u1, 1e-12));
    }
    SUBCASE("domain restrictions") {
        CHECK_THROWS_AS(neq_asymptote(alpha0_ref, 0.9, 1e-5, 600.0, 300.0),
                        std::domain_error);
        CHECK_THROWS_AS(
            neq_asymptote(alpha0_ref,
                          std::numeric_limits<double>::infinity(), 1e-5,
                          600.0, 300.0),
            std::invalid_argument);
    }
}

TEST_CASE("temperature-difference scaling of the potential") {
    // U proportional to (T_S^2 - T_E^2): three pairs at fixed L collinear.
    const auto sub = eps2_substrate();
    const double L = 5e-5;
    const double TE = 310.0;
    double x[3], y[3];
    const double ts[3] = {420.0, 520.0, 605.0};
    for (int i = 0; i < 3; ++i) {
        x[i] = ts[i] * ts[i] - TE * TE;
        y[i] = neq_dipole_potential(alpha0_ref, sub, L, ts[i]) -
               neq_dipole_potential(alpha0_ref, sub, L, TE);
    }
    // Line through the outer points; the middle point must sit on it.
    const double slope = (y[2] - y[0]) / (x[2] - x[0]);
    const double y1_fit = y[0] + slope * (x[1] - x[0]);
    CHECK(y[1] == rel(y1_fit, 0.01));
}

TEST_CASE("composition rule") {
    const auto sub = eps2_substrate();
    SUBCASE("equal temperatures give the equilibrium force exactly") {
        const double T = 400.0, L = 2e-6;
        const ThermalConditions cond{T, T, 0.0};
        const double total = neq_force_total(alpha0_ref, sub, L, cond);
        EquilibriumOptions eopt;
        const double eq = force_matsubara(StaticPolarizability{alpha0_ref},
                                          sub, L, T, eopt);
        CHECK(total == eq);  // bit-for-bit: assembled that way
    }
    SUBCASE("hot environment turns repulsive at large distance") {
        const ThermalConditions cond{10.0, 600.0, 0.0};
        const double far =
            neq_force_total(alpha0_ref, sub, 6e-5, cond);
        CHECK(far > 0.0);  // pushed away from the surface
        const double near =
            neq_force_total(alpha0_ref, sub, 3e-8, cond);
        CHECK(near < 0.0);  // van der Waals attraction wins
    }
    SUBCASE("hot surface beats the equilibrium force at large distance") {
        const double L = 6e-5, T = 600.0;
        const ThermalConditions hot{T, 0.0, 0.0};
        const double f_hot = neq_force_total(alpha0_ref, sub, L, hot);
        EquilibriumOptions eopt;
        const double f_eq = force_matsubara(StaticPolarizability{alpha0_ref},
                                            sub, L, T, eopt);
        CHECK(std::abs(f_hot) > std::abs(f_eq));
    }
}

TEST_CASE("radiation pressure spectrum") {
    // SiC-like Lorentz pair: surface resonance Re eps = -1 and particle
    // resonance Re eps = -2 inside the restrahlen band.
    LorentzModel sic;
    sic.eps_inf = 1.0;
    sic.lines.push_back({9.0, 1.0e14, 5e11});
    const HalfSpaceGeometry substrate{sic};
    const Polarizability sphere = NanosphereElectric{50e-9, sic};
    const double T_S = 600.0;

    SUBCASE("repulsive where absorption exists, zero without") {
        const double rp =
            radiation_pressure_spectrum(sphere, substrate, 1e-6, 1.1e14, T_S);
        CHECK(rp > 0.0);
        const Polarizability transparent = StaticPolarizability{alpha0_ref};
        CHECK(radiation_pressure_spectrum(transparent, substrate, 1e-6,
                                          1.1e14, T_S) == 0.0);
    }
    SUBCASE("peaks near the particle plasmon-polariton resonance") {
        // Re eps(w2) = -2 for the sphere: w2 = w_T sqrt((eps(0)+2)/(eps_inf+2)).
        const double w2 = 1.0e14 * std::sqrt(12.0 / 3.0);
        double best_w = 0.0, best = 0.0;
        for (double w = 1.5e14; w < 2.3e14; w += 2e11) {
            const double rp =
                radiation_pressure_spectrum(sphere, substrate, 1e-6, w, T_S);
            if (rp > best) {
                best = rp;
                best_w = w;
            }
        }
        CHECK(best_w == rel(w2, 0.02));
    }
}
