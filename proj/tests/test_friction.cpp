#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <cmath>

#include "polder/constants.hpp"
#include "polder/friction.hpp"

using namespace polder;

namespace {

const HalfSpaceGeometry gold{material_preset("gold")};

// Damped oscillator with the resonance placed relative to the thermal
// frequency k_B T / hbar.
DampedOscillator thermal_oscillator(double omega_0, double q_factor = 50.0) {
    const double mass = 9.109e-31;
    const double q = 1.602e-19;
    return {q, mass, omega_0, omega_0 / q_factor};
}

double thermal_omega(double T) { return constants.k_B * T / constants.hbar; }

}  // namespace

TEST_CASE("blackbody friction basics") {
    const double T = 300.0;
    const Polarizability p = thermal_oscillator(2.0 * thermal_omega(T));
    SUBCASE("v = 0 and T = 0 give zero") {
        CHECK(blackbody_friction(p, T, 0.0).force == 0.0);
        CHECK(blackbody_friction(p, 0.0, 10.0).force == 0.0);
    }
    SUBCASE("linear in v and opposing the motion") {
        const auto f1 = blackbody_friction(p, T, 1.0);
        const auto f2 = blackbody_friction(p, T, 2.0);
        CHECK(f1.force < 0.0);
        CHECK(f2.force == rel(2.0 * f1.force, 1e-10));
    }
    SUBCASE("Boltzmann suppression of a high line") {
        // hbar w0 / k_B T = 30 vs 1: the line contribution is suppressed by
        // the sinh^-2 weight (~e^{-30}); the line must be narrow so its
        // low-frequency Lorentzian tail does not set a power-law floor.
        const double w0 = 3e14;
        const Polarizability osc = thermal_oscillator(w0, 1e4);
        const double t_hot = constants.hbar * w0 / constants.k_B;   // x = 1
        const double t_cold = t_hot / 30.0;                          // x = 30
        const double f_hot = blackbody_friction(osc, t_hot, 1.0).force;
        const double f_cold = blackbody_friction(osc, t_cold, 1.0).force;
        CHECK(std::abs(f_cold) < 1e-7 * std::abs(f_hot));
    }
}

TEST_CASE("dedkov-kyasov force") {
    const double T = 300.0;
    const Polarizability p = thermal_oscillator(2.0 * thermal_omega(T));
    SUBCASE("rest at equal temperatures: zero by isotropy") {
        CHECK(dedkov_kyasov(p, T, T, 0.0).force == 0.0);
    }
    SUBCASE("v >= c rejected") {
        CHECK_THROWS_AS(dedkov_kyasov(p, T, T, 3e8), std::domain_error);
    }
    SUBCASE("equilibrium reduction to blackbody friction (1%)") {
        const double v = 1e-5 * constants.c;
        const auto dk = dedkov_kyasov(p, T, T, v);
        const auto bb = blackbody_friction(p, T, v);
        CHECK(dk.force == rel(bb.force, 0.01));
    }
    SUBCASE("hot field accelerates a low-frequency absorber") {
        const Polarizability low = thermal_oscillator(0.2 * thermal_omega(T));
        const double v = 1e-6 * constants.c;
        const auto f = dedkov_kyasov(low, T, 0.0, v);
        CHECK(f.force * v > 0.0);
    }
}

TEST_CASE("hot-field force") {
    const double T = 300.0;
    const double v = 1e-6 * constants.c;
    SUBCASE("sign follows the line position against k_B T / hbar") {
        const Polarizability low = thermal_oscillator(0.2 * thermal_omega(T));
        const Polarizability high = thermal_oscillator(8.0 * thermal_omega(T));
        CHECK(hot_field_force(low, T, v).force > 0.0);
        CHECK(hot_field_force(high, T, v).force < 0.0);
    }
    SUBCASE("agrees with dedkov_kyasov at T_A = 0 (2%)") {
        const Polarizability p = thermal_oscillator(2.0 * thermal_omega(T));
        const auto hf = hot_field_force(p, T, v);
        const auto dk = dedkov_kyasov(p, T, 0.0, v);
        CHECK(hf.force == rel(dk.force, 0.02));
    }
}

TEST_CASE("equilibrium drag over a velocity sweep") {
    const double T = 300.0;
    const Polarizability p = thermal_oscillator(1.5 * thermal_omega(T));
    double ratio0 = 0.0;
    for (double v = 1e-8 * constants.c; v <= 1.01e-6 * constants.c;
         v *= 10.0) {
        const auto f = dedkov_kyasov(p, T, T, v);
        CHECK(f.force * v <= 0.0);
        const double ratio = f.force / v;
        if (ratio0 == 0.0) ratio0 = ratio;
        // Linear-response window: f/v constant to 1%.
        CHECK(ratio == rel(ratio0, 0.01));
    }
}

TEST_CASE("surface friction") {
    const double T = 300.0;
    const Polarizability p = thermal_oscillator(0.5 * thermal_omega(T));
    SUBCASE("T -> 0 and v = 0 give zero") {
        CHECK(surface_friction(p, gold, 1e-7, 0.0, 1.0).force == 0.0);
        CHECK(surface_friction(p, gold, 1e-7, T, 0.0).force == 0.0);
    }
    SUBCASE("drag sign over a lossy substrate") {
        const auto f = surface_friction(p, gold, 1e-7, T, 1.0);
        CHECK(f.force < 0.0);
    }
    SUBCASE("deep non-retarded distance scaling (L^-5 kernel)") {
        // The mixed-gradient kernel carries two transverse powers of k over
        // the quasi-static 1/L^3 mode density, giving L^-5 (the same power
        // as the Scheel-Buhmann closed form).
        const double L1 = 2e-8, L2 = 2e-7;
        const double f1 = surface_friction(p, gold, L1, T, 1.0).force;
        const double f2 = surface_friction(p, gold, L2, T, 1.0).force;
        const double slope = std::log(std::abs(f2 / f1)) / std::log(L2 / L1);
        CHECK(slope == rel(-5.0, 0.10));
    }
    SUBCASE("non-retarded kernel option tracks the full kernel") {
        const double L = 3e-8;
        const double full = surface_friction(p, gold, L, T, 1.0).force;
        const double nr =
            surface_friction(p, gold, L, T, 1.0, true).force;
        CHECK(nr == rel(full, 0.05));
    }
    SUBCASE("dressed polarizability reduces the friction") {
        const double L = 3e-8;
        const double bare = surface_friction(p, gold, L, T, 1.0).force;
        const double dressed =
            surface_friction(p, gold, L, T, 1.0, false, true).force;
        CHECK(std::isfinite(dressed));
        CHECK(dressed < 0.0);
        CHECK(std::abs(dressed) <= std::abs(bare) * 1.05);
    }
}

TEST_CASE("scheel-buhmann non-retarded closed form") {
    AtomLines atom;
    atom.lines.push_back({1e-58, 2.4e15, 2e7});
    const double v = 1.0;
    SUBCASE("L^-5 scaling") {
        const double f1 =
            scheel_buhmann_nonretarded(atom, gold, 1e-8, v).force;
        const double f2 =
            scheel_buhmann_nonretarded(atom, gold, 2e-8, v).force;
        CHECK(f1 < 0.0);
        CHECK(f1 / f2 == rel(32.0, 1e-9));
    }
    SUBCASE("force vanishes with the radiative width") {
        AtomLines narrow = atom;
        narrow.lines[0].width = 2e-3;
        const double f =
            scheel_buhmann_nonretarded(narrow, gold, 1e-8, v).force;
        const double f0 =
            scheel_buhmann_nonretarded(atom, gold, 1e-8, v).force;
        CHECK(std::abs(f) == rel(std::abs(f0) * 1e-10, 1e-9));
        AtomLines missing = atom;
        missing.lines[0].width = 0.0;
        CHECK_THROWS_AS(scheel_buhmann_nonretarded(missing, gold, 1e-8, v),
                        std::domain_error);
    }
    SUBCASE("surface plasmon frequency from the Drude model") {
        // Consistency: recompute with omega_s = omega_p / sqrt 2 by hand.
        const double omega_s = 1.37e16 / std::sqrt(2.0);
        const auto& line = atom.lines[0];
        const double expect = -v /
                              (16.0 * pi * constants.eps0 * std::pow(1e-8, 5)) *
                              line.d_sq * omega_s * line.width /
                              std::pow(line.omega_ba + omega_s, 3);
        CHECK(scheel_buhmann_nonretarded(atom, gold, 1e-8, v).force ==
              rel(expect, 1e-12));
        CHECK_THROWS_AS(
            scheel_buhmann_nonretarded(
                atom, HalfSpaceGeometry{ConstantModel{4.0}}, 1e-8, v),
            std::invalid_argument);
    }
}

TEST_CASE("harris-schaich scaling estimate") {
    const double alpha0 = 4.0 * pi * constants.eps0 * 1e-29;
    const double omega_s = 1.37e16 / std::sqrt(2.0);
    const double v = 1.0;
    const double f1 = harris_schaich_scale(alpha0, 1e-8, omega_s, v).force;
    const double f2 = harris_schaich_scale(alpha0, 2e-8, omega_s, v).force;
    CHECK(f1 < 0.0);
    CHECK(f1 / f2 == rel(1024.0, 1e-9));
    const double f4 =
        harris_schaich_scale(2.0 * alpha0, 1e-8, omega_s, v).force;
    CHECK(f4 == rel(4.0 * f1, 1e-12));

    // Ratio to Scheel-Buhmann scales as L^-5.
    AtomLines atom;
    atom.lines.push_back({1e-58, 2.4e15, 2e7});
    auto ratio = [&](double L) {
        return harris_schaich_scale(alpha0, L, omega_s, v).force /
               scheel_buhmann_nonretarded(atom, gold, L, v).force;
    };
    CHECK(ratio(1e-8) / ratio(2e-8) == rel(32.0, 1e-9));
}
