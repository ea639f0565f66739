// Benchmark: serial reference vs OpenMP grid kernel on a representative
// free-energy curve (Rb87 over gold at 300 K).

#include <chrono>
#include <cstdio>

#include "polder/equilibrium.hpp"
#include "polder/materials.hpp"
#include "polder/response.hpp"
#include "polder/sweep.hpp"

using namespace polder;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int points = argc > 1 ? std::atoi(argv[1]) : 64;
    const HalfSpaceGeometry geom{material_preset("gold")};
    const Polarizability atom = particle_preset("rb87").polarizability;
    const auto ls = make_grid(1e-9, 1e-4, points, true);
    auto fe = [&](double L) {
        return free_energy_matsubara(atom, geom, L, 300.0);
    };

    std::vector<double> serial, parallel;
    const double t_serial = time_ms([&] { serial = map_grid_serial(ls, fe); });
    const double t_parallel = time_ms([&] { parallel = map_grid(ls, fe); });

    double max_diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i)
        max_diff = std::max(max_diff, std::abs(serial[i] - parallel[i]));

    std::printf("points          : %d\n", points);
    std::printf("threads         : %d\n", hardware_jobs());
    std::printf("serial          : %8.1f ms\n", t_serial);
    std::printf("openmp          : %8.1f ms\n", t_parallel);
    std::printf("speedup         : %.2fx\n", t_serial / t_parallel);
    std::printf("max |difference|: %.3e (expect 0)\n", max_diff);
    return max_diff == 0.0 ? 0 : 1;
}
