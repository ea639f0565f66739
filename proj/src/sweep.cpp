#include "polder/sweep.hpp"

#include <cmath>

namespace polder {

std::vector<double> make_grid(double lo, double hi, int points,
                              bool log_spaced) {
    if (!(lo < hi)) throw std::domain_error("make_grid: need lo < hi");
    if (points < 2) throw std::domain_error("make_grid: need points >= 2");
    if (log_spaced && !(lo > 0.0))
        throw std::domain_error("make_grid: log spacing needs lo > 0");
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) {
        const double t = (double)i / (points - 1);
        xs[i] = log_spaced ? lo * std::exp(t * std::log(hi / lo))
                           : lo + t * (hi - lo);
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

}  // namespace polder
