#pragma once

// Adaptive quadrature, Matsubara summation and finite differences shared by
// the physics modules. The finite/semi-infinite integrators run a globally
// adaptive Gauss-Kronrod 7-15 rule (worst-interval-first bisection).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace polder {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-300;  // effectively off; relative control dominates
    int max_intervals = 4000;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Non-convergence after the configured subdivision budget. Carries the
// partial value and error estimate accumulated so far.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, std::complex<double> partial,
                     double error, long evaluations)
        : std::runtime_error(what), partial_value(partial),
          error_estimate(error), evaluations(evaluations) {}

    std::complex<double> partial_value;
    double error_estimate;
    long evaluations;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss-7 weights attached to the odd Kronrod nodes (indices 1,3,5,7).
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

inline double err_norm(double v) { return std::abs(v); }
inline double err_norm(std::complex<double> v) { return std::abs(v); }

template <class T, class F>
void gk15(F&& f, double a, double b, T& integral, double& error, long& evals) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T acc_k{};
    T acc_g{};
    for (int i = 0; i < 8; ++i) {
        const double dx = half * gk_nodes[i];
        T fsum;
        if (i == 7) {
            fsum = f(mid);
            evals += 1;
        } else {
            fsum = f(mid - dx) + f(mid + dx);
            evals += 2;
        }
        acc_k += gk_wk[i] * fsum;
        if (i % 2 == 1) acc_g += gk_wg[i / 2] * fsum;
    }
    integral = half * acc_k;
    // |K - G| is a conservative bound on the Kronrod error.
    error = err_norm(half * (acc_k - acc_g));
    if (!std::isfinite(err_norm(integral)))
        throw std::runtime_error("quadrature: non-finite integrand sample");
}

template <class T>
struct Interval {
    double a, b;
    T value;
    double error;
};

// Globally adaptive integration seeded with the given breakpoints.
template <class T, class F>
QuadratureResult<T> adaptive(F&& f, const std::vector<double>& breaks,
                             double rel_tol, double abs_tol,
                             int max_intervals) {
    if (rel_tol <= 0.0 || abs_tol <= 0.0)
        throw std::domain_error("quadrature: tolerances must be positive");
    std::vector<Interval<T>> segs;
    segs.reserve(breaks.size() + 64);
    long evals = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Interval<T> s{breaks[i], breaks[i + 1], T{}, 0.0};
        if (!(s.a < s.b)) throw std::domain_error("quadrature: a < b required");
        gk15(f, s.a, s.b, s.value, s.error, evals);
        segs.push_back(s);
    }
    auto total = [&] {
        T v{};
        double e = 0.0;
        for (const auto& s : segs) {
            v += s.value;
            e += s.error;
        }
        return std::pair<T, double>(v, e);
    };
    while (true) {
        auto [v, e] = total();
        if (e <= std::max(rel_tol * err_norm(v), abs_tol))
            return {v, e, evals};
        if ((int)segs.size() >= max_intervals)
            throw ConvergenceError("quadrature: subdivision budget exhausted",
                                   std::complex<double>(0, 0) + v, e, evals);
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[worst].error) worst = i;
        Interval<T> s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        if (!(s.a < m && m < s.b))
            return {v, e, evals};  // interval at floating-point resolution
        Interval<T> left{s.a, m, T{}, 0.0}, right{m, s.b, T{}, 0.0};
        gk15(f, left.a, left.b, left.value, left.error, evals);
        gk15(f, right.a, right.b, right.value, right.error, evals);
        segs[worst] = left;
        segs.push_back(right);
    }
}

}  // namespace detail

template <class F>
auto integrate_finite(F&& f, double a, double b, double rel_tol = 1e-8,
                      double abs_tol = 1e-300, int max_intervals = 4000)
    -> QuadratureResult<std::decay_t<decltype(f(a))>> {
    using T = std::decay_t<decltype(f(a))>;
    if (!(a < b)) throw std::domain_error("integrate_finite: requires a < b");
    return detail::adaptive<T>(f, {a, b}, rel_tol, abs_tol, max_intervals);
}

// As integrate_finite, but seeds the subdivision at the given interior
// breakpoints (used for oscillatory panels and narrow resonances).
template <class F>
auto integrate_panels(F&& f, std::vector<double> breaks, double rel_tol = 1e-8,
                      double abs_tol = 1e-300, int max_intervals = 8000)
    -> QuadratureResult<std::decay_t<decltype(f(breaks.front()))>> {
    using T = std::decay_t<decltype(f(breaks.front()))>;
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (breaks.size() < 2)
        throw std::domain_error("integrate_panels: need at least two points");
    return detail::adaptive<T>(f, breaks, rel_tol, abs_tol, max_intervals);
}

// Integral over [0, inf) through the substitution x = s t/(1-t), t in [0,1),
// anchored at the decay scale s of the integrand's exponential tail.
template <class F>
auto integrate_semiinfinite(F&& f, double decay_scale, double rel_tol = 1e-8,
                            double abs_tol = 1e-300, int max_intervals = 4000)
    -> QuadratureResult<std::decay_t<decltype(f(decay_scale))>> {
    using T = std::decay_t<decltype(f(decay_scale))>;
    if (!(decay_scale > 0.0))
        throw std::domain_error("integrate_semiinfinite: decay_scale > 0");
    auto g = [&](double t) -> T {
        const double om = 1.0 - t;
        if (!(om > 1e-150)) return T{};  // tail beyond any double's support
        const double x = decay_scale * t / om;
        return f(x) * (decay_scale / (om * om));
    };
    // The Kronrod rule is open at the endpoints, so t = 1 is never sampled.
    return detail::adaptive<T>(g, {0.0, 0.5, 1.0}, rel_tol, abs_tol,
                               max_intervals);
}

struct MatsubaraOptions {
    double rel_tol = 1e-8;
    long n_max = 2000000;
    int min_terms = 8;  // terms to take before trusting the tail bound
};

// Primed Matsubara sum term(0)/2 + sum_{n>=1} term(n). Truncates when the
// geometric extrapolation of the running tail drops below rel_tol times the
// partial sum on two consecutive terms.
template <class F>
double matsubara_sum(F&& term, double T, const MatsubaraOptions& opt = {}) {
    if (!(T > 0.0)) throw std::domain_error("matsubara_sum: T must be > 0");
    double sum = 0.5 * term(0);
    double prev_mag = std::abs(sum);
    int ok_streak = 0;
    for (long n = 1; n <= opt.n_max; ++n) {
        const double t = term(n);
        if (!std::isfinite(t))
            throw std::runtime_error("matsubara_sum: non-finite term");
        sum += t;
        const double mag = std::abs(t);
        double tail = std::numeric_limits<double>::infinity();
        if (mag == 0.0 && prev_mag == 0.0) {
            tail = 0.0;
        } else if (prev_mag > 0.0) {
            const double r = mag / prev_mag;
            if (r < 0.999) tail = mag * r / (1.0 - r);
        }
        const double target =
            opt.rel_tol * std::max(std::abs(sum), 1e-300);
        ok_streak = (tail <= target) ? ok_streak + 1 : 0;
        if (n >= opt.min_terms && ok_streak >= 2) return sum;
        prev_mag = mag;
    }
    throw ConvergenceError("matsubara_sum: terms not decaying after n_max",
                           sum, prev_mag, opt.n_max);
}

// Central difference with one Richardson refinement. `scale` sets the step
// h = scale * max(|x|, scale) * cbrt(machine epsilon); for functions defined
// only at positive arguments the step is shrunk so x - h stays positive.
template <class F>
double derivative_central(F&& f, double x, double scale = 1.0) {
    if (!(scale > 0.0))
        throw std::domain_error("derivative_central: scale must be > 0");
    const double cbrt_eps =
        std::cbrt(std::numeric_limits<double>::epsilon());
    double h = scale * std::max(std::abs(x), scale) * cbrt_eps;
    if (x > 0.0 && x - h <= 0.0) h = x / 16.0;
    auto diff = [&](double step) {
        const double fp = f(x + step);
        const double fm = f(x - step);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::runtime_error(
                "derivative_central: non-finite function sample");
        return (fp - fm) / (2.0 * step);
    };
    const double d1 = diff(h);
    const double d2 = diff(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

// Central difference at x > 0 with a step proportional to x, suited to
// power-law free energies evaluated by noisy quadrature.
template <class F>
double derivative_rel_step(F&& f, double x, double rel_step = 6e-6) {
    if (!(x > 0.0))
        throw std::domain_error("derivative_rel_step: x must be > 0");
    auto diff = [&](double h) {
        const double fp = f(x * (1.0 + h));
        const double fm = f(x * (1.0 - h));
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::runtime_error(
                "derivative_rel_step: non-finite function sample");
        return (fp - fm) / (2.0 * x * h);
    };
    const double d1 = diff(rel_step);
    const double d2 = diff(0.5 * rel_step);
    return (4.0 * d2 - d1) / 3.0;
}

// Second derivative via two nested central differences with independent
// relative step scales; step sizes trade truncation against the noise of
// the underlying quadrature.
template <class F>
double second_derivative_rel_step(F&& f, double x, double inner = 2e-3,
                                  double outer = 1.5e-2) {
    auto first = [&](double y) { return derivative_rel_step(f, y, inner); };
    const double fp = first(x * (1.0 + outer));
    const double fm = first(x * (1.0 - outer));
    return (fp - fm) / (2.0 * x * outer);
}

}  // namespace polder
