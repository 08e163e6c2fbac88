#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace polyfol {

struct NearSingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OdeOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-30;
    double initial_step = 1e-2;
    double min_step = 1e-14;
    long max_steps = 200000;
};

/// Adaptive Dormand-Prince 5(4) over a fixed-size complex state.
/// rhs(t, y) -> dy/dt; an optional observer sees every accepted step.
template <std::size_t N, class Rhs, class Observer>
std::array<std::complex<double>, N> integrate_dopri5(Rhs&& rhs, double t0, double t1,
                                                     std::array<std::complex<double>, N> y,
                                                     const OdeOptions& opts, Observer&& observer) {
    using C = std::complex<double>;
    using State = std::array<C, N>;

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                            e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

    double span = t1 - t0;
    if (span == 0.0) return y;
    double direction = span > 0 ? 1.0 : -1.0;
    double t = t0;
    double h = std::min(std::abs(opts.initial_step), std::abs(span)) * direction;

    State k1 = rhs(t, y);
    for (long step = 0; step < opts.max_steps; ++step) {
        if ((t - t1) * direction >= 0.0) return y;
        if ((t + h - t1) * direction > 0.0) h = t1 - t;

        auto stage = [&](double frac, auto&&... terms) {
            State s = y;
            auto add = [&](double coef, const State& k) {
                for (std::size_t i = 0; i < N; ++i) s[i] += h * coef * k[i];
            };
            (add(terms.first, terms.second), ...);
            return rhs(t + frac * h, s);
        };
        using P = std::pair<double, const State&>;
        State k2 = stage(c2, P{a21, k1});
        State k3 = stage(c3, P{a31, k1}, P{a32, k2});
        State k4 = stage(c4, P{a41, k1}, P{a42, k2}, P{a43, k3});
        State k5 = stage(c5, P{a51, k1}, P{a52, k2}, P{a53, k3}, P{a54, k4});
        State k6 = stage(1.0, P{a61, k1}, P{a62, k2}, P{a63, k3}, P{a64, k4}, P{a65, k5});

        State y5;
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        State k7 = rhs(t + h, y5);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            C y4 = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                               e7 * k7[i]);
            double scale = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(y5[i] - y4) / scale);
        }

        if (err <= 1.0) {
            t += h;
            y = y5;
            k1 = k7;  // FSAL
            observer(t, y);
            double grow = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
        }
        if (std::abs(h) < opts.min_step)
            throw NearSingularityError("step size underflow in adaptive integration");
    }
    throw NearSingularityError("step budget exhausted in adaptive integration");
}

template <std::size_t N, class Rhs>
std::array<std::complex<double>, N> integrate_dopri5(Rhs&& rhs, double t0, double t1,
                                                     std::array<std::complex<double>, N> y0,
                                                     const OdeOptions& opts = {}) {
    return integrate_dopri5<N>(std::forward<Rhs>(rhs), t0, t1, y0, opts,
                               [](double, const std::array<std::complex<double>, N>&) {});
}

}  // namespace polyfol
