#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "polyfol/polynomials.hpp"

namespace polyfol {

/// All complex roots of a univariate polynomial (double precision), by the
/// Durand-Kerner iteration with a Newton polish. Deterministic start points.
inline std::vector<std::complex<double>> polynomial_roots(const UPoly& p, double tol = 1e-13,
                                                          int max_iter = 400) {
    using C = std::complex<double>;
    int deg = p.degree();
    if (deg <= 0) return {};
    std::vector<C> a(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) a[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].to_complex();
    C lead = a.back();
    for (auto& v : a) v /= lead;

    auto eval_monic = [&](C z) {
        C acc = 0.0;
        for (int i = deg; i >= 0; --i) acc = acc * z + a[static_cast<std::size_t>(i)];
        return acc;
    };

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]));
    radius = 1.0 + radius;

    std::vector<C> z(static_cast<std::size_t>(deg));
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < deg; ++k) {
        double theta = 2.0 * pi * (static_cast<double>(k) + 0.25) / static_cast<double>(deg) + 0.7;
        z[static_cast<std::size_t>(k)] = radius * C(std::cos(theta), std::sin(theta));
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < deg; ++k) {
            C num = eval_monic(z[static_cast<std::size_t>(k)]);
            C den = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != k) den *= (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            if (std::abs(den) < 1e-300) continue;
            C step = num / den;
            z[static_cast<std::size_t>(k)] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < tol * std::max(1.0, radius)) break;
    }

    // Newton polish against the original (non-monic) polynomial
    UPoly dp = p.derivative();
    for (auto& root : z) {
        for (int it = 0; it < 8; ++it) {
            C f = p.eval(root);
            C df = dp.eval(root);
            if (std::abs(df) < 1e-300) break;
            C step = f / df;
            root -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(root))) break;
        }
    }

    std::sort(z.begin(), z.end(), [](const C& l, const C& r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    return z;
}

}  // namespace polyfol
