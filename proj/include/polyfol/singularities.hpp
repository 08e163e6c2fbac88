#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "polyfol/foliation.hpp"
#include "polyfol/roots.hpp"

namespace polyfol {

struct Singularity {
    ChartId chart = ChartId::Affine;
    std::complex<double> loc1, loc2;          // (x, y) or (u, v)
    std::complex<double> eig1, eig2;          // Jacobian eigenvalues
    std::complex<double> lambda, lambda_inv;  // both eigenvalue ratios
    double residual = 0.0;
    bool multiple_root = false;
};

struct SingularityClass {
    bool non_degenerate = false;
    bool hyperbolic = false;
    bool reduced = false;
    bool saddle_type = false;
    bool flags_defined = true;  // false when the Jacobian is degenerate
    std::string note;
};

struct ClassifyPolicy {
    double im_tol = 1e-10;          // |Im lambda| below this counts as real
    double degenerate_tol = 1e-10;  // eigenvalue magnitude below this counts as zero
    long long rational_qmax = 1000000;
    double rational_tol = 1e-10;
};

/// Flags per the lambda tests; hyperbolic => saddle_type and reduced by construction.
inline SingularityClass classify_singularity(const Singularity& s, const ClassifyPolicy& policy = {}) {
    SingularityClass out;
    double m1 = std::abs(s.eig1), m2 = std::abs(s.eig2);
    if (m1 <= policy.degenerate_tol && m2 <= policy.degenerate_tol) {
        out.non_degenerate = false;
        out.flags_defined = false;
        out.note = "DegenerateJacobian: both eigenvalues below tolerance";
        return out;
    }
    out.non_degenerate = m1 > policy.degenerate_tol && m2 > policy.degenerate_tol;
    if (!out.non_degenerate) {
        out.flags_defined = false;
        out.note = "DegenerateJacobian: one eigenvalue below tolerance";
        return out;
    }
    std::complex<double> lambda = s.lambda;
    bool real_like = std::abs(lambda.imag()) <= policy.im_tol;
    out.hyperbolic = !real_like;
    bool rational_positive = false;
    if (real_like && lambda.real() > 0) {
        auto rec = reconstruct_rational(lambda.real(), policy.rational_qmax, policy.rational_tol);
        if (rec.found && rec.num > 0) {
            rational_positive = true;
            out.note = "lambda within tolerance of " + std::to_string(rec.num) + "/" +
                       std::to_string(rec.den) + "; classified in Q+";
        }
    }
    out.reduced = !rational_positive;
    out.saddle_type = out.hyperbolic || (real_like && lambda.real() < -policy.im_tol);
    return out;
}

// ---------------------------------------------------------------------------
// Affine singularity scan: multistart Newton over a region of C^2.
// ---------------------------------------------------------------------------

/// Product of two complex rectangles, one per affine coordinate.
struct RegionC2 {
    double x_re_min = -2, x_re_max = 2, x_im_min = -2, x_im_max = 2;
    double y_re_min = -2, y_re_max = 2, y_im_min = -2, y_im_max = 2;
    bool contains(const std::complex<double>& x, const std::complex<double>& y,
                  double slack = 1e-9) const {
        return x.real() >= x_re_min - slack && x.real() <= x_re_max + slack &&
               x.imag() >= x_im_min - slack && x.imag() <= x_im_max + slack &&
               y.real() >= y_re_min - slack && y.real() <= y_re_max + slack &&
               y.imag() >= y_im_min - slack && y.imag() <= y_im_max + slack;
    }
};

struct AffineScanDiagnostics {
    int seeds = 0;
    int converged = 0;
    int failed = 0;       // SolverDidNotConverge, per seed (non-fatal)
    int out_of_region = 0;
};

struct AffineScanResult {
    std::vector<Singularity> singularities;
    AffineScanDiagnostics diagnostics;
};

namespace detail {

inline double halton(unsigned index, unsigned base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

inline void eigen2(const std::complex<double>& a, const std::complex<double>& b,
                   const std::complex<double>& c, const std::complex<double>& d,
                   std::complex<double>& e1, std::complex<double>& e2) {
    std::complex<double> tr = a + d;
    std::complex<double> det = a * d - b * c;
    std::complex<double> disc = std::sqrt(tr * tr - 4.0 * det);
    e1 = 0.5 * (tr + disc);
    e2 = 0.5 * (tr - disc);
    if (std::abs(e1) < std::abs(e2)) std::swap(e1, e2);  // |e1| >= |e2|
}

}  // namespace detail

/// All zeros of (A, B) in the region found by multistart Newton from a
/// deterministic low-discrepancy seed grid, deduplicated and sorted.
inline AffineScanResult affine_singularities(const FoliationNormalForm& f, const RegionC2& region = {},
                                             int grid = 32, double tol = 1e-12) {
    using C = std::complex<double>;
    AffineScanResult out;
    const BivariatePolynomial& A = f.A();
    const BivariatePolynomial& B = f.B();
    BivariatePolynomial Ax = A.partial_x(), Ay = A.partial_y();
    BivariatePolynomial Bx = B.partial_x(), By = B.partial_y();

    auto field_norm = [&](const C& x, const C& y) {
        return std::max(std::abs(A.eval(x, y)), std::abs(B.eval(x, y)));
    };

    int seeds = grid * grid;
    out.diagnostics.seeds = seeds;
    std::vector<Singularity> found;
    for (int s = 0; s < seeds; ++s) {
        unsigned idx = static_cast<unsigned>(s) + 1;
        C x(region.x_re_min + (region.x_re_max - region.x_re_min) * detail::halton(idx, 2),
            region.x_im_min + (region.x_im_max - region.x_im_min) * detail::halton(idx, 3));
        C y(region.y_re_min + (region.y_re_max - region.y_re_min) * detail::halton(idx, 5),
            region.y_im_min + (region.y_im_max - region.y_im_min) * detail::halton(idx, 7));
        bool converged = false;
        for (int it = 0; it < 60; ++it) {
            C fa = A.eval(x, y), fb = B.eval(x, y);
            if (std::max(std::abs(fa), std::abs(fb)) < tol) {
                converged = true;
                break;
            }
            C j11 = Ax.eval(x, y), j12 = Ay.eval(x, y);
            C j21 = Bx.eval(x, y), j22 = By.eval(x, y);
            C det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-300) break;
            C dx = (fa * j22 - fb * j12) / det;
            C dy = (fb * j11 - fa * j21) / det;
            x -= dx;
            y -= dy;
            if (std::abs(dx) + std::abs(dy) > 1e8) break;  // diverging
        }
        if (!converged || field_norm(x, y) > tol) {
            ++out.diagnostics.failed;
            continue;
        }
        if (!region.contains(x, y, 1e-6)) {
            ++out.diagnostics.out_of_region;
            continue;
        }
        ++out.diagnostics.converged;
        double scale = 1.0 + std::abs(x) + std::abs(y);
        bool duplicate = false;
        for (const auto& k : found)
            if (std::abs(k.loc1 - x) + std::abs(k.loc2 - y) < 1e-8 * scale) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        Singularity sing;
        sing.chart = ChartId::Affine;
        sing.loc1 = x;
        sing.loc2 = y;
        detail::eigen2(Ax.eval(x, y), Ay.eval(x, y), Bx.eval(x, y), By.eval(x, y), sing.eig1, sing.eig2);
        sing.lambda = std::abs(sing.eig1) > 0 ? sing.eig2 / sing.eig1 : C(0);  // |lambda| <= 1
        sing.lambda_inv = std::abs(sing.eig2) > 0 ? sing.eig1 / sing.eig2 : C(0);
        sing.residual = field_norm(x, y);
        found.push_back(sing);
    }
    std::sort(found.begin(), found.end(), [](const Singularity& l, const Singularity& r) {
        if (l.loc1.real() != r.loc1.real()) return l.loc1.real() < r.loc1.real();
        if (l.loc1.imag() != r.loc1.imag()) return l.loc1.imag() < r.loc1.imag();
        if (l.loc2.real() != r.loc2.real()) return l.loc2.real() < r.loc2.real();
        return l.loc2.imag() < r.loc2.imag();
    });
    out.singularities = std::move(found);
    return out;
}

// ---------------------------------------------------------------------------
// Singularities on the line at infinity.
// ---------------------------------------------------------------------------

struct LineNotInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfinitySingularityReport {
    std::vector<Singularity> singularities;
    bool squarefree = true;      // exact check on the restricted polynomial
    bool degree_drop = false;    // a singularity sits at the chart's missing point
    int restricted_degree = 0;   // degree of the chart field restricted to {u=0}
    UPoly restricted;            // that polynomial (in v)
};

/// Roots of the chart field restricted to {u = 0}; characteristic numbers are
/// taken transverse-over-tangent with respect to the invariant line.
inline InfinitySingularityReport singularities_at_infinity(const FoliationNormalForm& f,
                                                           double tol = 1e-12) {
    using C = std::complex<double>;
    if (!is_line_at_infinity_invariant(f))
        throw LineNotInvariantError("L_inf is not invariant; no well-defined restriction");
    ChartField cf = infinity_chart(f);
    InfinitySingularityReport rep;
    rep.restricted = cf.v_component.eval_x(RationalComplex(0));
    rep.restricted_degree = rep.restricted.degree();
    rep.degree_drop = rep.restricted_degree < f.declared_degree() + 1;
    rep.squarefree = is_squarefree(rep.restricted);

    BivariatePolynomial uu = cf.u_component.partial_x();
    BivariatePolynomial uv = cf.u_component.partial_y();
    BivariatePolynomial vu = cf.v_component.partial_x();
    BivariatePolynomial vv = cf.v_component.partial_y();
    UPoly dphi = rep.restricted.derivative();

    std::vector<C> roots = polynomial_roots(rep.restricted);
    for (const C& v : roots) {
        // one Newton polish pass on the restriction
        C vr = v;
        for (int it = 0; it < 4; ++it) {
            C fv = rep.restricted.eval(vr), dv = dphi.eval(vr);
            if (std::abs(dv) < 1e-300) break;
            vr -= fv / dv;
        }
        Singularity s;
        s.chart = ChartId::Infinity;
        s.loc1 = C(0.0);
        s.loc2 = vr;
        C zero(0.0);
        C j11 = uu.eval(zero, vr), j12 = uv.eval(zero, vr);
        C j21 = vu.eval(zero, vr), j22 = vv.eval(zero, vr);
        detail::eigen2(j11, j12, j21, j22, s.eig1, s.eig2);
        // transverse eigenvalue is the u-eigenvalue j11 (j12 = 0 on an invariant line)
        C e_transverse = j11;
        C e_tangent = j22;
        s.eig1 = e_transverse;
        s.eig2 = e_tangent;
        s.lambda = std::abs(e_tangent) > 0 ? e_transverse / e_tangent : C(0);
        s.lambda_inv = std::abs(e_transverse) > 0 ? e_tangent / e_transverse : C(0);
        s.residual = std::max(std::abs(cf.u_component.eval(zero, vr)),
                              std::abs(cf.v_component.eval(zero, vr)));
        s.multiple_root = !rep.squarefree && std::abs(dphi.eval(vr)) < 1e-6;
        rep.singularities.push_back(s);
    }
    // collapse numerically coincident roots of a non-squarefree restriction
    std::vector<Singularity> dedup;
    for (const auto& s : rep.singularities) {
        bool dup = false;
        for (auto& k : dedup)
            if (std::abs(k.loc2 - s.loc2) < 1e-8 * (1.0 + std::abs(s.loc2))) {
                k.multiple_root = true;
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(s);
    }
    rep.singularities = std::move(dedup);
    std::sort(rep.singularities.begin(), rep.singularities.end(),
              [](const Singularity& l, const Singularity& r) {
                  if (l.loc2.real() != r.loc2.real()) return l.loc2.real() < r.loc2.real();
                  return l.loc2.imag() < r.loc2.imag();
              });
    (void)tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Class membership: S(n), T(n), X(n), H(n).
// ---------------------------------------------------------------------------

struct ClassMembershipReport {
    bool in_S = false;
    bool in_T = false;
    bool in_X = false;
    bool in_H = false;
    bool below_paper_regime = false;  // n < 2
    std::vector<Singularity> affine;
    std::vector<Singularity> at_infinity;
    std::vector<SingularityClass> affine_classes;
    std::vector<SingularityClass> infinity_classes;
    std::string note;  // membership is relative to the scanned affine region
};

inline ClassMembershipReport class_membership(const FoliationNormalForm& f, const RegionC2& region = {},
                                              int grid = 32, double tol = 1e-12,
                                              const ClassifyPolicy& policy = {}) {
    ClassMembershipReport rep;
    rep.below_paper_regime = f.declared_degree() < 2;
    rep.note = "affine scan restricted to the given region; S/T verdicts are relative to it";

    AffineScanResult scan = affine_singularities(f, region, grid, tol);
    rep.affine = scan.singularities;
    rep.in_X = is_line_at_infinity_invariant(f);
    if (rep.in_X) {
        InfinitySingularityReport inf = singularities_at_infinity(f, tol);
        rep.at_infinity = inf.singularities;
    }

    bool all_nondeg = true, all_reduced = true, inf_hyperbolic = true;
    for (const auto& s : rep.affine) {
        SingularityClass c = classify_singularity(s, policy);
        all_nondeg = all_nondeg && c.non_degenerate;
        all_reduced = all_reduced && c.flags_defined && c.reduced;
        rep.affine_classes.push_back(std::move(c));
    }
    for (const auto& s : rep.at_infinity) {
        SingularityClass c = classify_singularity(s, policy);
        all_nondeg = all_nondeg && c.non_degenerate;
        all_reduced = all_reduced && c.flags_defined && c.reduced;
        inf_hyperbolic = inf_hyperbolic && c.flags_defined && c.hyperbolic;
        rep.infinity_classes.push_back(std::move(c));
    }
    rep.in_S = all_nondeg;
    rep.in_T = rep.in_S && all_reduced;
    rep.in_H = rep.in_T && rep.in_X && inf_hyperbolic;
    return rep;
}

}  // namespace polyfol
