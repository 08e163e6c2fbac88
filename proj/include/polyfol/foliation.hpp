#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyfol/polynomials.hpp"

namespace polyfol {

// ---------------------------------------------------------------------------
// Degree-n foliations of the projective plane in the affine normal form
//   (P + x g) dy - (Q + y g) dx = 0,
// with g homogeneous of degree n, max(deg P, deg Q) <= n (= n when g == 0),
// and P + xg, Q + yg relatively prime.
// ---------------------------------------------------------------------------

enum class NormalFormCondition {
    CommonFactor,        // condition (1): P + xg and Q + yg share a factor
    NonHomogeneousG,     // condition (2): g not homogeneous of degree n
    DegreeBoundViolated, // condition (3): max(deg P, deg Q) > n
    DegreeMismatch,      // condition (4) or declared n above the true foliation degree
};

inline const char* to_string(NormalFormCondition c) {
    switch (c) {
        case NormalFormCondition::CommonFactor: return "CommonFactor";
        case NormalFormCondition::NonHomogeneousG: return "NonHomogeneousG";
        case NormalFormCondition::DegreeBoundViolated: return "DegreeBoundViolated";
        case NormalFormCondition::DegreeMismatch: return "DegreeMismatch";
    }
    return "?";
}

struct ValidationIssue {
    NormalFormCondition condition;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

struct ValidationError : std::runtime_error {
    ValidationError(ValidationReport rep, const std::string& what_arg)
        : std::runtime_error(what_arg), report(std::move(rep)) {}
    ValidationReport report;
};

class FoliationNormalForm;

ValidationReport validate_normal_form(const BivariatePolynomial& P, const BivariatePolynomial& Q,
                                      const BivariatePolynomial& g, int n);

class FoliationNormalForm {
public:
    /// Validates conditions (1)-(4) and the declared degree; throws ValidationError.
    static FoliationNormalForm make(BivariatePolynomial P, BivariatePolynomial Q,
                                    BivariatePolynomial g, int n) {
        ValidationReport rep = validate_normal_form(P, Q, g, n);
        if (!rep.ok) {
            std::string what = "invalid normal form:";
            for (const auto& issue : rep.issues)
                what += std::string(" ") + to_string(issue.condition) + " (" + issue.detail + ")";
            throw ValidationError(std::move(rep), what);
        }
        return FoliationNormalForm(std::move(P), std::move(Q), std::move(g), n);
    }

    const BivariatePolynomial& P() const { return p_; }
    const BivariatePolynomial& Q() const { return q_; }
    const BivariatePolynomial& g() const { return g_; }
    int declared_degree() const { return n_; }

    /// dx/dt component of the affine vector field, P + x g.
    const BivariatePolynomial& A() const { return a_; }
    /// dy/dt component, Q + y g.
    const BivariatePolynomial& B() const { return b_; }

private:
    FoliationNormalForm(BivariatePolynomial P, BivariatePolynomial Q, BivariatePolynomial g, int n)
        : p_(std::move(P)), q_(std::move(Q)), g_(std::move(g)), n_(n) {
        a_ = p_ + BivariatePolynomial::x() * g_;
        b_ = q_ + BivariatePolynomial::y() * g_;
    }
    BivariatePolynomial p_, q_, g_, a_, b_;
    int n_ = 0;
};

inline ValidationReport validate_normal_form(const BivariatePolynomial& P,
                                             const BivariatePolynomial& Q,
                                             const BivariatePolynomial& g, int n) {
    ValidationReport rep;
    auto fail = [&](NormalFormCondition c, std::string detail) {
        rep.ok = false;
        rep.issues.push_back({c, std::move(detail)});
    };
    if (n < 0) fail(NormalFormCondition::DegreeMismatch, "declared degree is negative");

    BivariatePolynomial A = P + BivariatePolynomial::x() * g;
    BivariatePolynomial B = Q + BivariatePolynomial::y() * g;
    if (A.is_zero() && B.is_zero()) {
        fail(NormalFormCondition::CommonFactor, "vector field is identically zero");
        return rep;
    }

    if (have_common_factor(A, B))
        fail(NormalFormCondition::CommonFactor, "P + xg and Q + yg share a non-constant factor");

    if (!g.is_zero() && !g.is_homogeneous(n))
        fail(NormalFormCondition::NonHomogeneousG,
             "g must be homogeneous of degree " + std::to_string(n));

    int dp = P.degree(), dq = Q.degree();
    int dmax = std::max(dp, dq);
    if (dmax > n && dmax != BivariatePolynomial::degree_neg_inf)
        fail(NormalFormCondition::DegreeBoundViolated,
             "max(deg P, deg Q) = " + std::to_string(dmax) + " exceeds n = " + std::to_string(n));

    if (g.is_zero()) {
        if (dmax != n)
            fail(NormalFormCondition::DegreeMismatch,
                 "g == 0 requires max(deg P, deg Q) = n, got " +
                     (dmax == BivariatePolynomial::degree_neg_inf ? std::string("-inf")
                                                                  : std::to_string(dmax)));
        else {
            // radial top part y*P_n - x*Q_n == 0 drops the generic tangency
            // degree below n, so n would overstate the foliation degree
            BivariatePolynomial pn = P.homogeneous_component(n);
            BivariatePolynomial qn = Q.homogeneous_component(n);
            BivariatePolynomial radial_test =
                BivariatePolynomial::y() * pn - BivariatePolynomial::x() * qn;
            if (radial_test.is_zero())
                fail(NormalFormCondition::DegreeMismatch,
                     "top-degree parts are radial; generic tangency degree is below n");
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Lines and tangency polynomials.
// ---------------------------------------------------------------------------

/// Affine line (x, y) = base + t * dir with exact rational data.
struct Line {
    RationalComplex base_x, base_y;
    RationalComplex dir_x, dir_y;
};

struct InvariantLineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial in the line parameter whose roots are the tangency points of F
/// with the line. Throws InvariantLineError when it vanishes identically.
inline UPoly tangency_polynomial(const FoliationNormalForm& f, const Line& line) {
    if (line.dir_x.is_zero() && line.dir_y.is_zero())
        throw std::domain_error("line has zero direction");
    // tangency where the field (A, B) is parallel to dir: A*dy - B*dx = 0 on the line
    UPoly on_line = (line.dir_y * f.A().restrict_to_line(line.base_x, line.base_y, line.dir_x, line.dir_y)) -
                    (line.dir_x * f.B().restrict_to_line(line.base_x, line.base_y, line.dir_x, line.dir_y));
    if (on_line.is_zero()) throw InvariantLineError("line is invariant by the foliation");
    return on_line;
}

/// Tangency degree of F with >= 'samples' deterministic rational lines; all
/// non-invariant sampled lines must agree, otherwise nullopt.
inline std::optional<int> generic_tangency_degree(const FoliationNormalForm& f, int samples = 5) {
    // small deterministic pool of lines in general position
    static const long bases[][4] = {
        {1, 2, 3, 1},   {2, -1, 1, 3},  {-3, 1, 2, 5},  {5, 7, -1, 2},  {1, -4, 3, -2},
        {-2, 3, 4, 1},  {7, 1, -2, 3},  {3, 5, 5, -4},  {-1, -1, 1, 7}, {4, -3, 6, 5},
    };
    std::optional<int> deg;
    int seen = 0;
    for (const auto& b : bases) {
        Line line{RationalComplex(b[0]), RationalComplex(b[1]), RationalComplex(b[2]),
                  RationalComplex(b[3])};
        try {
            UPoly t = tangency_polynomial(f, line);
            if (!deg) deg = t.degree();
            if (*deg != t.degree()) return std::nullopt;
            if (++seen >= samples) break;
        } catch (const InvariantLineError&) {
            continue;
        }
    }
    return seen >= samples ? deg : std::nullopt;
}

/// The degree of the foliation: the generic tangency count, cross-checked
/// against the declared n.
inline int degree(const FoliationNormalForm& f) {
    std::optional<int> d = generic_tangency_degree(f);
    if (!d || *d != f.declared_degree())
        throw std::logic_error("declared degree does not match generic tangency degree");
    return f.declared_degree();
}

// ---------------------------------------------------------------------------
// The chart at infinity: u = 1/x, v = y/x.
// ---------------------------------------------------------------------------

enum class ChartId { Affine, Infinity };

/// Polynomial vector field generating the foliation near L_inf = {u = 0},
/// with the common monomial factor removed.
struct ChartField {
    BivariatePolynomial u_component;  // du/dt
    BivariatePolynomial v_component;  // dv/dt
    int removed_u_power = 0;
    int removed_v_power = 0;
};

inline ChartField infinity_chart(const BivariatePolynomial& A, const BivariatePolynomial& B, int n) {
    // u' = -u^2 A(1/u, v/u), v' = u (B - vA)(1/u, v/u), cleared by u^{n+1}
    int d = n + 1;
    int da = A.is_zero() ? 0 : A.degree();
    int db = B.is_zero() ? 0 : B.degree();
    if (da > d || db > d) throw std::domain_error("field degree exceeds n + 1");
    BivariatePolynomial a_hat = A.hat_transform(d);
    BivariatePolynomial b_hat = B.hat_transform(d);
    BivariatePolynomial u = BivariatePolynomial::x();  // chart variable u
    BivariatePolynomial v = BivariatePolynomial::y();  // chart variable v
    ChartField cf;
    cf.u_component = RationalComplex(-1) * (u * a_hat);
    cf.v_component = b_hat - v * a_hat;
    if (cf.u_component.is_zero() && cf.v_component.is_zero()) return cf;
    int pu = std::min(cf.u_component.is_zero() ? std::numeric_limits<int>::max() : cf.u_component.min_power_x(),
                      cf.v_component.is_zero() ? std::numeric_limits<int>::max() : cf.v_component.min_power_x());
    int pv = std::min(cf.u_component.is_zero() ? std::numeric_limits<int>::max() : cf.u_component.min_power_y(),
                      cf.v_component.is_zero() ? std::numeric_limits<int>::max() : cf.v_component.min_power_y());
    if (pu > 0) {
        if (!cf.u_component.is_zero()) cf.u_component = cf.u_component.shift_down_x(pu);
        if (!cf.v_component.is_zero()) cf.v_component = cf.v_component.shift_down_x(pu);
        cf.removed_u_power = pu;
    }
    if (pv > 0) {
        if (!cf.u_component.is_zero()) cf.u_component = cf.u_component.transpose().shift_down_x(pv).transpose();
        if (!cf.v_component.is_zero()) cf.v_component = cf.v_component.transpose().shift_down_x(pv).transpose();
        cf.removed_v_power = pv;
    }
    return cf;
}

inline ChartField infinity_chart(const FoliationNormalForm& f) {
    return infinity_chart(f.A(), f.B(), f.declared_degree());
}

/// True iff u divides the du-component of the reduced chart field, i.e. the
/// line at infinity is invariant.
inline bool is_line_at_infinity_invariant(const FoliationNormalForm& f) {
    ChartField cf = infinity_chart(f);
    return cf.u_component.is_zero() || cf.u_component.divisible_by_x();
}

}  // namespace polyfol
