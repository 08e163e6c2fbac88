#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "polyfol/foliation.hpp"

using namespace polyfol;

namespace {

BivariatePolynomial bp(std::initializer_list<std::tuple<int, int, long, long>> terms) {
    BivariatePolynomial p;
    for (const auto& [i, j, re, im] : terms) p.set(i, j, RationalComplex(re, im));
    return p;
}

// linear saddle x dy - lambda y dx with lambda = 2i
FoliationNormalForm linear_saddle() {
    return FoliationNormalForm::make(bp({{1, 0, 1, 0}}), bp({{0, 1, 0, 2}}), {}, 1);
}

// P = y, Q = x, g = x^2 + y^2 (degree 2, L_inf not invariant)
FoliationNormalForm quadratic_with_g() {
    return FoliationNormalForm::make(bp({{0, 1, 1, 0}}), bp({{1, 0, 1, 0}}),
                                     bp({{2, 0, 1, 0}, {0, 2, 1, 0}}), 2);
}

}  // namespace

TEST_CASE("validate_normal_form accepts and rejects per conditions (1)-(4)") {
    CHECK_NOTHROW(linear_saddle());
    CHECK_NOTHROW(quadratic_with_g());

    // common factor x between P = x^2 and Q = x y
    auto rep = validate_normal_form(bp({{2, 0, 1, 0}}), bp({{1, 1, 1, 0}}), {}, 2);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues.front().condition == NormalFormCondition::CommonFactor);

    // g not homogeneous of the declared degree
    rep = validate_normal_form(bp({{0, 1, 1, 0}}), bp({{1, 0, 1, 0}}),
                               bp({{1, 0, 1, 0}, {0, 2, 1, 0}}), 2);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues.front().condition == NormalFormCondition::NonHomogeneousG);

    // degree bound: deg P = 3 > n = 2
    rep = validate_normal_form(bp({{3, 0, 1, 0}}), bp({{0, 1, 1, 0}}), {}, 2);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues.front().condition == NormalFormCondition::DegreeBoundViolated);

    // g == 0 and max degree below n
    rep = validate_normal_form(bp({{1, 0, 1, 0}}), bp({{0, 1, 1, 0}}), {}, 2);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues.front().condition == NormalFormCondition::DegreeMismatch);

    // radial top part: the radial pencil written with n = 1 overstates the degree
    rep = validate_normal_form(bp({{1, 0, 1, 0}}), bp({{0, 1, 1, 0}}), {}, 1);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues.front().condition == NormalFormCondition::DegreeMismatch);

    // the same pencil in its degree-0 form (P = Q = 0, g = 1) is valid
    CHECK(validate_normal_form({}, {}, bp({{0, 0, 1, 0}}), 0).ok);

    // zero field
    rep = validate_normal_form({}, {}, {}, 0);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues.front().condition == NormalFormCondition::CommonFactor);
}

TEST_CASE("degree equals the generic tangency count") {
    CHECK(degree(linear_saddle()) == 1);
    CHECK(degree(quadratic_with_g()) == 2);

    // property: the tangency degree is the same across many non-invariant lines
    auto f = quadratic_with_g();
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> pick(-9, 9);
    int agreed = 0;
    for (int trial = 0; trial < 24 && agreed < 8; ++trial) {
        Line line{RationalComplex(pick(rng), pick(rng)), RationalComplex(pick(rng), pick(rng)),
                  RationalComplex(pick(rng), pick(rng)), RationalComplex(pick(rng), pick(rng))};
        if (line.dir_x.is_zero() && line.dir_y.is_zero()) continue;
        try {
            CHECK(tangency_polynomial(f, line).degree() <= 2);
            if (tangency_polynomial(f, line).degree() == 2) ++agreed;
        } catch (const InvariantLineError&) {
        }
    }
    CHECK(agreed >= 8);
}

TEST_CASE("tangency polynomial of the linear saddle on y = x + 1") {
    // hand substitution dy = dx into the 1-form gives root t = lambda/(1 - lambda)
    auto f = linear_saddle();
    Line line{RationalComplex(0), RationalComplex(1), RationalComplex(1), RationalComplex(1)};
    UPoly t = tangency_polynomial(f, line);
    REQUIRE(t.degree() == 1);
    RationalComplex lambda(0, 2);
    RationalComplex root = (RationalComplex(0) - t[0]) / t[1];
    CHECK(root == lambda / (RationalComplex(1) - lambda));
}

TEST_CASE("line through the singularity in an eigendirection is invariant") {
    auto f = linear_saddle();
    Line eigenline{RationalComplex(0), RationalComplex(0), RationalComplex(1), RationalComplex(0)};
    CHECK_THROWS_AS(tangency_polynomial(f, eigenline), InvariantLineError);
}

TEST_CASE("infinity chart of the radial pencil") {
    // A = x, B = y (the radial field): reduced chart field is (-1, 0), so
    // {u = 0} is not invariant
    ChartField cf = infinity_chart(bp({{1, 0, 1, 0}}), bp({{0, 1, 1, 0}}), 1);
    CHECK(cf.removed_u_power == 2);
    CHECK(cf.u_component == bp({{0, 0, -1, 0}}));
    CHECK(cf.v_component.is_zero());
    CHECK_FALSE(cf.u_component.divisible_by_x());
}

TEST_CASE("infinity chart coherence with the affine field") {
    // direction fields from the two charts are parallel on the overlap
    auto f = quadratic_with_g();
    ChartField cf = infinity_chart(f);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        std::complex<double> x(coord(rng), coord(rng));
        std::complex<double> y(coord(rng), coord(rng));
        if (std::abs(x) < 0.3) continue;
        std::complex<double> a = f.A().eval(x, y), b = f.B().eval(x, y);
        std::complex<double> u = 1.0 / x, v = y / x;
        // pushforward of (a, b): du = -a/x^2, dv = (x b - y a)/x^2
        std::complex<double> du = -a / (x * x);
        std::complex<double> dv = (x * b - y * a) / (x * x);
        std::complex<double> cu = cf.u_component.eval(u, v);
        std::complex<double> cv = cf.v_component.eval(u, v);
        double scale = std::abs(du) * std::abs(cv) + std::abs(dv) * std::abs(cu) + 1e-300;
        CHECK(std::abs(du * cv - dv * cu) / scale < 1e-9);
    }
}

TEST_CASE("line at infinity invariance decided by chart divisibility") {
    // g != 0: not invariant (the paper leaves the convention unstated; the
    // chart divisibility test decides)
    CHECK_FALSE(is_line_at_infinity_invariant(quadratic_with_g()));

    // horizontal pencil dy = 0: the pencil base point lies on L_inf, which is
    // therefore a leaf
    auto horizontal = FoliationNormalForm::make(bp({{0, 0, 1, 0}}), {}, {}, 0);
    CHECK(is_line_at_infinity_invariant(horizontal));

    // linear saddle: every linear field leaves L_inf invariant
    CHECK(is_line_at_infinity_invariant(linear_saddle()));

    // radial pencil (g = 1): leaves cross L_inf transversally
    auto radial = FoliationNormalForm::make({}, {}, bp({{0, 0, 1, 0}}), 0);
    CHECK_FALSE(is_line_at_infinity_invariant(radial));
}

TEST_CASE("invariance agrees with the tangency criterion on L_inf") {
    // the restriction of the chart field's u-component to {u = 0} is the
    // tangency polynomial of L_inf; it vanishes identically iff invariant
    auto check_agreement = [](const FoliationNormalForm& f) {
        ChartField cf = infinity_chart(f);
        bool tangency_vanishes = cf.u_component.eval_x(RationalComplex(0)).is_zero();
        CHECK(tangency_vanishes == is_line_at_infinity_invariant(f));
    };
    check_agreement(linear_saddle());
    check_agreement(quadratic_with_g());
    check_agreement(FoliationNormalForm::make(bp({{0, 0, 1, 0}}), {}, {}, 0));
    check_agreement(FoliationNormalForm::make({}, {}, bp({{0, 0, 1, 0}}), 0));
}
