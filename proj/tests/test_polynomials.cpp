#include <catch2/catch_amalgamated.hpp>

#include "polyfol/polynomials.hpp"
#include "polyfol/roots.hpp"

using namespace polyfol;

namespace {

BivariatePolynomial from_terms(std::initializer_list<std::tuple<int, int, long, long>> terms) {
    BivariatePolynomial p;
    for (const auto& [i, j, re, im] : terms) p.set(i, j, RationalComplex(re, im));
    return p;
}

}  // namespace

TEST_CASE("univariate division and gcd") {
    // x^2 - 1 = (x - 1)(x + 1)
    UPoly p({RationalComplex(-1), RationalComplex(0), RationalComplex(1)});
    UPoly d({RationalComplex(-1), RationalComplex(1)});
    auto [q, r] = p.divmod(d);
    CHECK(r.is_zero());
    CHECK(q == UPoly({RationalComplex(1), RationalComplex(1)}));

    CHECK(gcd(p, d) == d.monic());
    CHECK(is_squarefree(p));

    UPoly sq = d * d;
    CHECK_FALSE(is_squarefree(sq));
}

TEST_CASE("bivariate basics") {
    BivariatePolynomial zero;
    CHECK(zero.degree() == BivariatePolynomial::degree_neg_inf);

    auto p = from_terms({{1, 0, 1, 0}, {0, 1, 0, 1}});  // x + i y
    CHECK(p.degree() == 1);
    CHECK((p * p).coeff(2, 0) == RationalComplex(1));
    CHECK((p * p).coeff(1, 1) == RationalComplex(0, 2));
    CHECK((p * p).coeff(0, 2) == RationalComplex(-1));
    CHECK((p - p).is_zero());

    // storing an explicit zero keeps the map canonical
    BivariatePolynomial q;
    q.set(3, 2, RationalComplex(5));
    q.set(3, 2, RationalComplex(0));
    CHECK(q.is_zero());

    CHECK(p.is_homogeneous(1));
    auto h = from_terms({{2, 0, 1, 0}, {0, 0, 1, 0}});
    CHECK_FALSE(h.is_homogeneous(2));
    CHECK(h.homogeneous_component(2) == from_terms({{2, 0, 1, 0}}));
}

TEST_CASE("restriction to a line") {
    // p = x^2 + y on (x, y) = (1, 2) + t (3, 5): (1 + 3t)^2 + (2 + 5t)
    auto p = from_terms({{2, 0, 1, 0}, {0, 1, 1, 0}});
    UPoly rest = p.restrict_to_line(RationalComplex(1), RationalComplex(2), RationalComplex(3),
                                    RationalComplex(5));
    CHECK(rest == UPoly({RationalComplex(3), RationalComplex(11), RationalComplex(9)}));
}

TEST_CASE("hat transform") {
    // u^2 * p(1/u, v/u) for p = x + y^2: u + v^2
    auto p = from_terms({{1, 0, 1, 0}, {0, 2, 1, 0}});
    auto hat = p.hat_transform(2);
    CHECK(hat == from_terms({{1, 0, 1, 0}, {0, 2, 1, 0}}));

    // p = x y: u^2 * (1/u)(v/u) = v
    auto q = from_terms({{1, 1, 1, 0}});
    CHECK(q.hat_transform(2) == from_terms({{0, 1, 1, 0}}));
}

TEST_CASE("common factor detection is exact") {
    auto x = BivariatePolynomial::x();
    auto y = BivariatePolynomial::y();

    CHECK(have_common_factor(x * x, x * y));
    CHECK_FALSE(have_common_factor(x, RationalComplex(0, 2) * y));

    // (x + y)(x - 1) vs (x + y)(y + 2)
    auto s = x + y;
    auto a = s * (x - BivariatePolynomial::constant(RationalComplex(1)));
    auto b = s * (y + BivariatePolynomial::constant(RationalComplex(2)));
    CHECK(have_common_factor(a, b));

    // coprime pair with full bidegree
    auto c = y + x * x * x + x * y * y;
    auto d = x + x * x * y + y * y * y;
    CHECK_FALSE(have_common_factor(c, d));

    // pure-x common factor hidden in the contents
    auto e = x * (y + BivariatePolynomial::constant(RationalComplex(1)));
    auto f = x * (y * y + BivariatePolynomial::constant(RationalComplex(3)));
    CHECK(have_common_factor(e, f));
}

TEST_CASE("resultant in y") {
    auto x = BivariatePolynomial::x();
    auto y = BivariatePolynomial::y();

    // Res_y(y - x, y + x) = 2x up to sign convention: vanishes exactly at x = 0
    auto r = resultant_y(y - x, y + x);
    REQUIRE(r.degree() == 1);
    CHECK(r.eval(RationalComplex(0)).is_zero());
    CHECK_FALSE(r.eval(RationalComplex(1)).is_zero());

    // identical vanishing for polynomials with a common y-positive factor
    auto s = (y - x) * (y + BivariatePolynomial::constant(RationalComplex(5)));
    auto t = (y - x) * (x + BivariatePolynomial::constant(RationalComplex(1)) + y);
    CHECK(resultant_y(s, t).is_zero());

    // deg_y = 0 on one side: power of the univariate
    auto u = x * x - BivariatePolynomial::constant(RationalComplex(1));
    auto v = y;
    UPoly res = resultant_y(u, v);
    CHECK(res.degree() == 2);
    CHECK(res.eval(RationalComplex(1)).is_zero());
    CHECK(res.eval(RationalComplex(-1)).is_zero());
}

TEST_CASE("numeric univariate roots") {
    // (z - 1)(z - 2i)(z + 3)
    UPoly p = UPoly({RationalComplex(-1), RationalComplex(1)}) *
              UPoly({RationalComplex(0, -2), RationalComplex(1)}) *
              UPoly({RationalComplex(3), RationalComplex(1)});
    auto roots = polynomial_roots(p);
    REQUIRE(roots.size() == 3);
    auto near = [&](std::complex<double> w) {
        for (const auto& r : roots)
            if (std::abs(r - w) < 1e-10) return true;
        return false;
    };
    CHECK(near({1.0, 0.0}));
    CHECK(near({0.0, 2.0}));
    CHECK(near({-3.0, 0.0}));
}
