#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyfol/rational.hpp"

namespace polyfol {

// ---------------------------------------------------------------------------
// Univariate polynomials over the Gaussian rationals.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<RationalComplex> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UPoly constant(RationalComplex v) { return UPoly({std::move(v)}); }
    static UPoly variable() { return UPoly({RationalComplex(0), RationalComplex(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const RationalComplex& operator[](std::size_t i) const {
        static const RationalComplex zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<RationalComplex>& coeffs() const { return c_; }

    RationalComplex leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    RationalComplex eval(const RationalComplex& x) const {
        RationalComplex acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    std::complex<double> eval(const std::complex<double>& x) const {
        std::complex<double> acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<RationalComplex> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * RationalComplex(static_cast<long>(i));
        return UPoly(std::move(d));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<RationalComplex> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<RationalComplex> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<RationalComplex> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const RationalComplex& s, const UPoly& p) {
        if (s.is_zero()) return {};
        std::vector<RationalComplex> r = p.c_;
        for (auto& v : r) v *= s;
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly monic() const {
        if (is_zero()) return {};
        return inverse(leading()) * (*this);
    }

    /// Field division: returns {quotient, remainder}.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UPoly r = *this;
        std::vector<RationalComplex> q(std::max<int>(0, degree() - d.degree() + 1));
        RationalComplex lead_inv = inverse(d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            RationalComplex factor = r.leading() * lead_inv;
            q[static_cast<std::size_t>(shift)] = factor;
            // r -= factor * x^shift * d
            std::vector<RationalComplex> rc = r.c_;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rc[i + static_cast<std::size_t>(shift)] -= factor * d.c_[i];
            r = UPoly(std::move(rc));
        }
        return {UPoly(std::move(q)), r};
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RationalComplex> c_;
};

/// Monic gcd by the Euclidean algorithm over Q(i).
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool is_squarefree(const UPoly& p) {
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over the Gaussian rationals.
// ---------------------------------------------------------------------------

/// Sparse bivariate polynomial keyed by exponent pair (i, j); no stored zeros.
/// The zero polynomial has an empty term map and degree negative infinity.
class BivariatePolynomial {
public:
    using ExponentPair = std::pair<int, int>;
    using TermMap = std::map<ExponentPair, RationalComplex>;

    static constexpr int degree_neg_inf = std::numeric_limits<int>::min();

    BivariatePolynomial() = default;
    explicit BivariatePolynomial(TermMap terms) : terms_(std::move(terms)) { prune(); }

    static BivariatePolynomial zero() { return {}; }
    static BivariatePolynomial constant(RationalComplex v) {
        BivariatePolynomial p;
        p.set(0, 0, std::move(v));
        return p;
    }
    static BivariatePolynomial x() { return monomial(1, 0, RationalComplex(1)); }
    static BivariatePolynomial y() { return monomial(0, 1, RationalComplex(1)); }
    static BivariatePolynomial monomial(int i, int j, RationalComplex c) {
        BivariatePolynomial p;
        p.set(i, j, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set(int i, int j, RationalComplex c) {
        if (i < 0 || j < 0) throw std::domain_error("negative exponent");
        if (c.is_zero())
            terms_.erase({i, j});
        else
            terms_[{i, j}] = std::move(c);
    }

    RationalComplex coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? RationalComplex{} : it->second;
    }

    int degree() const {
        int d = degree_neg_inf;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }
    int degree_x() const {
        int d = degree_neg_inf;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = degree_neg_inf;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    bool is_homogeneous(int d) const {
        for (const auto& [e, c] : terms_)
            if (e.first + e.second != d) return false;
        return true;
    }

    BivariatePolynomial homogeneous_component(int d) const {
        BivariatePolynomial out;
        for (const auto& [e, c] : terms_)
            if (e.first + e.second == d) out.terms_[e] = c;
        return out;
    }

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial r = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a + (RationalComplex(-1) * b);
    }
    friend BivariatePolynomial operator*(const RationalComplex& s, const BivariatePolynomial& p) {
        if (s.is_zero()) return {};
        BivariatePolynomial r = p;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExponentPair e{ea.first + eb.first, ea.second + eb.second};
                auto it = r.terms_.find(e);
                if (it == r.terms_.end())
                    r.terms_[e] = ca * cb;
                else
                    it->second += ca * cb;
            }
        r.prune();
        return r;
    }
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    BivariatePolynomial partial_x() const {
        BivariatePolynomial r;
        for (const auto& [e, c] : terms_)
            if (e.first > 0) r.terms_[{e.first - 1, e.second}] = c * RationalComplex(e.first);
        return r;
    }
    BivariatePolynomial partial_y() const {
        BivariatePolynomial r;
        for (const auto& [e, c] : terms_)
            if (e.second > 0) r.terms_[{e.first, e.second - 1}] = c * RationalComplex(e.second);
        return r;
    }

    RationalComplex eval(const RationalComplex& x, const RationalComplex& y) const {
        RationalComplex acc;
        for (const auto& [e, c] : terms_)
            acc += c * x.pow(static_cast<unsigned>(e.first)) * y.pow(static_cast<unsigned>(e.second));
        return acc;
    }
    std::complex<double> eval(const std::complex<double>& x, const std::complex<double>& y) const {
        std::complex<double> acc;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (int k = 0; k < e.first; ++k) t *= x;
            for (int k = 0; k < e.second; ++k) t *= y;
            acc += t;
        }
        return acc;
    }

    /// Restriction to the parametrized line (x, y) = base + t * dir, exact in t.
    UPoly restrict_to_line(const RationalComplex& bx, const RationalComplex& by,
                           const RationalComplex& dx, const RationalComplex& dy) const {
        int mi = 0, mj = 0;
        for (const auto& [e, c] : terms_) {
            mi = std::max(mi, e.first);
            mj = std::max(mj, e.second);
        }
        UPoly lx({bx, dx}), ly({by, dy});
        std::vector<UPoly> px(static_cast<std::size_t>(mi) + 1), py(static_cast<std::size_t>(mj) + 1);
        px[0] = UPoly::constant(RationalComplex(1));
        py[0] = UPoly::constant(RationalComplex(1));
        for (int i = 1; i <= mi; ++i) px[static_cast<std::size_t>(i)] = px[static_cast<std::size_t>(i - 1)] * lx;
        for (int j = 1; j <= mj; ++j) py[static_cast<std::size_t>(j)] = py[static_cast<std::size_t>(j - 1)] * ly;
        UPoly acc;
        for (const auto& [e, c] : terms_)
            acc = acc + c * (px[static_cast<std::size_t>(e.first)] * py[static_cast<std::size_t>(e.second)]);
        return acc;
    }

    /// u^d * p(1/u, v/u) as a polynomial in (u, v); requires d >= degree().
    BivariatePolynomial hat_transform(int d) const {
        if (!is_zero() && d < degree()) throw std::domain_error("hat_transform bound below degree");
        BivariatePolynomial r;
        for (const auto& [e, c] : terms_) r.terms_[{d - e.first - e.second, e.second}] = c;
        return r;
    }

    /// Largest a such that u^a (first variable) divides the polynomial; 0 for zero poly.
    int min_power_x() const {
        if (terms_.empty()) return 0;
        int m = std::numeric_limits<int>::max();
        for (const auto& [e, c] : terms_) m = std::min(m, e.first);
        return m;
    }
    int min_power_y() const {
        if (terms_.empty()) return 0;
        int m = std::numeric_limits<int>::max();
        for (const auto& [e, c] : terms_) m = std::min(m, e.second);
        return m;
    }

    BivariatePolynomial shift_down_x(int a) const {
        BivariatePolynomial r;
        for (const auto& [e, c] : terms_) {
            if (e.first < a) throw std::domain_error("monomial division fails");
            r.terms_[{e.first - a, e.second}] = c;
        }
        return r;
    }

    bool divisible_by_x() const { return !is_zero() && min_power_x() >= 1; }

    /// Coefficient of y^j, a univariate polynomial in x.
    UPoly coeff_of_y(int j) const {
        int dx = std::max(0, degree_x());
        std::vector<RationalComplex> c(static_cast<std::size_t>(dx) + 1);
        for (const auto& [e, v] : terms_)
            if (e.second == j) c[static_cast<std::size_t>(e.first)] = v;
        return UPoly(std::move(c));
    }
    UPoly coeff_of_x(int i) const {
        int dy = std::max(0, degree_y());
        std::vector<RationalComplex> c(static_cast<std::size_t>(dy) + 1);
        for (const auto& [e, v] : terms_)
            if (e.first == i) c[static_cast<std::size_t>(e.second)] = v;
        return UPoly(std::move(c));
    }

    /// Substitute x = x0, leaving a univariate polynomial in y.
    UPoly eval_x(const RationalComplex& x0) const {
        int dy = std::max(0, degree_y());
        std::vector<RationalComplex> c(static_cast<std::size_t>(dy) + 1);
        for (const auto& [e, v] : terms_)
            c[static_cast<std::size_t>(e.second)] += v * x0.pow(static_cast<unsigned>(e.first));
        return UPoly(std::move(c));
    }
    UPoly eval_y(const RationalComplex& y0) const {
        int dx = std::max(0, degree_x());
        std::vector<RationalComplex> c(static_cast<std::size_t>(dx) + 1);
        for (const auto& [e, v] : terms_)
            c[static_cast<std::size_t>(e.first)] += v * y0.pow(static_cast<unsigned>(e.second));
        return UPoly(std::move(c));
    }

    /// Swap the roles of x and y.
    BivariatePolynomial transpose() const {
        BivariatePolynomial r;
        for (const auto& [e, c] : terms_) r.terms_[{e.second, e.first}] = c;
        return r;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
    }
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Exact linear algebra over Q(i) and resultants.
// ---------------------------------------------------------------------------

inline RationalComplex determinant(std::vector<std::vector<RationalComplex>> m) {
    std::size_t n = m.size();
    RationalComplex det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return RationalComplex(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        RationalComplex inv = inverse(m[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            RationalComplex f = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

namespace detail {

/// Sylvester determinant of A, B seen in y, with coefficients evaluated at x = x0.
/// The matrix shape is fixed by the unevaluated y-degrees.
inline RationalComplex sylvester_at(const BivariatePolynomial& a, const BivariatePolynomial& b,
                                    const RationalComplex& x0) {
    int da = a.degree_y(), db = b.degree_y();
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<RationalComplex> ac(static_cast<std::size_t>(da) + 1), bc(static_cast<std::size_t>(db) + 1);
    for (int j = 0; j <= da; ++j) ac[static_cast<std::size_t>(j)] = a.coeff_of_y(j).eval(x0);
    for (int j = 0; j <= db; ++j) bc[static_cast<std::size_t>(j)] = b.coeff_of_y(j).eval(x0);
    std::vector<std::vector<RationalComplex>> m(n, std::vector<RationalComplex>(n));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = ac[static_cast<std::size_t>(da - j)];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + j)] = bc[static_cast<std::size_t>(db - j)];
    return determinant(std::move(m));
}

inline UPoly lagrange_interpolate(const std::vector<RationalComplex>& nodes,
                                  const std::vector<RationalComplex>& values) {
    UPoly p;
    UPoly basis = UPoly::constant(RationalComplex(1));
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        RationalComplex denom = basis.eval(nodes[k]);
        RationalComplex c = (values[k] - p.eval(nodes[k])) / denom;
        p = p + c * basis;
        basis = basis * UPoly({-nodes[k], RationalComplex(1)});
    }
    return p;
}

}  // namespace detail

/// Res_y(A, B) as an exact univariate polynomial in x (evaluation + interpolation).
inline UPoly resultant_y(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int da = a.degree_y(), db = b.degree_y();
    if (da == 0 && db == 0) return UPoly::constant(RationalComplex(1));
    if (da == 0) {
        UPoly base = a.coeff_of_y(0);
        UPoly r = UPoly::constant(RationalComplex(1));
        for (int k = 0; k < db; ++k) r = r * base;
        return r;
    }
    if (db == 0) {
        UPoly base = b.coeff_of_y(0);
        UPoly r = UPoly::constant(RationalComplex(1));
        for (int k = 0; k < da; ++k) r = r * base;
        return r;
    }
    int bound = std::max(0, a.degree_x()) * db + std::max(0, b.degree_x()) * da;
    std::vector<RationalComplex> nodes, values;
    nodes.reserve(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) {
        RationalComplex x0(static_cast<long>(k));
        nodes.push_back(x0);
        values.push_back(detail::sylvester_at(a, b, x0));
    }
    return detail::lagrange_interpolate(nodes, values);
}

inline UPoly resultant_x(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return resultant_y(a.transpose(), b.transpose());
}

/// Exact test: do A and B share a non-constant common factor over Q(i)[x, y]?
/// Common factors of positive y-degree are detected by Res_y vanishing
/// identically; factors free of y divide both y-contents.
inline bool have_common_factor(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_zero()) return b.degree() > 0;
    if (b.is_zero()) return a.degree() > 0;
    int da = a.degree_y(), db = b.degree_y();
    auto content_y = [](const BivariatePolynomial& p) {
        UPoly g;
        for (int j = 0; j <= std::max(0, p.degree_y()); ++j) {
            UPoly cj = p.coeff_of_y(j);
            if (!cj.is_zero()) g = g.is_zero() ? cj.monic() : gcd(g, cj);
        }
        return g;
    };
    UPoly ca = content_y(a), cb = content_y(b);
    if (gcd(ca, cb).degree() > 0) return true;
    if (da > 0 && db > 0 && resultant_y(a, b).is_zero()) return true;
    return false;
}

}  // namespace polyfol
