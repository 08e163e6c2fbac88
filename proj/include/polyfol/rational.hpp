#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyfol {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p/q", integers, and plain decimals ("-0.25") into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    auto dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            if (dot != std::string::npos) throw ParseError("mixed '/' and '.' in rational literal: " + s);
            Rational r(s);
            return r;
        }
        auto parse_decimal_int = [](std::string_view d) {
            bool neg = false;
            std::size_t i = 0;
            if (i < d.size() && (d[i] == '+' || d[i] == '-')) neg = d[i++] == '-';
            if (i == d.size()) throw ParseError("missing digits");
            BigInt acc(0);
            for (; i < d.size(); ++i) {
                if (d[i] < '0' || d[i] > '9') throw ParseError("bad digit");
                acc = acc * 10 + (d[i] - '0');
            }
            return neg ? BigInt(-acc) : acc;
        };
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t frac_len = s.size() - dot - 1;
            if (frac_len == 0) throw ParseError("trailing '.' in rational literal: " + s);
            BigInt num = parse_decimal_int(digits);
            BigInt den(1);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(parse_decimal_int(s));
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational literal: " + s);
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Gaussian rational: exact complex number with rational real/imaginary parts.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r) : re(r) {}
    RationalComplex(long r, long i) : re(r), im(i) {}

    static RationalComplex parse(std::string_view real_text, std::string_view imag_text) {
        return {parse_rational(real_text), parse_rational(imag_text)};
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    RationalComplex conj() const { return {re, -im}; }

    /// |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        Rational n = b.norm2();
        if (n == 0) throw std::domain_error("division by zero RationalComplex");
        RationalComplex p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    RationalComplex& operator+=(const RationalComplex& o) { return *this = *this + o; }
    RationalComplex& operator-=(const RationalComplex& o) { return *this = *this - o; }
    RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }
    RationalComplex& operator/=(const RationalComplex& o) { return *this = *this / o; }

    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    // lexicographic; used by ordered containers, not a numeric order
    friend bool operator<(const RationalComplex& a, const RationalComplex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    RationalComplex pow(unsigned e) const {
        RationalComplex acc(1);
        RationalComplex base = *this;
        while (e) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    std::string str() const {
        if (im == 0) return re.str();
        return re.str() + (im > 0 ? "+" : "") + im.str() + "i";
    }
};

inline RationalComplex inverse(const RationalComplex& z) { return RationalComplex(1) / z; }

/// Continued-fraction reconstruction: rational p/q with q <= qmax,
/// |x - p/q| <= tol, and approximation quality far beyond a generic
/// convergent (|x - p/q| < strictness / q^2). The quality requirement is what
/// makes "small denominator" meaningful: every real has convergents below any
/// fixed tolerance, but only near-rationals have unreasonably good ones.
struct RationalReconstruction {
    bool found = false;
    long long num = 0;
    long long den = 1;
    double error = 0.0;
};

inline RationalReconstruction reconstruct_rational(double x, long long qmax = 1000000,
                                                   double tol = 1e-10, double strictness = 1e-4) {
    RationalReconstruction out;
    if (!std::isfinite(x)) return out;
    // convergents of the continued fraction of x
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(v);
        if (fl > 9.2e18 || fl < -9.2e18) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > qmax || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        double quality = strictness / (static_cast<double>(q1) * static_cast<double>(q1));
        if (std::abs(x - approx) <= std::min(tol, quality)) {
            out.found = true;
            out.num = p1;
            out.den = q1;
            out.error = std::abs(x - approx);
            return out;
        }
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    return out;
}

}  // namespace polyfol
