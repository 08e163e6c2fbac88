#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfol {

struct LeftDomainError : std::runtime_error {
    explicit LeftDomainError(const std::string& what_arg, int prefix = -1)
        : std::runtime_error(what_arg), failing_prefix(prefix) {}
    int failing_prefix;  // index of the word letter that failed, when applicable
};

/// A numerically evaluable germ of Diff(C, 0)-flavoured map on a disk.
class Germ {
public:
    virtual ~Germ() = default;
    virtual std::complex<double> eval(std::complex<double> z) const = 0;

    /// df/dz; default is a Richardson-extrapolated central difference.
    virtual std::complex<double> derivative(std::complex<double> z) const {
        double h = 1e-5 * (1.0 + std::abs(z));
        auto diff = [&](double step) {
            return (eval(z + step) - eval(z - step)) / (2.0 * step);
        };
        std::complex<double> d1 = diff(h), d2 = diff(h / 2);
        return (4.0 * d2 - d1) / 3.0;
    }

    virtual std::string describe() const { return "germ"; }
};

using GermPtr = std::shared_ptr<const Germ>;

class LinearGerm final : public Germ {
public:
    explicit LinearGerm(std::complex<double> multiplier) : lambda_(multiplier) {
        if (lambda_ == std::complex<double>(0.0)) throw std::domain_error("linear germ with zero multiplier");
    }
    std::complex<double> eval(std::complex<double> z) const override { return lambda_ * z; }
    std::complex<double> derivative(std::complex<double>) const override { return lambda_; }
    std::complex<double> multiplier() const { return lambda_; }
    std::string describe() const override { return "linear"; }

private:
    std::complex<double> lambda_;
};

/// z -> a z / (1 - b z); closed under composition and inversion, fixes 0.
class MoebiusGerm final : public Germ {
public:
    MoebiusGerm(std::complex<double> a, std::complex<double> b) : a_(a), b_(b) {
        if (a_ == std::complex<double>(0.0)) throw std::domain_error("moebius germ with zero multiplier");
    }
    std::complex<double> eval(std::complex<double> z) const override {
        std::complex<double> den = 1.0 - b_ * z;
        if (std::abs(den) < 1e-12) throw LeftDomainError("moebius pole reached");
        return a_ * z / den;
    }
    std::complex<double> derivative(std::complex<double> z) const override {
        std::complex<double> den = 1.0 - b_ * z;
        if (std::abs(den) < 1e-12) throw LeftDomainError("moebius pole reached");
        return a_ / (den * den);
    }
    MoebiusGerm inverse() const { return {1.0 / a_, -b_ / a_}; }
    std::complex<double> a() const { return a_; }
    std::complex<double> b() const { return b_; }
    std::string describe() const override { return "moebius"; }

private:
    std::complex<double> a_, b_;
};

/// Polynomial germ c1 z + c2 z^2 + ... + ck z^k with c1 != 0.
class PolynomialGerm final : public Germ {
public:
    explicit PolynomialGerm(std::vector<std::complex<double>> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty() || c_.front() == std::complex<double>(0.0))
            throw std::domain_error("polynomial germ needs nonzero linear coefficient");
    }
    std::complex<double> eval(std::complex<double> z) const override {
        std::complex<double> acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc + *it) * z;
        return acc;
    }
    std::complex<double> derivative(std::complex<double> z) const override {
        std::complex<double> acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + (static_cast<double>(i + 1)) * c_[i];
        return acc;
    }
    const std::vector<std::complex<double>>& coeffs() const { return c_; }
    std::string describe() const override { return "polynomial"; }

private:
    std::vector<std::complex<double>> c_;  // c_[i] multiplies z^{i+1}
};

/// Inverse of another germ by Newton iteration on f(w) = z.
class NewtonInverseGerm final : public Germ {
public:
    explicit NewtonInverseGerm(GermPtr target, double domain_radius = 1.0)
        : f_(std::move(target)), radius_(domain_radius) {}
    std::complex<double> eval(std::complex<double> z) const override {
        std::complex<double> w = z / f_->derivative(0.0);
        for (int it = 0; it < 60; ++it) {
            std::complex<double> r = f_->eval(w) - z;
            if (std::abs(r) < 1e-15 * (1.0 + std::abs(z))) return w;
            std::complex<double> d = f_->derivative(w);
            if (std::abs(d) < 1e-300) break;
            w -= r / d;
            if (std::abs(w) > 4.0 * radius_) throw LeftDomainError("inverse iteration left the domain");
        }
        std::complex<double> r = f_->eval(w) - z;
        if (std::abs(r) < 1e-10 * (1.0 + std::abs(z))) return w;
        throw LeftDomainError("inverse iteration did not converge");
    }
    std::complex<double> derivative(std::complex<double> z) const override {
        std::complex<double> w = eval(z);
        return 1.0 / f_->derivative(w);
    }
    std::string describe() const override { return "inverse(" + f_->describe() + ")"; }

private:
    GermPtr f_;
    double radius_;
};

/// g_t(z) = g(z) + t z^{D+1}: the one-parameter deformation normal form.
class DeformedGerm final : public Germ {
public:
    DeformedGerm(GermPtr base, int D, std::complex<double> t) : g_(std::move(base)), d_(D), t_(t) {
        if (d_ < 1) throw std::domain_error("deformation exponent D must be >= 1");
    }
    std::complex<double> eval(std::complex<double> z) const override {
        return g_->eval(z) + t_ * std::pow(z, d_ + 1);
    }
    std::complex<double> derivative(std::complex<double> z) const override {
        return g_->derivative(z) + static_cast<double>(d_ + 1) * t_ * std::pow(z, d_);
    }
    /// d/dt of the germ at fixed z.
    std::complex<double> t_derivative(std::complex<double> z) const { return std::pow(z, d_ + 1); }
    std::string describe() const override { return "deformed(" + g_->describe() + ")"; }

private:
    GermPtr g_;
    int d_;
    std::complex<double> t_;
};

}  // namespace polyfol
