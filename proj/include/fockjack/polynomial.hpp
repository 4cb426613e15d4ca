#pragma once

#include <vector>

#include "fockjack/errors.hpp"
#include "fockjack/rational.hpp"

namespace fockjack {

// Dense univariate polynomial, constant term first.  S must be a field type
// with +,-,*,/ and comparison against 0 via S() equality.
template <class S>
class Poly {
public:
    Poly() : c_{} {}
    Poly(S constant) : c_{std::move(constant)} { trim(); }  // NOLINT
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<S>{S(0), S(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention here
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }
    const S& leading() const { return c_.back(); }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<S> out(std::max(f.c_.size(), g.c_.size()), S(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i) out[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) out[i] += g.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        std::vector<S> out(std::max(f.c_.size(), g.c_.size()), S(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i) out[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) out[i] -= g.c_[i];
        return Poly(std::move(out));
    }
    Poly operator-() const {
        std::vector<S> out(c_);
        for (auto& x : out) x = -x;
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<S> out(f.c_.size() + g.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i] == S(0)) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& f, const S& s) {
        std::vector<S> out(f.c_);
        for (auto& x : out) x *= s;
        return Poly(std::move(out));
    }
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    S eval(const S& x) const {
        S r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // euclidean division; g must be nonzero
    friend std::pair<Poly, Poly> divmod(Poly f, const Poly& g) {
        if (g.is_zero()) throw DivisionByZero{};
        std::vector<S> q(f.c_.size() >= g.c_.size() ? f.c_.size() - g.c_.size() + 1 : 0, S(0));
        while (!f.is_zero() && f.degree() >= g.degree()) {
            S coef = f.leading() / g.leading();
            std::size_t shift = f.c_.size() - g.c_.size();
            q[shift] = coef;
            for (std::size_t i = 0; i < g.c_.size(); ++i) f.c_[i + shift] -= coef * g.c_[i];
            f.trim();
        }
        return {Poly(std::move(q)), std::move(f)};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        S inv = S(1) / leading();
        return *this * inv;
    }

    // monic gcd via Euclid
    friend Poly poly_gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = b;
            b = r.monic();  // normalize each remainder to keep coefficients tame
        }
        return a.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }
    std::vector<S> c_;
};

using RatPoly = Poly<Rational>;

}  // namespace fockjack
