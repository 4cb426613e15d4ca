#pragma once

#include <utility>

#include "fockjack/polynomial.hpp"

namespace fockjack {

// Rational function in the indeterminate kappa over Q, kept in canonical
// form: gcd(num, den) = 1 and den monic.  This is the coefficient field for
// generic-kappa Jack computations.
class KappaFunction {
public:
    KappaFunction() : num_(), den_(Rational(1)) {}
    KappaFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    KappaFunction(long c) : num_(rat(c)), den_(Rational(1)) {}        // NOLINT
    KappaFunction(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero{};
        reduce();
    }

    static KappaFunction kappa() { return KappaFunction(RatPoly::x(), RatPoly(Rational(1))); }

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend KappaFunction operator+(const KappaFunction& f, const KappaFunction& g) {
        return KappaFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend KappaFunction operator-(const KappaFunction& f, const KappaFunction& g) {
        return KappaFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
    }
    KappaFunction operator-() const {
        KappaFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend KappaFunction operator*(const KappaFunction& f, const KappaFunction& g) {
        return KappaFunction(f.num_ * g.num_, f.den_ * g.den_);
    }
    KappaFunction inverse() const {
        if (is_zero()) throw DivisionByZero{};
        return KappaFunction(den_, num_);
    }
    friend KappaFunction operator/(const KappaFunction& f, const KappaFunction& g) {
        return f * g.inverse();
    }
    KappaFunction& operator+=(const KappaFunction& g) { return *this = *this + g; }
    KappaFunction& operator-=(const KappaFunction& g) { return *this = *this - g; }
    KappaFunction& operator*=(const KappaFunction& g) { return *this = *this * g; }
    KappaFunction& operator/=(const KappaFunction& g) { return *this = *this / g; }

    friend bool operator==(const KappaFunction& f, const KappaFunction& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const KappaFunction& f, const KappaFunction& g) { return !(f == g); }

    // evaluation at a rational point; exact pole detection
    Rational specialize(const Rational& kappa0) const {
        Rational d = den_.eval(kappa0);
        if (d == 0) throw PoleAtKappa(rat_str(kappa0));
        return num_.eval(kappa0) / d;
    }

    // f(1/kappa) as a rational function of kappa
    KappaFunction subst_inverse() const {
        long n = std::max(num_.degree(), den_.degree());
        if (n < 0) return KappaFunction();
        auto lift = [n](const RatPoly& p) {
            // kappa^n * p(1/kappa): coefficient k -> power n-k
            std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
            for (long k = 0; k <= p.degree(); ++k) out[static_cast<std::size_t>(n - k)] = p.coeff(k);
            return RatPoly(std::move(out));
        };
        return KappaFunction(lift(num_), lift(den_));
    }

    std::string str() const {
        auto poly_str = [](const RatPoly& p) {
            if (p.is_zero()) return std::string("0");
            std::string out;
            for (long k = p.degree(); k >= 0; --k) {
                Rational c = p.coeff(static_cast<std::size_t>(k));
                if (c == 0) continue;
                if (!out.empty()) out += sgn(c) >= 0 ? " + " : " - ";
                else if (sgn(c) < 0) out += "-";
                Rational a = abs(c);
                if (a != 1 || k == 0) out += rat_str(a);
                if (k >= 1) out += a != 1 ? "*k" : "k";
                if (k >= 2) out += "^" + std::to_string(k);
            }
            return out;
        };
        if (den_ == RatPoly(Rational(1))) return poly_str(num_);
        return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = RatPoly(Rational(1));
            return;
        }
        RatPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = 1 / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    RatPoly num_, den_;
};

}  // namespace fockjack
