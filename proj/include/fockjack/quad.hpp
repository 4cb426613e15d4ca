#pragma once

#include <optional>
#include <string>

#include "fockjack/rational.hpp"

namespace fockjack {

// Element a + b*sqrt(D) of the quadratic extension Q(sqrt(D)).
//
// D is carried per value; pure rationals have no discriminant and mix with
// every D.  When D is the square of a rational the extension is trivial and
// sqrt(D) is folded into the rational part, so b == 0 is the canonical form.
class QuadScalar {
public:
    QuadScalar() : a_(0), b_(0) {}
    QuadScalar(const Rational& a) : a_(a), b_(0) {}  // NOLINT: implicit from Q
    QuadScalar(long a) : a_(rat(a)), b_(0) {}        // NOLINT

    QuadScalar(const Rational& a, const Rational& b, const Rational& D) : a_(a), b_(b) {
        if (b_ != 0) {
            Rational r;
            if (rat_sqrt(D, r)) {
                a_ += b_ * r;
                b_ = 0;
            } else {
                D_ = D;
            }
        }
    }

    static QuadScalar sqrt_of(const Rational& D) { return QuadScalar(0, 1, D); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool has_root() const { return b_ != 0; }
    const Rational& discriminant() const { return *D_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
        auto D = joint(x, y);
        return make(x.a_ + y.a_, x.b_ + y.b_, D);
    }
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
        auto D = joint(x, y);
        return make(x.a_ - y.a_, x.b_ - y.b_, D);
    }
    QuadScalar operator-() const { return make(-a_, -b_, D_); }

    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        auto D = joint(x, y);
        if (x.b_ != 0 && y.b_ != 0)
            return make(x.a_ * y.a_ + x.b_ * y.b_ * *D, x.a_ * y.b_ + x.b_ * y.a_, D);
        return make(x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_, D);
    }

    QuadScalar inverse() const {
        if (is_zero()) throw DivisionByZero{};
        if (b_ == 0) return QuadScalar(1 / a_);
        Rational n = a_ * a_ - b_ * b_ * *D_;  // field norm; nonzero since sqrt(D) irrational
        return make(a_ / n, -b_ / n, D_);
    }
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }

    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
    QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || *x.D_ == *y.D_);
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    // total order for use as a map key (lexicographic; D last)
    friend bool operator<(const QuadScalar& x, const QuadScalar& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        if (x.b_ != y.b_) return x.b_ < y.b_;
        Rational dx = x.b_ != 0 ? *x.D_ : Rational(0);
        Rational dy = y.b_ != 0 ? *y.D_ : Rational(0);
        return dx < dy;
    }

    std::string str() const {
        if (b_ == 0) return rat_str(a_);
        std::string s = rat_str(a_) + (sgn(b_) >= 0 ? "+" : "") + rat_str(b_);
        return s + "*sqrt(" + rat_str(*D_) + ")";
    }

private:
    static std::optional<Rational> joint(const QuadScalar& x, const QuadScalar& y) {
        if (!x.D_) return y.D_;
        if (!y.D_) return x.D_;
        if (*x.D_ != *y.D_) throw DiscriminantMismatch{};
        return x.D_;
    }
    static QuadScalar make(Rational a, Rational b, std::optional<Rational> D) {
        QuadScalar q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        if (q.b_ != 0) q.D_ = std::move(D);
        return q;
    }

    Rational a_, b_;
    std::optional<Rational> D_;  // engaged iff b_ != 0
};

inline QuadScalar qpow(const QuadScalar& x, long e) {
    if (e < 0) return qpow(x.inverse(), -e);
    QuadScalar r(1), b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace fockjack
