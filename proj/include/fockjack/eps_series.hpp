#pragma once

#include <vector>

#include "fockjack/errors.hpp"
#include "fockjack/rational.hpp"

namespace fockjack {

inline constexpr std::size_t kDefaultEpsOrder = 8;

// Truncated element of O = C[[eps]] restricted to exact coefficients:
// c0 + c1*eps + ... + c_{K-1}*eps^{K-1} + O(eps^K).
//
// Units are exactly the series with nonzero constant term; inverting a
// non-unit means leaving the O-lattice and throws NotAUnit.
template <class S>
class EpsSeries {
public:
    explicit EpsSeries(std::size_t order = kDefaultEpsOrder) : c_(order, S(0)) {}
    EpsSeries(S constant, std::size_t order) : c_(order, S(0)) { c_.at(0) = std::move(constant); }
    explicit EpsSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {}

    static EpsSeries eps(std::size_t order) {
        EpsSeries e(order);
        if (order > 1) e.c_[1] = S(1);
        return e;
    }

    std::size_t order() const { return c_.size(); }
    const S& coeff(std::size_t k) const { return c_.at(k); }
    S& coeff(std::size_t k) { return c_.at(k); }
    const std::vector<S>& coeffs() const { return c_; }

    bool is_unit() const { return !(c_.empty() || c_[0] == S(0)); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!(x == S(0))) return false;
        return true;
    }

    friend EpsSeries operator+(const EpsSeries& x, const EpsSeries& y) {
        EpsSeries r(std::min(x.order(), y.order()));
        for (std::size_t k = 0; k < r.order(); ++k) r.c_[k] = x.c_[k] + y.c_[k];
        return r;
    }
    friend EpsSeries operator-(const EpsSeries& x, const EpsSeries& y) {
        EpsSeries r(std::min(x.order(), y.order()));
        for (std::size_t k = 0; k < r.order(); ++k) r.c_[k] = x.c_[k] - y.c_[k];
        return r;
    }
    EpsSeries operator-() const {
        EpsSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend EpsSeries operator*(const EpsSeries& x, const EpsSeries& y) {
        EpsSeries r(std::min(x.order(), y.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            if (x.c_[i] == S(0)) continue;
            for (std::size_t j = 0; i + j < r.order(); ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
        }
        return r;
    }

    EpsSeries inverse() const {
        if (!is_unit()) throw NotAUnit{};
        EpsSeries r(order());
        S c0inv = S(1) / c_[0];
        r.c_[0] = c0inv;
        for (std::size_t k = 1; k < order(); ++k) {
            S acc(0);
            for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc * c0inv;
        }
        return r;
    }
    friend EpsSeries operator/(const EpsSeries& x, const EpsSeries& y) { return x * y.inverse(); }

    EpsSeries& operator+=(const EpsSeries& y) { return *this = *this + y; }
    EpsSeries& operator-=(const EpsSeries& y) { return *this = *this - y; }
    EpsSeries& operator*=(const EpsSeries& y) { return *this = *this * y; }
    EpsSeries& operator/=(const EpsSeries& y) { return *this = *this / y; }

    friend bool operator==(const EpsSeries& x, const EpsSeries& y) { return x.c_ == y.c_; }
    friend bool operator!=(const EpsSeries& x, const EpsSeries& y) { return !(x == y); }

private:
    std::vector<S> c_;
};

using RatEps = EpsSeries<Rational>;

}  // namespace fockjack
