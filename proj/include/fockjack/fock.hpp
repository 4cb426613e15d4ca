#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fockjack/eps_series.hpp"
#include "fockjack/quad.hpp"
#include "fockjack/sympoly.hpp"

namespace fockjack {

// Parameters of the (p+,p-) model.  alpha_+ = sqrt(2 p_-/p_+) generates the
// coefficient field Q(sqrt(D)); everything else is derived exactly.
struct ModelParams {
    int pp, pm;                 // p_+, p_-
    Rational D;                 // 2 p_- / p_+
    QuadScalar alpha_plus, alpha_minus, alpha0, alpha;
    Rational kappa_plus, kappa_minus;
    Rational c;                 // central charge

    QuadScalar beta(int r, int s) const {
        return alpha_plus * QuadScalar(rat(1 - r, 2)) + alpha_minus * QuadScalar(rat(1 - s, 2));
    }
    QuadScalar beta_n(int r, int s, int n) const { return beta(r - n * pp, s); }
    QuadScalar h_of_beta(const QuadScalar& b) const {
        return b * (b - alpha0) * QuadScalar(rat(1, 2));
    }
    // h_{r,s} = (r^2-1)/4 k+ - (rs-1)/2 + (s^2-1)/4 k-, always rational
    Rational h(int r, int s) const {
        return rat(static_cast<long>(r) * r - 1, 4) * kappa_plus -
               rat(static_cast<long>(r) * s - 1, 2) +
               rat(static_cast<long>(s) * s - 1, 4) * kappa_minus;
    }
    Rational h_n(int r, int s, int n) const { return h(r - n * pp, s); }
};

ModelParams model(int pp, int pm);

struct FockWeight {
    int r, s, n;
    QuadScalar beta;
    QuadScalar h;
};

FockWeight weight(const ModelParams& m, int r, int s, int n);

// Finite combination of Heisenberg monomials b_{-lambda}|beta>.
struct FockElement {
    QuadScalar beta;
    std::map<Partition, QuadScalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Partition& lam, const QuadScalar& c) {
        auto it = terms.find(lam);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(lam, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    int max_grade() const {
        int g = 0;
        for (const auto& [lam, c] : terms) g = std::max(g, lam.degree());
        return g;
    }
    friend FockElement operator+(const FockElement& v, const FockElement& w) {
        FockElement r = v;
        for (const auto& [lam, c] : w.terms) r.add_term(lam, c);
        return r;
    }
    friend FockElement operator*(const FockElement& v, const QuadScalar& c) {
        FockElement r{v.beta, {}};
        if (c.is_zero()) return r;
        for (const auto& [lam, x] : v.terms) r.terms.emplace(lam, x * c);
        return r;
    }
    friend bool operator==(const FockElement& v, const FockElement& w) {
        return v.beta == w.beta && v.terms == w.terms;
    }
};

inline FockElement vacuum_of(const QuadScalar& beta) {
    FockElement v{beta, {}};
    v.terms.emplace(Partition{}, QuadScalar(1));
    return v;
}

// Heisenberg mode b_n: n < 0 creates a part, n = 0 multiplies by beta,
// n > 0 contracts with multiplicity n * mult_n(lambda)
FockElement heisenberg_apply(const FockElement& v, int n);

// L_n = 1/2 sum_k :b_{n-k} b_k: - (alpha0/2)(n+1) b_n
FockElement virasoro_apply(const ModelParams& m, const FockElement& v, int n);

// the transport rho_gamma: p_lam |-> gamma^{l(lam)} b_{-lambda} applied at beta
template <class S>
FockElement rho_gamma(const SymPoly<S>& f, const QuadScalar& gamma, const QuadScalar& beta,
                      const std::function<QuadScalar(const S&)>& lift) {
    FockElement out{beta, {}};
    SymPoly<S> fp = f.to_basis(Basis::power);
    for (const auto& [lam, c] : fp.terms())
        out.add_term(lam, lift(c) * qpow(gamma, static_cast<long>(lam.length())));
    return out;
}

inline FockElement rho_gamma(const SymPoly<Rational>& f, const QuadScalar& gamma,
                             const QuadScalar& beta) {
    return rho_gamma<Rational>(f, gamma, beta, [](const Rational& c) { return QuadScalar(c); });
}

// exact basis of { v at the given grade : L_1 v = L_2 v = 0 }
// (L_1, L_2 generate all positive modes)
std::vector<FockElement> singular_space(const ModelParams& m, const QuadScalar& beta, int level);

// grade-wise contravariant pairing F_{alpha0-beta} x F_beta -> Q(sqrt D):
// <b_{-lam}|alpha0-beta>, b_{-mu}|beta>> = (-1)^{l(lam)} delta z_lam
QuadScalar contravariant_pair(const ModelParams& m, const FockElement& u, const FockElement& v);

// Deformation over O = C[[eps]]: alpha_+(eps) with constant term alpha_+,
// alpha_-(eps) = -2/alpha_+(eps), kappa_pm = alpha_pm^2/2.
using QuadEps = EpsSeries<QuadScalar>;

struct DeformedModel {
    int pp, pm;
    std::size_t order;
    QuadEps alpha_plus, alpha_minus, alpha0;
    QuadEps kappa_plus, kappa_minus;

    QuadEps beta(int r, int s) const;
    QuadEps h(int r, int s) const;  // the deformed h_{r,s}(eps)
};

DeformedModel deform(const ModelParams& m, const QuadEps& alpha_plus_series);

}  // namespace fockjack
