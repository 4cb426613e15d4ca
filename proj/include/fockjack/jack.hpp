#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fockjack/kappa.hpp"
#include "fockjack/sympoly.hpp"

namespace fockjack {

template <class S>
struct JackPair {
    Partition lambda;
    SymPoly<S> P;  // monomial basis, unitriangular
    SymPoly<S> Q;  // b * P
    S b;           // norm reciprocal, closed product over boxes
};

// b_lambda(kappa) = prod_s (kappa a(s)+l(s)+1)/(kappa a(s)+l(s)+kappa).
// lift embeds small integers into S (identity for rings constructible from long).
template <class S, class Lift>
S b_lambda_lift(const Partition& lam, const S& kappa, Lift lift) {
    S num(lift(1)), den(lift(1));
    for (int i = 1; i <= static_cast<int>(lam.length()); ++i)
        for (int j = 1; j <= lam.part(static_cast<std::size_t>(i - 1)); ++j) {
            auto st = lam.box_stats(i, j);
            num *= kappa * lift(st.arm) + lift(st.leg + 1);
            den *= kappa * lift(st.arm + 1) + lift(st.leg);
        }
    return num / den;
}

template <class S>
S b_lambda(const Partition& lam, const S& kappa) {
    return b_lambda_lift(lam, kappa, [](long v) { return S(Rational(v)); });
}

// eps_X(P_lambda) = prod_s (X + kappa a'(s) - l'(s)) / (kappa a(s) + l(s) + 1)
template <class S>
S eval_P_closed(const Partition& lam, const S& X, const S& kappa) {
    S num(Rational(1)), den(Rational(1));
    for (int i = 1; i <= static_cast<int>(lam.length()); ++i)
        for (int j = 1; j <= lam.part(static_cast<std::size_t>(i - 1)); ++j) {
            auto st = lam.box_stats(i, j);
            num *= X + kappa * S(rat(st.coarm)) - S(rat(st.coleg));
            den *= kappa * S(rat(st.arm)) + S(rat(st.leg + 1));
        }
    return num / den;
}

// eps_X(Q_lambda) = prod_s (X + kappa a'(s) - l'(s)) / (kappa (a(s)+1) + l(s));
// X may be a polynomial (used with X = alpha_- beta for the zero-mode grids)
template <class S>
Poly<S> eval_Q_closed_poly(const Partition& lam, const Poly<S>& X, const S& kappa) {
    Poly<S> num{S(Rational(1))};
    S den(Rational(1));
    for (int i = 1; i <= static_cast<int>(lam.length()); ++i)
        for (int j = 1; j <= lam.part(static_cast<std::size_t>(i - 1)); ++j) {
            auto st = lam.box_stats(i, j);
            num *= X + Poly<S>(kappa * S(rat(st.coarm)) - S(rat(st.coleg)));
            den *= kappa * S(rat(st.arm + 1)) + S(rat(st.leg));
        }
    return num * (S(Rational(1)) / den);
}

// Gram-Schmidt construction of all Jack pairs in the dominance ideal of lam,
// processed in revlex-ascending order.  S is Rational (specialized kappa) or
// KappaFunction (generic).  Throws PoleAtKappa when a norm vanishes.
template <class S>
std::map<Partition, JackPair<S>> jack_ideal(const Partition& lam, const S& kappa,
                                            const std::string& kappa_label) {
    struct Entry {
        SymPoly<S> m_form, p_form;
        S norm;
    };
    int d = lam.degree();
    const DegreeTables& tables = degree_tables(d);
    std::vector<Partition> ideal;
    for (const Partition& mu : tables.parts)
        if (dominates(lam, mu)) ideal.push_back(mu);  // already revlex ascending

    std::map<Partition, Entry> done;
    for (const Partition& mu : ideal) {
        Entry e{SymPoly<S>::m(mu), SymPoly<S>::m(mu).to_basis(Basis::power), S(Rational(0))};
        for (const auto& [nu, prev] : done) {
            S c = SymPoly<S>::inner_kappa(e.p_form, prev.p_form, kappa);
            if (c == S(Rational(0))) continue;
            if (prev.norm == S(Rational(0))) throw PoleAtKappa(kappa_label);
            c = c / prev.norm;
            e.m_form = e.m_form - prev.m_form * c;
            e.p_form = e.p_form - prev.p_form * c;
        }
        e.norm = SymPoly<S>::inner_kappa(e.p_form, e.p_form, kappa);
        done.emplace(mu, std::move(e));
    }

    std::map<Partition, JackPair<S>> out;
    for (auto& [mu, e] : done) {
        S b = b_lambda(mu, kappa);
        // two routes for the norm: Gram-Schmidt vs the closed box product
        if (!(e.norm * b == S(Rational(1))))
            throw TwoRouteMismatch("Jack norm of " + mu.str() + " disagrees with the b product");
        out.emplace(mu, JackPair<S>{mu, e.m_form, e.m_form * b, b});
    }
    return out;
}

// cached accessors (read-mostly tables; see jack.cpp)
const JackPair<KappaFunction>& jack_generic(const Partition& lam);
const JackPair<Rational>& jack_at(const Partition& lam, const Rational& kappa0);

// number of partitions dominated by lam; the Gram-Schmidt cost driver
std::size_t dominance_ideal_size(const Partition& lam);

// duality: omega_kappa(P_lambda(kappa)) == Q_{lambda'}(1/kappa)
struct DualityReport {
    bool pass;
    SymPoly<KappaFunction> lhs, rhs;
};
DualityReport duality_check(const Partition& lam);

// Cauchy kernel, degree d: sum_{|lam|=d} P_lam(x) Q_lam(y) ==
// sum_{|mu|=d} p_mu(x) p_mu(y) / (z_mu kappa^{l(mu)}), compared in p (x) p
struct CauchyReport {
    bool pass;
    int degree;
};
CauchyReport cauchy_check(int d);

// finite-N norm of P_lambda (diagonal); zero for lam != mu
Rational inner_N(const Partition& lam, const Partition& mu, int N, const Rational& kappa);

// constant-term realization of the normalized functional for 1/kappa = invk:
// CT[ Delta_N(z;kappa) fbar g ] / CT[ Delta_N(z;kappa) ]
Rational ct_pairing(const SymPoly<Rational>& f, const SymPoly<Rational>& g, int N, int invk);

// Selberg constant c_N(kappa), numeric; N = 1 gives the empty product 1
double selberg_constant(int N, double kappa);

}  // namespace fockjack
