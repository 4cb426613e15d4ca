#pragma once

#include <map>
#include <vector>

#include "fockjack/partition.hpp"
#include "fockjack/polynomial.hpp"
#include "fockjack/rational.hpp"

namespace fockjack {

enum class Basis { power, monomial };

// Per-degree change-of-basis tables between the power-sum and monomial bases.
// Entries are rational and kappa-independent, so one cache serves every
// coefficient ring.  Rows are sparse maps over partition indices.
struct DegreeTables {
    std::vector<Partition> parts;             // revlex ascending: (1^d) first, (d) last
    std::map<Partition, int> index;
    std::vector<std::map<int, Rational>> p_to_m;  // row i: p_{parts[i]} in m-basis
    std::vector<std::map<int, Rational>> m_to_p;  // row i: m_{parts[i]} in p-basis
};

const DegreeTables& degree_tables(int d);

// Sparse symmetric function over a scalar ring S constructible from Rational.
template <class S>
class SymPoly {
public:
    using Terms = std::map<Partition, S>;

    SymPoly() : basis_(Basis::power) {}
    explicit SymPoly(Basis b) : basis_(b) {}

    static SymPoly zero(Basis b = Basis::power) { return SymPoly(b); }
    static SymPoly one(Basis b = Basis::power) {
        SymPoly f(b);
        f.terms_[Partition{}] = S(1);
        return f;
    }
    static SymPoly p(const Partition& lam) {
        SymPoly f(Basis::power);
        f.terms_[lam] = S(1);
        return f;
    }
    static SymPoly m(const Partition& lam) {
        SymPoly f(Basis::monomial);
        f.terms_[lam] = S(1);
        return f;
    }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& lam, const S& c) {
        auto it = terms_.find(lam);
        if (it == terms_.end()) {
            if (!(c == S(0))) terms_.emplace(lam, c);
        } else {
            it->second += c;
            if (it->second == S(0)) terms_.erase(it);
        }
    }

    S coeff(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? S(0) : it->second;
    }

    friend SymPoly operator+(const SymPoly& f, SymPoly g) {
        g = g.to_basis(f.basis_);
        SymPoly r = f;
        for (const auto& [lam, c] : g.terms_) r.add_term(lam, c);
        return r;
    }
    friend SymPoly operator-(const SymPoly& f, SymPoly g) {
        g = g.to_basis(f.basis_);
        SymPoly r = f;
        for (const auto& [lam, c] : g.terms_) r.add_term(lam, -c);
        return r;
    }
    friend SymPoly operator*(const SymPoly& f, const S& s) {
        SymPoly r(f.basis_);
        if (s == S(0)) return r;
        for (const auto& [lam, c] : f.terms_) r.terms_[lam] = c * s;
        return r;
    }

    // product in Lambda: p_lam * p_mu = p_{sort(lam cup mu)}, bilinear;
    // monomial inputs go through the power basis
    friend SymPoly operator*(const SymPoly& f, const SymPoly& g) {
        SymPoly fp = f.to_basis(Basis::power);
        SymPoly gp = g.to_basis(Basis::power);
        SymPoly r(Basis::power);
        for (const auto& [lam, cf] : fp.terms_)
            for (const auto& [mu, cg] : gp.terms_) {
                std::vector<int> parts = lam.parts();
                parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
                r.add_term(Partition(std::move(parts)), cf * cg);
            }
        Basis target = (f.basis_ == g.basis_) ? f.basis_ : Basis::power;
        return r.to_basis(target);
    }

    friend bool operator==(const SymPoly& f, const SymPoly& g) {
        if (f.basis_ == g.basis_) return f.terms_ == g.terms_;
        return f.terms_ == g.to_basis(f.basis_).terms_;
    }
    friend bool operator!=(const SymPoly& f, const SymPoly& g) { return !(f == g); }

    SymPoly to_basis(Basis target) const {
        if (target == basis_) return *this;
        SymPoly r(target);
        for (const auto& [lam, c] : terms_) {
            const DegreeTables& t = degree_tables(lam.degree());
            int i = t.index.at(lam);
            const auto& row = (basis_ == Basis::power) ? t.p_to_m[static_cast<std::size_t>(i)]
                                                       : t.m_to_p[static_cast<std::size_t>(i)];
            for (const auto& [j, q] : row) r.add_term(t.parts[static_cast<std::size_t>(j)], c * S(q));
        }
        return r;
    }

    // <p_lam, p_mu> = delta * z_lam * kappa^{l(lam)}
    static S inner_kappa(const SymPoly& f, const SymPoly& g, const S& kappa) {
        SymPoly fp = f.to_basis(Basis::power);
        SymPoly gp = g.to_basis(Basis::power);
        const SymPoly& small = fp.terms_.size() <= gp.terms_.size() ? fp : gp;
        const SymPoly& big = fp.terms_.size() <= gp.terms_.size() ? gp : fp;
        S acc(0);
        for (const auto& [lam, c] : small.terms_) {
            auto it = big.terms_.find(lam);
            if (it == big.terms_.end()) continue;
            S kl(1);
            for (std::size_t i = 0; i < lam.length(); ++i) kl *= kappa;
            acc += c * it->second * S(lam.z_factor()) * kl;
        }
        return acc;
    }

    // omega_beta(p_r) = (-1)^{r-1} beta p_r, extended as algebra endomorphism
    SymPoly omega_endo(const S& beta) const {
        SymPoly fp = to_basis(Basis::power);
        SymPoly r(Basis::power);
        for (const auto& [lam, c] : fp.terms_) {
            S factor(1);
            for (int part : lam.parts()) {
                factor *= beta;
                if (part % 2 == 0) factor = -factor;
            }
            r.add_term(lam, c * factor);
        }
        return r.to_basis(basis_);
    }

    // the evaluation homomorphism eps_X: p_r -> X
    S eval_eps(const S& X) const {
        SymPoly fp = to_basis(Basis::power);
        S acc(0);
        for (const auto& [lam, c] : fp.terms_) {
            S t = c;
            for (std::size_t i = 0; i < lam.length(); ++i) t *= X;
            acc += t;
        }
        return acc;
    }

    // eps_X with X a polynomial (e.g. X = alpha_- * beta); result in S[x]
    Poly<S> eval_eps_poly(const Poly<S>& X) const {
        SymPoly fp = to_basis(Basis::power);
        Poly<S> acc;
        for (const auto& [lam, c] : fp.terms_) {
            Poly<S> t(c);
            for (std::size_t i = 0; i < lam.length(); ++i) t *= X;
            acc += t;
        }
        return acc;
    }

    // drop monomial terms of length > N
    SymPoly restrict_N(int N) const {
        SymPoly fm = to_basis(Basis::monomial);
        SymPoly r(Basis::monomial);
        for (const auto& [lam, c] : fm.terms_)
            if (static_cast<int>(lam.length()) <= N) r.terms_.emplace(lam, c);
        return r;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [lam, c] : terms_) d = std::max(d, lam.degree());
        return d;
    }

private:
    Basis basis_;
    Terms terms_;
};

}  // namespace fockjack
