#include "fockjack/jack.hpp"

#include <cmath>
#include <mutex>

namespace fockjack {

namespace {

std::mutex g_jack_mutex;
std::map<Partition, JackPair<KappaFunction>> g_generic_cache;
std::map<std::pair<Partition, Rational>, JackPair<Rational>> g_rational_cache;

}  // namespace

const JackPair<KappaFunction>& jack_generic(const Partition& lam) {
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    auto it = g_generic_cache.find(lam);
    if (it == g_generic_cache.end()) {
        auto ideal = jack_ideal(lam, KappaFunction::kappa(), "generic");
        for (auto& [mu, pair] : ideal) g_generic_cache.emplace(mu, std::move(pair));
        it = g_generic_cache.find(lam);
    }
    return it->second;
}

const JackPair<Rational>& jack_at(const Partition& lam, const Rational& kappa0) {
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    auto key = std::make_pair(lam, kappa0);
    auto it = g_rational_cache.find(key);
    if (it == g_rational_cache.end()) {
        auto ideal = jack_ideal(lam, kappa0, rat_str(kappa0));
        for (auto& [mu, pair] : ideal)
            g_rational_cache.emplace(std::make_pair(mu, kappa0), std::move(pair));
        it = g_rational_cache.find(key);
    }
    return it->second;
}

std::size_t dominance_ideal_size(const Partition& lam) {
    const DegreeTables& t = degree_tables(lam.degree());
    std::size_t n = 0;
    for (const Partition& mu : t.parts)
        if (dominates(lam, mu)) ++n;
    return n;
}

DualityReport duality_check(const Partition& lam) {
    const auto& jp = jack_generic(lam);
    const auto& jpc = jack_generic(lam.conjugate());
    SymPoly<KappaFunction> lhs = jp.P.omega_endo(KappaFunction::kappa()).to_basis(Basis::power);
    SymPoly<KappaFunction> rhs(Basis::power);
    SymPoly<KappaFunction> qp = jpc.Q.to_basis(Basis::power);
    for (const auto& [mu, c] : qp.terms())
        rhs.add_term(mu, c.subst_inverse());
    return {lhs == rhs, lhs, rhs};
}

CauchyReport cauchy_check(int d) {
    using TensorKey = std::pair<Partition, Partition>;
    std::map<TensorKey, KappaFunction> lhs, rhs;
    KappaFunction kap = KappaFunction::kappa();
    for (const Partition& lam : enumerate_partitions(d)) {
        const auto& jp = jack_generic(lam);
        auto Pp = jp.P.to_basis(Basis::power);
        auto Qp = jp.Q.to_basis(Basis::power);
        for (const auto& [mu, cp] : Pp.terms())
            for (const auto& [nu, cq] : Qp.terms()) {
                auto& slot = lhs[{mu, nu}];
                slot += cp * cq;
                if (slot.is_zero()) lhs.erase({mu, nu});
            }
        // kernel side: p_lam (x) p_lam / (z_lam kappa^{l})
        KappaFunction kl(Rational(1));
        for (std::size_t i = 0; i < lam.length(); ++i) kl *= kap;
        rhs[{lam, lam}] = KappaFunction(Rational(1) / lam.z_factor()) / kl;
    }
    return {lhs == rhs, d};
}

Rational inner_N(const Partition& lam, const Partition& mu, int N, const Rational& kappa) {
    if (static_cast<int>(lam.length()) > N || static_cast<int>(mu.length()) > N)
        throw LengthExceedsN{};
    if (lam != mu) return 0;
    // box product (N + kappa a' - l') (kappa a + l + kappa) /
    //             ((kappa a + l + 1)(N + (a'+1) kappa - l' - 1))
    Rational num = 1, den = 1;
    for (int i = 1; i <= static_cast<int>(lam.length()); ++i)
        for (int j = 1; j <= lam.part(static_cast<std::size_t>(i - 1)); ++j) {
            auto st = lam.box_stats(i, j);
            num *= (kappa * st.arm + st.leg + kappa) * (N + kappa * st.coarm - st.coleg);
            den *= (kappa * st.arm + st.leg + 1) * (N + (st.coarm + 1) * kappa - st.coleg - 1);
        }
    if (den == 0) throw PoleAtKappa(rat_str(kappa));
    return num / den;
}

namespace {

using Expo = std::vector<int>;  // exponent vector in z_1..z_N

// prod_{i != j} (1 - z_i/z_j)^k expanded as a Laurent polynomial
std::map<Expo, long> delta_expansion(int N, int k) {
    std::map<Expo, long> cur;
    cur[Expo(static_cast<std::size_t>(N), 0)] = 1;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            for (int rep = 0; rep < k; ++rep) {
                std::map<Expo, long> nxt;
                for (const auto& [e, c] : cur) {
                    nxt[e] += c;
                    Expo e2 = e;
                    ++e2[static_cast<std::size_t>(i)];
                    --e2[static_cast<std::size_t>(j)];
                    nxt[e2] -= c;
                }
                for (auto it = nxt.begin(); it != nxt.end();)
                    it = (it->second == 0) ? nxt.erase(it) : std::next(it);
                cur = std::move(nxt);
            }
        }
    return cur;
}

// restriction of an m-basis symmetric function to N variables, as monomials
std::map<Expo, Rational> expand_in_n_vars(const SymPoly<Rational>& f, int N) {
    std::map<Expo, Rational> out;
    SymPoly<Rational> fm = f.to_basis(Basis::monomial);
    for (const auto& [lam, c] : fm.terms()) {
        if (static_cast<int>(lam.length()) > N) continue;
        Expo e(lam.parts().begin(), lam.parts().end());
        e.resize(static_cast<std::size_t>(N), 0);
        std::sort(e.begin(), e.end());
        do {
            out[e] += c;
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

}  // namespace

Rational ct_pairing(const SymPoly<Rational>& f, const SymPoly<Rational>& g, int N, int invk) {
    if (N > 4 || invk > 3) throw SizeGuardExceeded("ct_pairing guard: N <= 4, 1/kappa <= 3");
    if (N < 1 || invk < 1) throw OutOfRange("ct_pairing needs N, 1/kappa >= 1");
    auto delta = delta_expansion(N, invk);
    auto fz = expand_in_n_vars(f, N);
    auto gz = expand_in_n_vars(g, N);
    Rational num = 0;
    // CT[ Delta * f(z^{-1}) * g(z) ]: Delta exponent must equal e_f - e_g
    for (const auto& [ef, cf] : fz)
        for (const auto& [eg, cg] : gz) {
            Expo need(ef.size());
            for (std::size_t i = 0; i < ef.size(); ++i) need[i] = ef[i] - eg[i];
            auto it = delta.find(need);
            if (it != delta.end()) num += Rational(it->second) * cf * cg;
        }
    Rational den = Rational(delta.at(Expo(static_cast<std::size_t>(N), 0)));
    return num / den;
}

namespace {

double checked_tgamma(double x) {
    if (x <= 0 && std::abs(x - std::nearbyint(x)) < 1e-12) throw GammaPole(x);
    return std::tgamma(x);
}

}  // namespace

double selberg_constant(int N, double kappa) {
    // c_N(kappa) = 1/(N-1)! prod_{i=1}^{N-1} Gamma((i-N)kappa) Gamma((i+1)kappa+1) / Gamma(kappa+1)
    // (empty product at N = 1)
    double result = 1.0;
    for (int i = 1; i <= N - 1; ++i) {
        result /= static_cast<double>(i);  // builds 1/(N-1)!
        result *= checked_tgamma((i - N) * kappa) * checked_tgamma((i + 1) * kappa + 1.0) /
                  checked_tgamma(kappa + 1.0);
    }
    return result;
}

}  // namespace fockjack
