#include "fockjack/sympoly.hpp"

#include <mutex>

namespace fockjack {

namespace {

// p_r * m_mu in the monomial basis.  A variable either enters fresh (new part
// r) or merges into an existing part v -> v+r; the coefficient is the
// multiplicity of the changed part in the resulting partition.
std::map<Partition, Rational> p_times_m(int r, const Partition& mu) {
    std::map<Partition, Rational> out;
    {
        Partition nu = mu.with_part(r);
        out[nu] += rat(nu.multiplicity(r));
    }
    std::vector<int> seen;
    for (int v : mu.parts()) {
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
        seen.push_back(v);
        Partition nu = mu.without_part(v).with_part(v + r);
        out[nu] += rat(nu.multiplicity(v + r));
    }
    return out;
}

DegreeTables build_tables(int d) {
    DegreeTables t;
    t.parts = enumerate_partitions(d);
    std::reverse(t.parts.begin(), t.parts.end());  // revlex ascending
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = static_cast<int>(i);

    t.p_to_m.resize(t.parts.size());
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        std::map<Partition, Rational> cur;
        cur[Partition{}] = 1;
        for (int r : t.parts[i].parts()) {
            std::map<Partition, Rational> nxt;
            for (const auto& [mu, c] : cur)
                for (const auto& [nu, k] : p_times_m(r, mu)) nxt[nu] += c * k;
            cur = std::move(nxt);
        }
        for (const auto& [nu, c] : cur)
            if (c != 0) t.p_to_m[i][t.index.at(nu)] = c;
    }

    // m_mu = sum_lam x_lam p_lam solved by back-substitution: p_lam is
    // supported on m_nu with nu >= lam in dominance, so processing lam in
    // revlex-ascending order makes the system triangular.
    t.m_to_p.resize(t.parts.size());
    for (std::size_t tgt = 0; tgt < t.parts.size(); ++tgt) {
        std::map<int, Rational> x;
        for (std::size_t li = 0; li < t.parts.size(); ++li) {
            int lam = static_cast<int>(li);
            Rational acc = 0;
            for (const auto& [nu, xv] : x) {
                auto it = t.p_to_m[static_cast<std::size_t>(nu)].find(lam);
                if (it != t.p_to_m[static_cast<std::size_t>(nu)].end()) acc += xv * it->second;
            }
            Rational want = (li == tgt) ? 1 : 0;
            Rational diff = want - acc;
            if (diff != 0) {
                const Rational& diag = t.p_to_m[li].at(lam);
                x[lam] = diff / diag;
            }
        }
        t.m_to_p[tgt] = std::move(x);
    }
    return t;
}

}  // namespace

const DegreeTables& degree_tables(int d) {
    static std::mutex mu;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, build_tables(d)).first;
    return it->second;
}

}  // namespace fockjack
