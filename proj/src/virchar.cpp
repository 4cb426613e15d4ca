#include "fockjack/virchar.hpp"

#include "fockjack/screening.hpp"

#include <array>
#include <set>
#include <sstream>

namespace fockjack {

namespace {

bool integer_diff(const Rational& a, const Rational& b, long long& out) {
    Rational d = a - b;
    if (d.get_den() != 1) return false;
    if (!d.get_num().fits_slong_p()) throw OutOfRange("character shift too large");
    out = d.get_num().get_si();
    return true;
}

}  // namespace

long long CharSeries::coeff_at(const Rational& h) const {
    if (coeffs_.empty()) return 0;
    long long k;
    if (!integer_diff(h, offset_, k)) return 0;
    if (k < 0 || k >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void CharSeries::add_at(const Rational& h, long long c) {
    if (c == 0) return;
    if (coeffs_.empty()) {
        offset_ = h;
        coeffs_.assign(1, c);
        return;
    }
    long long k;
    if (!integer_diff(h, offset_, k))
        throw CharacterMismatch("adding q^" + rat_str(h) + " to a series anchored at q^" +
                                rat_str(offset_) + ": offsets differ non-integrally");
    if (k < 0) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(-k), 0);
        offset_ = h;
        k = 0;
    }
    if (k >= static_cast<long long>(coeffs_.size()))
        coeffs_.resize(static_cast<std::size_t>(k) + 1, 0);
    coeffs_[static_cast<std::size_t>(k)] += c;
    trim();
}

void CharSeries::add(const CharSeries& other, long long mult) {
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        if (other.coeffs_[k] != 0)
            add_at(other.offset_ + Rational(static_cast<long>(k)), other.coeffs_[k] * mult);
}

void CharSeries::truncate_above(const Rational& window) {
    while (!coeffs_.empty() &&
           offset_ + Rational(static_cast<long>(coeffs_.size() - 1)) > window)
        coeffs_.pop_back();
    trim();
}

bool CharSeries::aligned_with(const CharSeries& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return true;
    long long k;
    return integer_diff(offset_, other.offset_, k);
}

void CharSeries::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        offset_ += Rational(static_cast<long>(lead));
    }
    if (coeffs_.empty()) offset_ = 0;
}

std::string CharSeries::str(std::size_t max_terms) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t k = 0; k < coeffs_.size() && shown < max_terms; ++k) {
        if (coeffs_[k] == 0) continue;
        if (shown) os << " + ";
        os << coeffs_[k] << "*q^(" << rat_str(offset_ + Rational(static_cast<long>(k))) << ")";
        ++shown;
    }
    if (shown == max_terms) os << " + ...";
    return os.str();
}

CharSeries fock_character(const ModelParams& m, int r, int s, int n, int L) {
    if (L > 60) throw SizeGuardExceeded("fock_character guard: L <= 60");
    auto p = partition_numbers(L);
    std::vector<long long> coeffs(p.begin(), p.end());
    return CharSeries(m.h_n(r, s, n), std::move(coeffs));
}

CharSeries fock_character_window(const ModelParams& m, int r, int s, int n,
                                 const Rational& window) {
    Rational h = m.h_n(r, s, n);
    Rational span = window - h;
    if (span < 0) return CharSeries();
    long orders = mpz_class(span.get_num() / span.get_den()).get_si();
    if (orders > 200) throw SizeGuardExceeded("character window spans more than 200 orders");
    auto p = partition_numbers(static_cast<int>(orders));
    std::vector<long long> coeffs(p.begin(), p.end());
    return CharSeries(h, std::move(coeffs));
}

namespace {

// scan k-range generators until the weight leaves the window
void collect(const ModelParams& m, SocleComponent& comp,
             const std::function<std::array<int, 3>(int)>& label, int kmin,
             const Rational& window) {
    // lowest weights grow quadratically in k; a linear scan with a generous
    // horizon is asserted sufficient by the callers' window checks
    long horizon = 0;
    {
        Rational w = window;
        if (w < 0) w = 0;
        horizon = 2 * mpz_class(w.get_num() / w.get_den()).get_si() + 64;
    }
    for (int k = kmin; k <= kmin + horizon; ++k) {
        auto lab = label(k);
        if (m.h_n(lab[0], lab[1], lab[2]) <= window) comp.labels.push_back(lab);
    }
}

}  // namespace

SocleData socle_constituents_window(const ModelParams& m, int r, int s, int n,
                                    const Rational& window) {
    if (r < 1 || r > m.pp || s < 1 || s > m.pm)
        throw OutOfRange("socle_constituents needs 1<=r<=p+, 1<=s<=p-");
    SocleData d;
    d.r = r;
    d.s = s;
    d.n = n;
    int an = std::abs(n);
    int pp = m.pp, pm = m.pm;
    if (r < pp && s < pm) {
        d.which = SocleCase::I;
        int a = n >= 0 ? 0 : 1;
        SocleComponent s1{"S1", {}}, s2a{"S2a", {}}, s2b{"S2b", {}}, s3{"S3", {}};
        collect(m, s1, [&](int k) { return std::array<int, 3>{r, pm - s, an + 2 * k + 1}; }, 0, window);
        collect(m, s2a, [&](int k) { return std::array<int, 3>{r, s, an + 2 * k}; }, a, window);
        collect(m, s2b, [&](int k) { return std::array<int, 3>{pp - r, pm - s, an + 2 * k}; }, 1 - a,
                window);
        collect(m, s3, [&](int k) { return std::array<int, 3>{pp - r, s, an + 2 * k + 1}; }, 0, window);
        d.components = {s1, s2a, s2b, s3};
    } else if (r == pp && s < pm) {
        d.which = SocleCase::IIplus;
        int a = n >= 1 ? 0 : 1;
        SocleComponent s1{"S1", {}}, s2{"S2", {}};
        collect(m, s1, [&](int k) { return std::array<int, 3>{pp, pm - s, an + 2 * k + 1}; }, 0, window);
        collect(m, s2, [&](int k) { return std::array<int, 3>{pp, s, an + 2 * k}; }, a, window);
        d.components = {s1, s2};
    } else if (r < pp && s == pm) {
        d.which = SocleCase::IIminus;
        // a = 1 iff n >= 0: starting S2 at k = 0 when n = 0 would put the
        // minimal weight twice, contradicting dim F[0] = 1
        int a = n >= 0 ? 1 : 0;
        SocleComponent s1{"S1", {}}, s2{"S2", {}};
        collect(m, s1, [&](int k) { return std::array<int, 3>{r, pm, an + 2 * k}; }, 0, window);
        collect(m, s2, [&](int k) { return std::array<int, 3>{pp - r, pm, an + 2 * k - 1}; }, a, window);
        d.components = {s1, s2};
    } else {
        d.which = SocleCase::III;
        SocleComponent s1{"S1", {}};
        collect(m, s1, [&](int k) { return std::array<int, 3>{pp, pm, an + 2 * k}; }, 0, window);
        d.components = {s1};
    }
    return d;
}

SocleData socle_constituents(const ModelParams& m, int r, int s, int n, int L) {
    return socle_constituents_window(m, r, s, n, m.h_n(r, s, n) + L);
}

SimpleCharacters::SimpleCharacters(const ModelParams& m, int L) : model_(m), L_(L) {
    if (L > 40) throw SizeGuardExceeded("solver guard: L <= 40");
    // global window: every weight reachable from any h_{r,s;n} with small n
    Rational maxoff(0);
    for (int r = 1; r <= m.pp; ++r)
        for (int s = 1; s <= m.pm; ++s)
            for (int n = -4; n <= 4; ++n) maxoff = std::max(maxoff, m.h_n(r, s, n));
    window_ = maxoff + L;
    // canonical label per weight: scan |n| ascending so low-lying labels win
    for (int an = 0;; ++an) {
        bool all_above = true;
        for (int sign = 0; sign < (an == 0 ? 1 : 2); ++sign) {
            int n = sign == 0 ? an : -an;
            for (int r = 1; r <= m.pp; ++r)
                for (int s = 1; s <= m.pm; ++s) {
                    Rational h = m.h_n(r, s, n);
                    if (h <= window_) {
                        all_above = false;
                        label_of_.emplace(h, std::array<int, 3>{r, s, n});
                    }
                }
        }
        if (an > 4 && all_above) break;
    }
}

const CharSeries& SimpleCharacters::solve(const Rational& h) const {
    auto it = solved_.find(h);
    if (it != solved_.end()) return it->second;
    auto lab = label_of_.find(h);
    if (lab == label_of_.end())
        throw OutOfRange("no Fock label found for weight " + rat_str(h));
    if (in_progress_.count(h))
        throw TriangularityViolated("cyclic dependency at weight " + rat_str(h));
    in_progress_.insert(h);
    auto [r, s, n] = lab->second;

    // solve against the fixed global window so the recursion never needs
    // coefficients that were truncated away
    CharSeries ch = fock_character_window(model_, r, s, n, window_);
    SocleData soc = socle_constituents_window(model_, r, s, n, window_);
    int own_count = 0;
    std::vector<Rational> others;
    for (const auto& comp : soc.components)
        for (const auto& labc : comp.labels) {
            Rational hc = model_.h_n(labc[0], labc[1], labc[2]);
            if (hc == h) {
                ++own_count;
            } else {
                if (hc < h)
                    throw TriangularityViolated("constituent below the module's own weight at " +
                                                rat_str(h));
                others.push_back(hc);
            }
        }
    if (own_count != 1)
        throw TriangularityViolated("minimal weight multiplicity " + std::to_string(own_count) +
                                    " in F_{" + std::to_string(r) + "," + std::to_string(s) + ";" +
                                    std::to_string(n) + "}");
    for (const Rational& hc : others) ch.add(solve(hc), -1);
    in_progress_.erase(h);
    for (long long c : ch.coeffs())
        if (c < 0)
            throw NegativeCoefficient("ch L(" + rat_str(h) + ") has a negative coefficient");
    if (ch.coeff_at(h) != 1)
        throw TriangularityViolated("leading coefficient of ch L(" + rat_str(h) + ") is not 1");
    auto [pos, ok] = solved_.emplace(h, std::move(ch));
    (void)ok;
    return pos->second;
}

const CharSeries& SimpleCharacters::at(const Rational& h) const { return solve(h); }

CharSeries SimpleCharacters::sum_over(const std::vector<Rational>& weights) const {
    CharSeries tot;
    for (const Rational& h : weights) {
        CharSeries c = at(h);
        tot.add(c);
    }
    return tot;
}

SimpleCharacters solve_simple_characters(const ModelParams& m, int L) {
    SimpleCharacters solver(m, L);
    // re-verify every socle equation in a window of labels
    for (int n = -3; n <= 3; ++n)
        for (int r = 1; r <= m.pp; ++r)
            for (int s = 1; s <= m.pm; ++s) {
                CharSeries expect = fock_character(m, r, s, n, L);
                Rational window = m.h_n(r, s, n) + L;
                SocleData soc = socle_constituents(m, r, s, n, L);
                CharSeries tot;
                for (const auto& comp : soc.components)
                    for (const auto& lab : comp.labels) {
                        CharSeries c = solver.at(m.h_n(lab[0], lab[1], lab[2]));
                        c.truncate_above(window);
                        tot.add(c);
                    }
                if (tot != expect)
                    throw CharacterMismatch("socle sum fails for F_{" + std::to_string(r) + "," +
                                            std::to_string(s) + ";" + std::to_string(n) + "}");
            }
    return solver;
}

CharSeries felder_euler(const ModelParams& m, int r, int s, int L) {
    if (r < 1 || r >= m.pp || s < 1 || s > m.pm)
        throw OutOfRange("felder_euler needs 1 <= r < p+, 1 <= s <= p-");
    Rational window = m.h_n(r, s, 0) + L;
    CharSeries tot;
    // lowest weights in both families grow quadratically; the horizon below
    // vastly exceeds the first index where they leave the window, and terms
    // outside the window contribute nothing
    int horizon = 2 * L + 64;
    for (int k = -horizon; k <= horizon; ++k) {
        if (m.h_n(r, s, 2 * k) <= window) tot.add(fock_character_window(m, r, s, 2 * k, window), +1);
        if (m.h_n(m.pp - r, s, 2 * k + 1) <= window)
            tot.add(fock_character_window(m, m.pp - r, s, 2 * k + 1, window), -1);
    }
    tot.truncate_above(window);
    return tot;
}

namespace {

void scan_labels(const ModelParams& m, std::vector<Rational>& out,
                 const std::function<std::array<int, 3>(int)>& label, int kmin,
                 const Rational& window) {
    long horizon = 0;
    {
        Rational w = window;
        if (w < 0) w = 0;
        horizon = 2 * mpz_class(w.get_num() / w.get_den()).get_si() + 64;
    }
    for (int k = kmin; k <= kmin + horizon; ++k) {
        auto lab = label(k);
        Rational h = m.h_n(lab[0], lab[1], lab[2]);
        if (h <= window) out.push_back(h);
    }
}

std::vector<Rational> s1_weights(const ModelParams& m, int r, int s, int n,
                                 const Rational& window) {
    std::vector<Rational> out;
    int an = std::abs(n);
    if (s == m.pm && r < m.pp) {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, m.pm, an + 2 * k}; }, 0, window);
    } else if (r == m.pp && s < m.pm) {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{m.pp, m.pm - s, an + 2 * k + 1}; },
                    0, window);
    } else if (r == m.pp && s == m.pm) {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{m.pp, m.pm, an + 2 * k}; }, 0,
                    window);
    } else {
        throw OutOfRange("s1_weights is for boundary rows only");
    }
    return out;
}

std::vector<Rational> multiset_intersection(std::vector<Rational> a, std::vector<Rational> b) {
    std::vector<Rational> out;
    for (const Rational& x : a) {
        auto it = std::find(b.begin(), b.end(), x);
        if (it != b.end()) {
            b.erase(it);
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> kernel_weights(const ModelParams& m, int r, int s, int n, char sign,
                                     const Rational& window) {
    std::vector<Rational> out;
    int pp = m.pp, pm = m.pm;
    if (sign == '+') {
        if (r < 1 || r >= pp) throw OutOfRange("K+ needs 1 <= r < p+");
        if (n >= 0) {
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, n + 2 * k - 1}; }, 1,
                        window);
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, s, n + 2 * (k - 1)}; }, 1,
                        window);
        } else {
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, -n + 2 * k - 1}; },
                        1, window);
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, s, -n + 2 * k}; }, 1, window);
        }
        return out;
    }
    if (s < 1 || s >= pm) throw OutOfRange("K- needs 1 <= s < p-");
    if (n >= 1) {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, n + 2 * k - 1}; }, 1,
                    window);
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{pp - r, pm - s, n + 2 * k}; }, 1,
                    window);
    } else {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, -n + 2 * k - 1}; }, 1,
                    window);
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{pp - r, pm - s, -n + 2 * (k - 1)}; },
                    1, window);
    }
    return out;
}

std::vector<Rational> image_weights(const ModelParams& m, int r, int s, int n, char sign,
                                    const Rational& window) {
    // ambient F_{r,s;n}.  S+ raises the Fock index (image came from n-1); S-
    // lowers it (came from n+1), so the two directions branch on opposite
    // neighbours
    std::vector<Rational> out;
    int pp = m.pp, pm = m.pm;
    int src = sign == '+' ? n - 1 : n + 1;
    if (sign == '+') {
        if (src >= 0) {
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, src + 2 * k}; }, 1,
                        window);
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, s, src + 2 * k - 1}; }, 1,
                        window);
        } else {
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, -src + 2 * (k - 1)}; },
                        1, window);
            scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, s, -src + 2 * k - 1}; }, 1,
                        window);
        }
        return out;
    }
    if (src >= 1) {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, src + 2 * (k - 1)}; }, 1,
                    window);
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{pp - r, pm - s, src + 2 * k - 1}; },
                    1, window);
    } else {
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{r, pm - s, -src + 2 * k}; }, 1,
                    window);
        scan_labels(m, out, [&](int k) { return std::array<int, 3>{pp - r, pm - s, -src + 2 * k - 1}; },
                    1, window);
    }
    return out;
}

std::vector<Rational> kn_weights(const ModelParams& m, int r, int s, int n,
                                 const Rational& window) {
    if (r == m.pp || s == m.pm) return s1_weights(m, r, s, n, window);
    return multiset_intersection(kernel_weights(m, r, s, n, '+', window),
                                 kernel_weights(m, r, s, n, '-', window));
}

std::vector<Rational> xn_weights(const ModelParams& m, int r, int s, int n,
                                 const Rational& window) {
    if (r == m.pp || s == m.pm) return s1_weights(m, r, s, n, window);
    return multiset_intersection(image_weights(m, r, s, n, '+', window),
                                 image_weights(m, r, s, n, '-', window));
}

KxCertificate kx_characters(const ModelParams& m, int r, int s, char sign, int L) {
    SimpleCharacters solver(m, L);
    return kx_characters(solver, r, s, sign, L);
}

KxCertificate kx_characters(const SimpleCharacters& solver, int r, int s, char sign, int L) {
    const ModelParams& m = solver.model();
    if (r < 1 || r > m.pp || s < 1 || s > m.pm) throw OutOfRange("kx needs Kac-range labels");
    Rational base = extended_weight(m, sign, r, s, 0).delta;
    if (sign == '+') base = std::min(base, m.h_n(r, s, 0));
    Rational window = base + L;

    KxCertificate cert;
    // route (i): sum over soliton sectors
    for (int n = 0;; ++n) {
        Rational d = extended_weight(m, sign, r, s, n).delta;
        if (d > window && n > 2) break;
        if (d <= window) {
            CharSeries c = solver.at(d);
            c.truncate_above(window);
            cert.route_modules.add(c, sector_dimension(sign, n));
        }
        if (n > 4 * L + 64) break;
    }
    // route (ii): 4.2 lists summed over the even/odd Fock family
    int parity = sign == '+' ? 0 : 1;
    int horizon = 2 * L + 64;
    for (int n = -horizon; n <= horizon; ++n) {
        if (((n % 2) + 2) % 2 != parity) continue;
        for (const Rational& h : xn_weights(m, r, s, n, window)) {
            CharSeries c = solver.at(h);
            c.truncate_above(window);
            cert.route_sum.add(c);
        }
    }
    cert.pass = (cert.route_sum == cert.route_modules);
    // kernel side and the exact sequence
    for (int n = -horizon; n <= horizon; ++n) {
        if (((n % 2) + 2) % 2 != parity) continue;
        for (const Rational& h : kn_weights(m, r, s, n, window)) {
            CharSeries c = solver.at(h);
            c.truncate_above(window);
            cert.kernel_char.add(c);
        }
    }
    CharSeries expect = cert.route_modules;
    if (sign == '+' && r < m.pp && s < m.pm) {
        CharSeries l = solver.at(m.h_n(r, s, 0));
        l.truncate_above(window);
        expect.add(l);
    }
    cert.exact_sequence_pass = (cert.kernel_char == expect);
    if (!cert.pass) cert.detail += "X routes differ; ";
    if (!cert.exact_sequence_pass) cert.detail += "K vs X exact-sequence identity failed; ";
    return cert;
}

}  // namespace fockjack
