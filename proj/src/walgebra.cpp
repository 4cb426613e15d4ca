#include "fockjack/walgebra.hpp"

#include <mutex>
#include <set>
#include <sstream>

namespace fockjack {

KacTable kac_table(const ModelParams& m) {
    KacTable t;
    std::set<std::pair<int, int>> seen;
    for (int r = 1; r < m.pp; ++r)
        for (int s = 1; s < m.pm; ++s) {
            if (seen.count({r, s})) continue;
            seen.insert({r, s});
            seen.insert({m.pp - r, m.pm - s});
            t.classes.push_back({r, s, m.h(r, s)});
        }
    return t;
}

BetaPoly omega_poly(const ModelParams& m, int n) {
    if (n > 2) throw DegreeGuardExceeded("omega_poly guard: n <= 2");
    if (n < 0) throw OutOfRange("omega_poly needs n >= 0");
    int I = (n + 1) * m.pp - 1, J = (n + 1) * m.pm - 1;
    BetaPoly num{QuadScalar(1)};
    QuadScalar den(1);
    for (int i = 1; i <= I; ++i)
        for (int j = 1; j <= J; ++j) {
            num *= BetaPoly(std::vector<QuadScalar>{-m.beta(i, j), QuadScalar(1)});
            den *= m.beta((n + 1) * m.pp - i, 1 + j - (n + 1) * m.pm);
        }
    BetaPoly grid = num * den.inverse();

    // second route: the closed evaluation product over the boxes of
    // lam+_{n,0} at X = alpha_- beta, always available
    Partition lam = lambda_plus(m, n, 0);
    Poly<QuadScalar> X(std::vector<QuadScalar>{QuadScalar(0), m.alpha_minus});
    Poly<QuadScalar> boxes = eval_Q_closed_poly(lam, X, QuadScalar(m.kappa_minus));
    if (!(boxes == grid))
        throw TwoRouteMismatch("omega_" + std::to_string(n) +
                               " grid product disagrees with the closed box product");

    // third route within the guard: eps-evaluation of the Jack polynomial
    if (lam.degree() <= 24 && dominance_ideal_size(lam) <= 200) {
        const auto& jp = jack_at(lam, m.kappa_minus);
        SymPoly<QuadScalar> Qq(Basis::power);
        SymPoly<Rational> qp = jp.Q.to_basis(Basis::power);
        for (const auto& [mu, c] : qp.terms()) Qq.add_term(mu, QuadScalar(c));
        Poly<QuadScalar> route2 = Qq.eval_eps_poly(X);
        if (!(route2 == grid))
            throw TwoRouteMismatch("omega_" + std::to_string(n) +
                                   " grid product disagrees with the eps(Q) route");
    }
    return grid;
}

HPoly to_h_poly(const ModelParams& m, const BetaPoly& f) {
    // write f = A(h) + B(h) beta using beta^2 = 2h + alpha0 beta
    Poly<QuadScalar> A, B;
    Poly<QuadScalar> two_h(std::vector<QuadScalar>{QuadScalar(0), QuadScalar(2)});
    for (long k = f.degree(); k >= 0; --k) {
        Poly<QuadScalar> newA = B * two_h;
        Poly<QuadScalar> newB = A + B * Poly<QuadScalar>(m.alpha0);
        A = newA + Poly<QuadScalar>(f.coeff(static_cast<std::size_t>(k)));
        B = newB;
    }
    if (!B.is_zero()) throw NotSymmetric{};
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(A.degree() + 1));
    for (long k = 0; k <= A.degree(); ++k) {
        const QuadScalar& c = A.coeff(static_cast<std::size_t>(k));
        if (!c.is_rational()) throw NotSymmetric{};
        out.push_back(c.a());
    }
    return HPoly(std::move(out));
}

std::map<Rational, int> expected_g_roots(const ModelParams& m, int which) {
    std::map<Rational, int> roots;
    auto add = [&roots](const Rational& x, int mult) { roots[x] += mult; };
    if (which == 0) {
        for (const auto& cls : kac_table(m).classes) add(cls.delta, 1);
        return roots;
    }
    auto dplus = [&](int r, int s) { return extended_weight(m, '+', r, s, 0).delta; };
    auto dminus = [&](int r, int s) { return extended_weight(m, '-', r, s, 0).delta; };
    if (which == 1) {
        for (const auto& cls : kac_table(m).classes) add(cls.delta, 4);
        for (int i = 1; i < m.pp; ++i)
            for (int j = 1; j < m.pm; ++j) add(dplus(i, j), 2);
        for (int i = 1; i < m.pp; ++i) add(dplus(i, m.pm), 2);
        for (int j = 1; j < m.pm; ++j) add(dplus(m.pp, j), 2);
        add(dplus(m.pp, m.pm), 1);
        return roots;
    }
    if (which == 2) {
        for (const auto& cls : kac_table(m).classes) add(cls.delta, 3);
        for (int i = 1; i < m.pp; ++i)
            for (int j = 1; j < m.pm; ++j) {
                add(dplus(i, j), 2);
                add(dminus(i, j), 1);
            }
        for (int i = 1; i < m.pp; ++i) {
            add(dplus(i, m.pm), 2);
            add(dminus(i, m.pm), 1);
        }
        for (int j = 1; j < m.pm; ++j) {
            add(dplus(m.pp, j), 2);
            add(dminus(m.pp, j), 1);
        }
        add(dplus(m.pp, m.pm), 1);
        add(dminus(m.pp, m.pm), 1);
        return roots;
    }
    throw OutOfRange("expected_g_roots: which in {0,1,2}");
}

namespace {

RootCertificate root_certificate(const HPoly& g, const std::map<Rational, int>& roots) {
    long total = 0;
    for (const auto& [x, mult] : roots) total += mult;
    if (total != g.degree()) {
        std::ostringstream os;
        os << "degree " << g.degree() << " != multiset size " << total;
        return {false, os.str()};
    }
    HPoly f = g;
    for (const auto& [x, mult] : roots) {
        HPoly lin(std::vector<Rational>{-x, 1});
        for (int i = 0; i < mult; ++i) {
            auto [q, r] = divmod(f, lin);
            if (!r.is_zero())
                return {false, "root " + rat_str(x) + " has multiplicity < " + std::to_string(mult)};
            f = q;
        }
        if (!f.is_zero() && f.eval(x) == 0)
            return {false, "root " + rat_str(x) + " has extra multiplicity"};
    }
    if (f.degree() != 0) return {false, "leftover factor of positive degree"};
    return {true, ""};
}

}  // namespace

GPolys g_polys(const ModelParams& m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, GPolys> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m.pp, m.pm});
    if (it != cache.end()) return it->second;

    GPolys g;
    BetaPoly w0 = omega_poly(m, 0);
    BetaPoly w1 = omega_poly(m, 1);
    BetaPoly w2 = omega_poly(m, 2);
    g.g0 = to_h_poly(m, w0);
    g.g1 = to_h_poly(m, w1 * w1);
    g.g2 = to_h_poly(m, w2);
    g.cert0 = root_certificate(g.g0, expected_g_roots(m, 0));
    g.cert1 = root_certificate(g.g1, expected_g_roots(m, 1));
    g.cert2 = root_certificate(g.g2, expected_g_roots(m, 2));
    cache.emplace(std::make_pair(m.pp, m.pm), g);
    return g;
}

// ---------------------------------------------------------------- Zhu algebra

namespace {

TF tf_const(const Rational& c) {
    TF t;
    if (c != 0) t[{0, 0}] = c;
    return t;
}

TF tf_from_h(const HPoly& p) {
    TF t;
    for (long k = 0; k <= p.degree(); ++k)
        if (p.coeff(static_cast<std::size_t>(k)) != 0)
            t[{static_cast<int>(k), 0}] = p.coeff(static_cast<std::size_t>(k));
    return t;
}

void tf_add(TF& x, const TF& y, const Rational& scale = 1) {
    for (const auto& [k, c] : y) {
        Rational v = (x[k] += c * scale);
        if (v == 0) x.erase(k);
    }
}

TF tf_mul(const TF& x, const TF& y) {
    TF out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            auto key = std::make_pair(kx.first + ky.first, kx.second + ky.second);
            Rational v = (out[key] += cx * cy);
            if (v == 0) out.erase(key);
        }
    return out;
}

// reduce modulo F^2 = g1(T); zero iff the element lies in the ideal (F^2 - g1)
TF tf_reduce_mod(const TF& x, const HPoly& g1) {
    TF cur = x;
    TF g1t = tf_from_h(g1);
    for (;;) {
        auto it = std::find_if(cur.begin(), cur.end(),
                               [](const auto& kv) { return kv.first.second >= 2; });
        if (it == cur.end()) return cur;
        auto [deg, c] = std::make_pair(it->first, it->second);
        cur.erase(it);
        TF repl;
        repl[{deg.first, deg.second - 2}] = c;
        tf_add(cur, tf_mul(repl, g1t));
    }
}

}  // namespace

ZhuElement ZhuTable::unit() {
    ZhuElement e;
    e.scalar = tf_const(1);
    return e;
}
ZhuElement ZhuTable::T() {
    ZhuElement e;
    e.scalar[{1, 0}] = 1;
    return e;
}
ZhuElement ZhuTable::W(int m) {
    ZhuElement e;
    e.w[m + 1] = tf_const(1);
    return e;
}

ZhuElement ZhuTable::mul(const ZhuElement& x, const ZhuElement& y) const {
    TF F;
    F[{0, 1}] = 1;
    TF g1t = tf_from_h(g1);
    ZhuElement out;
    // scalar part of x times y
    tf_add(out.scalar, tf_mul(x.scalar, y.scalar));
    for (int m = 0; m < 3; ++m) tf_add(out.w[m], tf_mul(x.scalar, y.w[m]));
    // x.w[m] W_m times y: W_m y.scalar + W_m W_m'
    for (int mi = 0; mi < 3; ++mi) {
        if (x.w[mi].empty()) continue;
        tf_add(out.w[mi], tf_mul(x.w[mi], y.scalar));
        for (int mj = 0; mj < 3; ++mj) {
            if (y.w[mj].empty()) continue;
            TF c = tf_mul(x.w[mi], y.w[mj]);
            // product table W_{mi-1} W_{mj-1}
            int a = mi - 1, b = mj - 1;
            if (a == -1 && b == 0) tf_add(out.w[0], tf_mul(c, F), -1);
            if (a == -1 && b == 1) {
                tf_add(out.scalar, tf_mul(c, g1t), -1);
                tf_add(out.w[1], tf_mul(c, F), -1);
            }
            if (a == 0 && b == -1) tf_add(out.w[0], tf_mul(c, F));
            if (a == 0 && b == 0) tf_add(out.scalar, tf_mul(c, g1t));
            if (a == 0 && b == 1) tf_add(out.w[2], tf_mul(c, F), -1);
            if (a == 1 && b == -1) {
                tf_add(out.scalar, tf_mul(c, g1t), -1);
                tf_add(out.w[1], tf_mul(c, F));
            }
            if (a == 1 && b == 0) tf_add(out.w[2], tf_mul(c, F));
            // W_{-1} W_{-1} = W_{1} W_{1} = 0
        }
    }
    return out;
}

ZhuTable zhu_table(const ModelParams& m) {
    return ZhuTable{g_polys(m).g1};
}

ZhuConsistency zhu_consistency(const ModelParams& m) {
    ZhuTable t = zhu_table(m);
    ZhuConsistency out{true, true, ""};
    auto Wm = ZhuTable::W(-1), W0 = ZhuTable::W(0), Wp = ZhuTable::W(1);
    TF F;
    F[{0, 1}] = 1;

    auto equal = [](const ZhuElement& a, const ZhuElement& b) {
        return a.scalar == b.scalar && a.w[0] == b.w[0] && a.w[1] == b.w[1] && a.w[2] == b.w[2];
    };
    auto comm = [&](const ZhuElement& a, const ZhuElement& b) {
        ZhuElement ab = t.mul(a, b), ba = t.mul(b, a);
        ZhuElement r;
        r.scalar = ab.scalar;
        tf_add(r.scalar, ba.scalar, -1);
        for (int i = 0; i < 3; ++i) {
            r.w[i] = ab.w[i];
            tf_add(r.w[i], ba.w[i], -1);
        }
        return r;
    };
    // [W0, W1] = -2F W1, [W0, W-1] = 2F W-1, [W1, W-1] = 2F W0
    {
        ZhuElement want;
        want.w[2] = tf_mul(tf_const(-2), F);
        if (!equal(comm(W0, Wp), want)) out.commutators_pass = false;
        want = ZhuElement{};
        want.w[0] = tf_mul(tf_const(2), F);
        if (!equal(comm(W0, Wm), want)) out.commutators_pass = false;
        want = ZhuElement{};
        want.w[1] = tf_mul(tf_const(2), F);
        if (!equal(comm(Wp, Wm), want)) out.commutators_pass = false;
        if (!out.commutators_pass) out.detail += "commutator antisymmetrization failed; ";
    }
    // associativity defects must vanish modulo F^2 = g1(T)
    {
        std::vector<ZhuElement> gens{Wm, W0, Wp};
        for (const auto& a : gens)
            for (const auto& b : gens)
                for (const auto& c : gens) {
                    ZhuElement lhs = t.mul(t.mul(a, b), c);
                    ZhuElement rhs = t.mul(a, t.mul(b, c));
                    ZhuElement d;
                    d.scalar = lhs.scalar;
                    tf_add(d.scalar, rhs.scalar, -1);
                    bool zero = tf_reduce_mod(d.scalar, t.g1).empty();
                    for (int i = 0; i < 3; ++i) {
                        d.w[i] = lhs.w[i];
                        tf_add(d.w[i], rhs.w[i], -1);
                        zero = zero && tf_reduce_mod(d.w[i], t.g1).empty();
                    }
                    if (!zero) {
                        out.probes_pass = false;
                        out.detail += "associativity defect outside (F^2 - g1); ";
                    }
                }
    }
    return out;
}

// ---------------------------------------------------------------- census

std::vector<SimpleModuleDescriptor> simple_census(const ModelParams& m) {
    std::vector<SimpleModuleDescriptor> out;
    for (const auto& cls : kac_table(m).classes)
        out.push_back({SimpleKind::minimal, cls.r, cls.s, cls.delta, 1});
    for (int r = 1; r <= m.pp; ++r)
        for (int s = 1; s <= m.pm; ++s)
            out.push_back({SimpleKind::Xplus, r, s, extended_weight(m, '+', r, s, 0).delta, 1});
    for (int r = 1; r <= m.pp; ++r)
        for (int s = 1; s <= m.pm; ++s)
            out.push_back({SimpleKind::Xminus, r, s, extended_weight(m, '-', r, s, 0).delta, 2});
    return out;
}

namespace {

struct Mat2 {
    QuadScalar e[2][2];
    static Mat2 zero() { return Mat2{{{QuadScalar(0), QuadScalar(0)}, {QuadScalar(0), QuadScalar(0)}}}; }
    static Mat2 diag(const QuadScalar& a, const QuadScalar& b) {
        Mat2 m = zero();
        m.e[0][0] = a;
        m.e[1][1] = b;
        return m;
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        Mat2 r = zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) r.e[i][j] += x.e[i][k] * y.e[k][j];
        return r;
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        Mat2 r = zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = x.e[i][j] + y.e[i][j];
        return r;
    }
    friend Mat2 operator*(const Mat2& x, const QuadScalar& c) {
        Mat2 r = zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = x.e[i][j] * c;
        return r;
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!(x.e[i][j] == y.e[i][j])) return false;
        return true;
    }
};

}  // namespace

RepCheck rep_check(const ModelParams& m, const SimpleModuleDescriptor& d) {
    GPolys g = g_polys(m);
    Rational g1d = g.g1.eval(d.delta);
    Rational g2d = g.g2.eval(d.delta);
    if (g2d != 0) return {false, "g2(delta) != 0: delta is not an allowed [T] eigenvalue"};

    if (d.kind != SimpleKind::Xminus) {
        // 1-dimensional: all W act as zero; W0^2 = g1([T]) forces g1(delta) = 0
        if (g1d != 0) return {false, "g1(delta) != 0 but the W generators act trivially"};
        return {true, ""};
    }

    // 2-dimensional: phi^2 = g1(delta), f(delta) := phi must be nonzero
    if (g1d == 0) return {false, "g1(delta) = 0: [W_{1,0}] would act trivially on X-"};
    QuadScalar phi = QuadScalar(Rational(0), Rational(1), g1d);
    QuadScalar G1(g1d), D(d.delta);
    Mat2 T = Mat2::diag(D, D);
    Mat2 W0 = Mat2::diag(-phi, phi);
    Mat2 Wm = Mat2::zero();
    Wm.e[1][0] = QuadScalar(1);  // v- = W_{1,-1} v+
    Mat2 Wp = Mat2::zero();
    Wp.e[0][1] = QuadScalar(-2) * G1;  // fixed so W1 W-1 = -g1 + f W0

    auto fails = [](const char* what) { return RepCheck{false, what}; };
    Mat2 Z = Mat2::zero();
    if (!(Wm * Wm == Z)) return fails("[W-1][W-1] != 0");
    if (!(Wp * Wp == Z)) return fails("[W1][W1] != 0");
    if (!(W0 * W0 == Mat2::diag(G1, G1))) return fails("[W0]^2 != g1");
    if (!(Wm * W0 == Wm * (-phi))) return fails("[W-1][W0] != -f [W-1]");
    if (!(W0 * Wm == Wm * phi)) return fails("[W0][W-1] != f [W-1]");
    if (!(W0 * Wp == Wp * (-phi))) return fails("[W0][W1] != -f [W1]");
    if (!(Wp * W0 == Wp * phi)) return fails("[W1][W0] != f [W1]");
    if (!(Wp * Wm == Mat2::diag(-G1, -G1) + W0 * phi)) return fails("[W1][W-1] != -g1 + f [W0]");
    if (!(Wm * Wp == Mat2::diag(-G1, -G1) + W0 * (-phi))) return fails("[W-1][W1] != -g1 - f [W0]");
    // [T] is central and acts by delta
    if (!(T * W0 == W0 * T && T * Wm == Wm * T && T * Wp == Wp * T)) return fails("[T] not central");
    return {true, ""};
}

}  // namespace fockjack
