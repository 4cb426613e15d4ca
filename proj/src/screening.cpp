#include "fockjack/screening.hpp"

namespace fockjack {

Partition lambda_plus(const ModelParams& m, int n, int mm) {
    int part = (n - mm + 1) * m.pm - 1;
    int count = (n + mm + 1) * m.pp - 1;
    if (part < 1 || count < 1) throw EmptyPartition("degenerate lambda+_{n,m} label");
    return Partition::rectangle(part, count);
}

Partition lambda_minus(const ModelParams& m, int n, int mm) {
    int part = (n + mm + 1) * m.pp - 1;
    int count = (n - mm + 1) * m.pm - 1;
    if (part < 1 || count < 1) throw EmptyPartition("degenerate lambda-_{n,m} label");
    return Partition::rectangle(part, count);
}

Partition special_partition(SpecialKind kind, const ModelParams& m, int a, int b) {
    switch (kind) {
        case SpecialKind::rect:
            return Partition::rectangle(a, b);
        case SpecialKind::lambda_plus:
            return lambda_plus(m, a, b);
        case SpecialKind::lambda_minus:
            return lambda_minus(m, a, b);
    }
    throw OutOfRange("unknown special partition kind");
}

FockElement singular_vector(const ModelParams& m, char sign, int r, int s) {
    if (r < 1 || s < 1) throw OutOfRange("singular_vector needs r, s >= 1");
    if (r * s > 12) throw SizeGuardExceeded("singular_vector guard: rs <= 12");
    QuadScalar beta = m.beta(-r, -s);
    if (sign == '+') {
        const auto& jp = jack_at(Partition::rectangle(s, r), m.kappa_minus);
        return rho_gamma(jp.Q, QuadScalar(2) / m.alpha_plus, beta);
    }
    if (sign == '-') {
        const auto& jp = jack_at(Partition::rectangle(r, s), m.kappa_plus);
        return rho_gamma(jp.Q, QuadScalar(2) / m.alpha_minus, beta);
    }
    throw OutOfRange("sign must be '+' or '-'");
}

QuadScalar proportionality(const ModelParams& m, int r, int s) {
    if (r * s > 10) throw SizeGuardExceeded("proportionality guard: rs <= 10");
    FockElement plus = singular_vector(m, '+', r, s);
    FockElement minus = singular_vector(m, '-', r, s);
    QuadScalar expected = QuadScalar(b_lambda(Partition::rectangle(s, r), m.kappa_minus));
    if (r * s % 2 == 1) expected = -expected;
    FockElement scaled = minus * expected;
    if (!(scaled == plus))
        throw NotProportional("S+ and S- images of |beta_{r,-s}> differ beyond the stated factor");
    return expected;
}

ExtendedWeight extended_weight(const ModelParams& m, char sign, int r, int s, int n) {
    if (r < 1 || r > m.pp || s < 1 || s > m.pm || n < 0)
        throw OutOfRange("extended_weight needs 1<=r<=p+, 1<=s<=p-, n>=0");
    bool re = (r == m.pp), se = (s == m.pm);
    if (sign == '+') {
        if (re && se) return {m.h_n(m.pp, m.pm, -2 * n), WeightBranch::corner};
        if (!re && se) return {m.h_n(m.pp - r, m.pm, -2 * n - 1), WeightBranch::edge_s};
        if (re && !se) return {m.h_n(m.pp, m.pm - s, 2 * n + 1), WeightBranch::edge_r};
        return {m.h_n(m.pp - r, s, -2 * n - 1), WeightBranch::interior};
    }
    if (sign == '-') {
        if (re && se) return {m.h_n(m.pp, m.pm, -2 * n - 1), WeightBranch::corner};
        if (!re && se) return {m.h_n(m.pp - r, m.pm, -2 * n - 2), WeightBranch::edge_s};
        if (re && !se) return {m.h_n(m.pp, m.pm - s, 2 * n + 2), WeightBranch::edge_r};
        return {m.h_n(m.pp - r, s, -2 * n - 2), WeightBranch::interior};
    }
    throw OutOfRange("sign must be '+' or '-'");
}

int sector_dimension(char sign, int n) {
    return sign == '+' ? 2 * n + 1 : 2 * n + 2;
}

std::vector<SolitonLabel> sector_basis(char sign, int r, int s, int n) {
    if (n < 0) throw OutOfRange("sector needs n >= 0");
    std::vector<SolitonLabel> out;
    int top = sign == '+' ? n : n + 1;
    for (int mm = -n; mm <= top; ++mm) out.push_back({sign, r, s, n, mm});
    return out;
}

namespace {

bool in_sector(const SolitonLabel& w) {
    int top = w.sign == '+' ? w.n : w.n + 1;
    return w.n >= 0 && w.m >= -w.n && w.m <= top;
}

// F-coefficient on the (1,1)+ chain: -b_{lam+_{n,m}}(k-)/b_{lam+_{n,m-1}}(k-)
Rational f_ratio(const ModelParams& m, int n, int mm) {
    Rational bn = b_lambda(lambda_plus(m, n, mm), m.kappa_minus);
    Rational bd = b_lambda(lambda_plus(m, n, mm - 1), m.kappa_minus);
    return -bn / bd;
}

bool is_vacuum_chain(const SolitonLabel& w) { return w.sign == '+' && w.r == 1 && w.s == 1; }

}  // namespace

SolitonCombination frobenius_apply(const ModelParams& m, Frobenius X, const SolitonLabel& w) {
    if (!in_sector(w)) throw OutOfSector("label outside the soliton sector");
    int top = w.sign == '+' ? w.n : w.n + 1;
    SolitonCombination out;
    switch (X) {
        case Frobenius::E:
            if (w.m < top) out[{w.sign, w.r, w.s, w.n, w.m + 1}] = 1;
            return out;
        case Frobenius::F:
            if (w.m > -w.n)
                out[{w.sign, w.r, w.s, w.n, w.m - 1}] =
                    is_vacuum_chain(w) ? f_ratio(m, w.n, w.m) : Rational(1);
            return out;
        case Frobenius::H: {
            // H = EF - FE, diagonal on each chain
            Rational ef = 0, fe = 0;
            if (w.m > -w.n) ef = is_vacuum_chain(w) ? f_ratio(m, w.n, w.m) : Rational(1);
            if (w.m < top) fe = is_vacuum_chain(w) ? f_ratio(m, w.n, w.m + 1) : Rational(1);
            Rational diag = ef - fe;
            if (diag != 0) out[w] = diag;
            return out;
        }
    }
    throw OutOfRange("unknown Frobenius map");
}

StructConst struct_const(const ModelParams& m, char kind, int n, int k) {
    if (n < 0 || k < -1) throw OutOfRange("struct_const needs n >= 0, k >= -1");
    Partition lam;
    Rational kappa, X, prefactor = 1;
    try {
        if (kind == 'a') {
            lam = lambda_plus(m, n + k, 1 - n);
            kappa = m.kappa_minus;
            X = rat(2L * (2 * m.pp - 1));
        } else if (kind == 'b') {
            lam = lambda_minus(m, n + k, n - 1);
            kappa = m.kappa_plus;
            X = rat(2L * (2 * m.pm - 1));
            Rational bn = b_lambda(lambda_plus(m, 1, 1), m.kappa_minus);
            Rational bd = b_lambda(lambda_plus(m, n, n), m.kappa_minus);
            prefactor = bn / bd;
            if ((k + 1) % 2 == 1) prefactor = -prefactor;
        } else {
            throw OutOfRange("struct_const kind must be 'a' or 'b'");
        }
    } catch (const EmptyPartition& e) {
        throw OutOfRange(e.what());
    }

    // closed route: eps_X(Q_lam) as the box product
    Rational num = 1, den = 1;
    for (int i = 1; i <= static_cast<int>(lam.length()); ++i)
        for (int j = 1; j <= lam.part(static_cast<std::size_t>(i - 1)); ++j) {
            auto st = lam.box_stats(i, j);
            num *= X + kappa * st.coarm - st.coleg;
            den *= kappa * (st.arm + 1) + st.leg;
        }
    StructConst result{prefactor * num / den, false};

    // the eval route needs the full Jack polynomial; rectangles with a large
    // dominance ideal (wide shapes) are out of reach for Gram-Schmidt
    if (lam.degree() <= 24 && dominance_ideal_size(lam) <= 200) {
        const auto& jp = jack_at(lam, kappa);
        Rational route2 = prefactor * jp.Q.eval_eps(X);
        if (route2 != result.value)
            throw TwoRouteMismatch("struct_const eps-evaluation route disagrees at " + lam.str());
        result.two_route_checked = true;
    }
    return result;
}

}  // namespace fockjack
