#include "fockjack/fock.hpp"

#include <numeric>

namespace fockjack {

ModelParams model(int pp, int pm) {
    if (pp < 2 || pm < 2) throw OutOfRange("p+ and p- must be >= 2");
    if (std::gcd(pp, pm) != 1) throw NotCoprime{};
    ModelParams m;
    m.pp = pp;
    m.pm = pm;
    m.D = rat(2L * pm, pp);
    m.alpha_plus = QuadScalar::sqrt_of(m.D);
    m.alpha_minus = QuadScalar(-2) / m.alpha_plus;
    m.alpha0 = m.alpha_plus + m.alpha_minus;
    m.alpha = m.alpha_plus * QuadScalar(rat(pp));
    m.kappa_plus = rat(pm, pp);
    m.kappa_minus = rat(pp, pm);
    long diff = pm - pp;
    m.c = 1 - rat(6 * diff * diff, static_cast<long>(pp) * pm);
    return m;
}

FockWeight weight(const ModelParams& m, int r, int s, int n) {
    FockWeight w;
    w.r = r;
    w.s = s;
    w.n = n;
    w.beta = m.beta_n(r, s, n);
    w.h = m.h_of_beta(w.beta);
    return w;
}

FockElement heisenberg_apply(const FockElement& v, int n) {
    FockElement out{v.beta, {}};
    for (const auto& [lam, c] : v.terms) {
        if (n < 0) {
            out.add_term(lam.with_part(-n), c);
        } else if (n == 0) {
            out.add_term(lam, c * v.beta);
        } else {
            int mult = lam.multiplicity(n);
            if (mult > 0) out.add_term(lam.without_part(n), c * QuadScalar(rat(n) * mult));
        }
    }
    return out;
}

FockElement virasoro_apply(const ModelParams& m, const FockElement& v, int n) {
    FockElement out{v.beta, {}};
    if (v.is_zero()) return out;
    int g = v.max_grade();
    // :b_{n-k} b_k: with creation modes on the left; a mode b_j with j > g+|n|
    // annihilates every term, so the sum is finite
    int bound = g + std::abs(n) + 1;
    QuadScalar half(rat(1, 2));
    for (int k = -bound; k <= bound; ++k) {
        int a1 = n - k, a2 = k;
        if (a1 > 0 && a2 < 0) std::swap(a1, a2);
        FockElement w = heisenberg_apply(v, a2);
        if (w.is_zero()) continue;
        w = heisenberg_apply(w, a1);
        if (w.is_zero()) continue;
        for (const auto& [lam, c] : w.terms) out.add_term(lam, c * half);
    }
    FockElement lin = heisenberg_apply(v, n);
    QuadScalar coef = m.alpha0 * QuadScalar(rat(n + 1, 2));
    for (const auto& [lam, c] : lin.terms) out.add_term(lam, -(c * coef));
    return out;
}

std::vector<FockElement> singular_space(const ModelParams& m, const QuadScalar& beta, int level) {
    if (level > 12) throw SizeGuardExceeded("singular_space guard: level <= 12");
    std::vector<Partition> basis = enumerate_partitions(level);
    std::vector<Partition> rows1 = enumerate_partitions(level - 1);
    std::vector<Partition> rows2 = level >= 2 ? enumerate_partitions(level - 2) : std::vector<Partition>{};
    std::map<Partition, std::size_t> row_index;
    std::size_t next_row = 0;
    for (const auto& p : rows1) row_index[p] = next_row++;
    for (const auto& p : rows2) row_index[p] = next_row++;

    std::size_t nrows = rows1.size() + rows2.size(), ncols = basis.size();
    std::vector<std::vector<QuadScalar>> A(nrows, std::vector<QuadScalar>(ncols, QuadScalar(0)));
    for (std::size_t j = 0; j < ncols; ++j) {
        FockElement v{beta, {}};
        v.terms.emplace(basis[j], QuadScalar(1));
        FockElement l1 = virasoro_apply(m, v, 1);
        for (const auto& [lam, c] : l1.terms) A[row_index.at(lam)][j] = c;
        if (level >= 2) {
            FockElement l2 = virasoro_apply(m, v, 2);
            for (const auto& [lam, c] : l2.terms) A[row_index.at(lam)][j] = c;
        }
    }

    // kernel by Gauss elimination over Q(sqrt D)
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = nrows;
        for (std::size_t i = rank; i < nrows; ++i)
            if (!A[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == nrows) continue;
        std::swap(A[rank], A[piv]);
        QuadScalar inv = A[rank][col].inverse();
        for (std::size_t j2 = col; j2 < ncols; ++j2) A[rank][j2] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || A[i][col].is_zero()) continue;
            QuadScalar f = A[i][col];
            for (std::size_t j2 = col; j2 < ncols; ++j2) A[i][j2] -= f * A[rank][j2];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<FockElement> kernel;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        FockElement v{beta, {}};
        v.add_term(basis[col], QuadScalar(1));
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v.add_term(basis[pivot_col[i]], -A[i][col]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

QuadScalar contravariant_pair(const ModelParams& m, const FockElement& u, const FockElement& v) {
    if (u.beta != m.alpha0 - v.beta)
        throw OutOfRange("contravariant pairing needs weights beta and alpha0 - beta");
    QuadScalar acc(0);
    for (const auto& [lam, cu] : u.terms) {
        auto it = v.terms.find(lam);
        if (it == v.terms.end()) continue;
        QuadScalar base(lam.z_factor());
        if (lam.length() % 2 == 1) base = -base;
        acc += cu * it->second * base;
    }
    return acc;
}

QuadEps DeformedModel::beta(int r, int s) const {
    QuadEps half_r(QuadScalar(rat(1 - r, 2)), order);
    QuadEps half_s(QuadScalar(rat(1 - s, 2)), order);
    return alpha_plus * half_r + alpha_minus * half_s;
}

QuadEps DeformedModel::h(int r, int s) const {
    QuadEps t1 = kappa_plus * QuadEps(QuadScalar(rat(static_cast<long>(r) * r - 1, 4)), order);
    QuadEps t2(QuadScalar(rat(static_cast<long>(r) * s - 1, 2)), order);
    QuadEps t3 = kappa_minus * QuadEps(QuadScalar(rat(static_cast<long>(s) * s - 1, 4)), order);
    return t1 - t2 + t3;
}

DeformedModel deform(const ModelParams& m, const QuadEps& alpha_plus_series) {
    if (alpha_plus_series.coeff(0) != m.alpha_plus) throw BadConstantTerm{};
    if (alpha_plus_series.order() > 1 && alpha_plus_series.coeff(1).is_zero())
        throw ZeroFirstOrder{};
    DeformedModel d;
    d.pp = m.pp;
    d.pm = m.pm;
    d.order = alpha_plus_series.order();
    d.alpha_plus = alpha_plus_series;
    QuadEps minus_two(QuadScalar(-2), d.order);
    d.alpha_minus = minus_two / d.alpha_plus;  // keeps alpha+ alpha- = -2 to order K
    d.alpha0 = d.alpha_plus + d.alpha_minus;
    QuadEps half(QuadScalar(rat(1, 2)), d.order);
    d.kappa_plus = d.alpha_plus * d.alpha_plus * half;
    d.kappa_minus = d.alpha_minus * d.alpha_minus * half;
    return d;
}

}  // namespace fockjack
