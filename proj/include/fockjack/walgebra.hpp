#pragma once

#include "fockjack/screening.hpp"

namespace fockjack {

struct KacClass {
    int r, s;           // representative with the partner (p+-r, p--s)
    Rational delta;     // h_{r,s;0}
};

struct KacTable {
    std::vector<KacClass> classes;  // (p+-1)(p--1)/2 of them, distinct deltas
};

KacTable kac_table(const ModelParams& m);

using BetaPoly = Poly<QuadScalar>;
using HPoly = Poly<Rational>;

// omega_n(beta) = prod_{i,j} (beta - beta_{i,j}) / beta_{(n+1)p+-i, 1+j-(n+1)p-}
// over the ((n+1)p+-1) x ((n+1)p--1) grid; when |lam+_{n,0}| <= 24 the
// eps_{alpha_- beta}(Q_{lam+_{n,0}}(kappa_-)) route is computed and compared
BetaPoly omega_poly(const ModelParams& m, int n);

// rewrite a beta-polynomial symmetric under beta -> alpha0 - beta as a
// polynomial in h = beta(beta - alpha0)/2; rational coefficients
HPoly to_h_poly(const ModelParams& m, const BetaPoly& f);

struct RootCertificate {
    bool pass;
    std::string detail;  // failure description; empty on pass
};

struct GPolys {
    HPoly g0, g1, g2;
    RootCertificate cert0, cert1, cert2;
};

// g0 = omega0, g1 = omega1^2, g2 = omega2 as h-polynomials, with root-multiset
// certificates compare exact root multisets over the Kac table and the
// Delta^pm grids (leading constants are never asserted)
GPolys g_polys(const ModelParams& m);

// expected root multisets of g0/g1/g2 (Kac classes and the Delta^pm grids)
std::map<Rational, int> expected_g_roots(const ModelParams& m, int which);

// ---------------------------------------------------------------- Zhu algebra
//
// A_0 is spanned by C[T] and C[T] W_{1,m}; products of the W generators close
// per the 5.3 table with one undetermined polynomial f.  Elements live in the
// free module R + R W_{-1} + R W_0 + R W_{+1} over R = Q[T, F], with F an
// opaque stand-in for f(T).

// bivariate polynomial in (T, F), sparse
using TF = std::map<std::pair<int, int>, Rational>;

struct ZhuElement {
    TF scalar;       // coefficient of 1
    TF w[3];         // coefficients of W_{1,-1}, W_{1,0}, W_{1,1}
};

struct ZhuTable {
    HPoly g1;
    ZhuElement mul(const ZhuElement& x, const ZhuElement& y) const;
    static ZhuElement unit();
    static ZhuElement T();
    static ZhuElement W(int m);  // m in {-1,0,1}
};

struct ZhuConsistency {
    bool commutators_pass;    // table antisymmetrizations equal 2f W_m forms
    bool probes_pass;         // associativity defects are multiples of (F^2 - g1(T))
    std::string detail;
};

ZhuTable zhu_table(const ModelParams& m);
ZhuConsistency zhu_consistency(const ModelParams& m);

// ---------------------------------------------------------------- census
enum class SimpleKind { minimal, Xplus, Xminus };

struct SimpleModuleDescriptor {
    SimpleKind kind;
    int r, s;
    Rational delta;
    int lowest_dim;  // 1 or 2
};

std::vector<SimpleModuleDescriptor> simple_census(const ModelParams& m);

struct RepCheck {
    bool pass;
    std::string detail;
};

// builds the 1- or 2-dimensional A_0 module and verifies every zhu relation;
// 2-dimensional case works over Q(phi), phi^2 = g1(delta)
RepCheck rep_check(const ModelParams& m, const SimpleModuleDescriptor& d);

}  // namespace fockjack
