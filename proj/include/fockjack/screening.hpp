#pragma once

#include "fockjack/fock.hpp"
#include "fockjack/jack.hpp"

namespace fockjack {

// lambda^+_{n,m} = ((n-m+1)p_- - 1)^{(n+m+1)p_+ - 1}, lambda^- its conjugate family
Partition lambda_plus(const ModelParams& m, int n, int mm);
Partition lambda_minus(const ModelParams& m, int n, int mm);

enum class SpecialKind { rect, lambda_plus, lambda_minus };
Partition special_partition(SpecialKind kind, const ModelParams& m, int a, int b);

// sign +: rho_{2/alpha+}(Q_{(s)^r}(kappa_-)) at |beta_{-r,-s}>, the S+^{[r]}-image
// of |beta_{r,-s}>; sign -: rho_{2/alpha-}(Q_{(r)^s}(kappa_+)) at the same weight.
// Either is the grade-rs singular vector of F_{-r,-s} (lowest weight h_{r,s}).
FockElement singular_vector(const ModelParams& m, char sign, int r, int s);

// singular_vector('+') == (-1)^{rs} b_{(s)^r}(kappa_-) singular_vector('-');
// returns the exact ratio, throws NotProportional otherwise
QuadScalar proportionality(const ModelParams& m, int r, int s);

// the Delta^pm_{r,s;n} table of extended conformal weights
enum class WeightBranch { corner, edge_s, edge_r, interior };
struct ExtendedWeight {
    Rational delta;
    WeightBranch branch;
};
ExtendedWeight extended_weight(const ModelParams& m, char sign, int r, int s, int n);

// soliton sectors V^pm_{r,s;n}: basis labels W_{n,m} in the (1,1)+ chain,
// abstract basis shifts elsewhere
struct SolitonLabel {
    char sign;  // '+' or '-'
    int r, s, n, m;
    friend bool operator<(const SolitonLabel& a, const SolitonLabel& b) {
        return std::tie(a.sign, a.r, a.s, a.n, a.m) < std::tie(b.sign, b.r, b.s, b.n, b.m);
    }
    friend bool operator==(const SolitonLabel& a, const SolitonLabel& b) {
        return std::tie(a.sign, a.r, a.s, a.n, a.m) == std::tie(b.sign, b.r, b.s, b.n, b.m);
    }
};

int sector_dimension(char sign, int n);                      // 2n+1 or 2n+2
std::vector<SolitonLabel> sector_basis(char sign, int r, int s, int n);

enum class Frobenius { E, F, H };

using SolitonCombination = std::map<SolitonLabel, Rational>;

// E raises m (0 at the top), F lowers with the -b_{lam+_{n,m}}/b_{lam+_{n,m-1}}
// ratio on the (1,1)+ chain (weight 1 elsewhere), H = EF - FE
SolitonCombination frobenius_apply(const ModelParams& m, Frobenius X, const SolitonLabel& w);

// zero-mode structure constants:
//   a_{n,k} = eps_{2(2p+-1)}(Q_{lam+_{n+k,1-n}}(kappa_-))
//   b_{n,k} = (-1)^{k+1} (b_{lam+_{1,1}}/b_{lam+_{n,n}})(kappa_-)
//             * eps_{2(2p--1)}(Q_{lam-_{n+k,n-1}}(kappa_+))
// closed box product always; the polynomial eval route is cross-checked when
// |lambda| <= 24, else the result is flagged single-route
struct StructConst {
    Rational value;
    bool two_route_checked;
};
StructConst struct_const(const ModelParams& m, char kind, int n, int k);

}  // namespace fockjack
