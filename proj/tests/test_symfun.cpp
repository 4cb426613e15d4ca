#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fockjack/kappa.hpp"
#include "fockjack/sympoly.hpp"

using namespace fockjack;

using SP = SymPoly<Rational>;
using SPK = SymPoly<KappaFunction>;

static std::mt19937 rng(99);

static SP random_sympoly(int maxdeg, Basis b) {
    SP f(b);
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-4, 4);
    for (int t = 0; t < 5; ++t) {
        auto parts = enumerate_partitions(deg(rng));
        const Partition& lam = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
        f.add_term(lam, rat(coef(rng)));
    }
    return f;
}

TEST_CASE("basis conversion examples") {
    // m_(1,1) = (p_(1,1) - p_(2))/2
    SP m11 = SP::m(Partition{1, 1});
    SP conv = m11.to_basis(Basis::power);
    CHECK(conv.coeff(Partition{1, 1}) == rat(1, 2));
    CHECK(conv.coeff(Partition{2}) == rat(-1, 2));
    CHECK(SP::p(Partition{1}).to_basis(Basis::monomial) == SP::m(Partition{1}));
    // p_(1,1) = m_(2) + 2 m_(1,1)
    SP p11 = SP::p(Partition{1, 1}).to_basis(Basis::monomial);
    CHECK(p11.coeff(Partition{2}) == rat(1));
    CHECK(p11.coeff(Partition{1, 1}) == rat(2));
}

TEST_CASE("conversion roundtrip is the identity up to degree 10") {
    for (int i = 0; i < 40; ++i) {
        SP f = random_sympoly(10, Basis::monomial);
        CHECK(f.to_basis(Basis::power).to_basis(Basis::monomial) == f);
        SP g = random_sympoly(10, Basis::power);
        CHECK(g.to_basis(Basis::monomial).to_basis(Basis::power) == g);
    }
}

TEST_CASE("products") {
    CHECK(SP::p(Partition{2}) * SP::p(Partition{1}) == SP::p(Partition{2, 1}));
    SP mm = SP::m(Partition{1}) * SP::m(Partition{1});
    CHECK(mm.basis() == Basis::monomial);
    CHECK(mm.coeff(Partition{2}) == rat(1));
    CHECK(mm.coeff(Partition{1, 1}) == rat(2));
    SP f = random_sympoly(6, Basis::monomial);
    CHECK(f * SP::one(Basis::monomial) == f);
}

TEST_CASE("inner product") {
    Rational k = rat(2, 3);
    CHECK(SP::inner_kappa(SP::p(Partition{2}), SP::p(Partition{2}), k) == rat(2) * k);
    CHECK(SP::inner_kappa(SP::p(Partition{2}), SP::p(Partition{1, 1}), k) == 0);
    CHECK(SP::inner_kappa(SP::p(Partition{1, 1}), SP::p(Partition{1, 1}), k) == rat(2) * k * k);
    // generic kappa: <p_2, p_2> = 2 kappa
    KappaFunction kk = KappaFunction::kappa();
    CHECK(SPK::inner_kappa(SPK::p(Partition{2}), SPK::p(Partition{2}), kk) ==
          KappaFunction(rat(2)) * kk);
}

TEST_CASE("inner product symmetry, bilinearity, degree orthogonality") {
    Rational k = rat(3, 5);
    for (int i = 0; i < 30; ++i) {
        SP f = random_sympoly(6, Basis::power), g = random_sympoly(6, Basis::power);
        SP h = random_sympoly(6, Basis::power);
        CHECK(SP::inner_kappa(f, g, k) == SP::inner_kappa(g, f, k));
        CHECK(SP::inner_kappa(f + g, h, k) ==
              SP::inner_kappa(f, h, k) + SP::inner_kappa(g, h, k));
    }
    CHECK(SP::inner_kappa(SP::p(Partition{3}), SP::p(Partition{2}), k) == 0);
}

TEST_CASE("omega endomorphism") {
    Rational beta = rat(5, 2);
    SP p2 = SP::p(Partition{2});
    CHECK(p2.omega_endo(beta).coeff(Partition{2}) == -beta);
    SP p11 = SP::p(Partition{1, 1});
    CHECK(p11.omega_endo(beta).coeff(Partition{1, 1}) == beta * beta);
    // all odd parts at beta = 1: identity
    SP p31 = SP::p(Partition{3, 1});
    CHECK(p31.omega_endo(rat(1)) == p31);
    // ring homomorphism on random samples
    for (int i = 0; i < 20; ++i) {
        SP f = random_sympoly(5, Basis::power), g = random_sympoly(5, Basis::power);
        CHECK((f * g).omega_endo(beta) == f.omega_endo(beta) * g.omega_endo(beta));
    }
}

TEST_CASE("omega_kappa then omega_{1/kappa} is the identity (generic)") {
    KappaFunction kk = KappaFunction::kappa();
    KappaFunction kinv = kk.inverse();
    for (int d = 1; d <= 5; ++d)
        for (const Partition& lam : enumerate_partitions(d)) {
            SPK f = SPK::p(lam);
            CHECK(f.omega_endo(kk).omega_endo(kinv) == f);
        }
}

TEST_CASE("eval_eps") {
    Rational X = rat(7, 3);
    CHECK(SP::p(Partition{2, 1}).eval_eps(X) == X * X);
    CHECK(SP::m(Partition{1, 1}).eval_eps(X) == X * (X - 1) / 2);
    CHECK(SP::one().eval_eps(X) == 1);
    // homomorphism property
    for (int i = 0; i < 20; ++i) {
        SP f = random_sympoly(5, Basis::monomial), g = random_sympoly(5, Basis::monomial);
        CHECK((f * g).eval_eps(X) == f.eval_eps(X) * g.eval_eps(X));
    }
}

TEST_CASE("restrict_N") {
    CHECK(SP::m(Partition{1, 1, 1}).restrict_N(2).is_zero());
    CHECK(SP::m(Partition{2}).restrict_N(1) == SP::m(Partition{2}));
    SP f = SP::p(Partition{1, 1}).restrict_N(1);
    CHECK(f == SP::m(Partition{2}));
}
