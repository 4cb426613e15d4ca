#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fockjack/serialize.hpp"

using namespace fockjack;

static std::mt19937 rng(5150);

TEST_CASE("scalar round-trips") {
    std::uniform_int_distribution<int> num(-99, 99), den(1, 97);
    for (int i = 0; i < 100; ++i) {
        Rational q = rat(num(rng), den(rng));
        CHECK(rat_parse(rat_str(q)) == q);
        QuadScalar x(rat(num(rng), den(rng)), rat(num(rng), den(rng)), rat(10, 3));
        CHECK(quad_from_json(to_json(x)) == x);
    }
    // perfect-square discriminant folds and still round-trips
    QuadScalar folded(rat(1), rat(2), rat(9));
    CHECK(quad_from_json(to_json(folded)) == folded);
}

TEST_CASE("kappa function round-trips") {
    KappaFunction k = KappaFunction::kappa();
    KappaFunction f = (KappaFunction(rat(2)) * k + KappaFunction(rat(-1, 3))) /
                      (k * k + KappaFunction(rat(5)));
    CHECK(kappa_from_json(to_json(f)) == f);
    CHECK(kappa_from_json(to_json(KappaFunction(rat(0)))) == KappaFunction(rat(0)));
}

TEST_CASE("partition and sympoly round-trips") {
    CHECK(partition_from_json(to_json(Partition{4, 2})) == Partition{4, 2});
    CHECK(partition_from_json(to_json(Partition{})) == Partition{});
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lam : enumerate_partitions(d)) {
            auto f = SymPoly<Rational>::m(lam).to_basis(Basis::power);
            auto g = sympoly_from_json<Rational>(to_json(f), rational_from_json);
            CHECK(g == f);
        }
}

TEST_CASE("jack pair and fock element round-trips") {
    const auto& jp = jack_at(Partition{2, 1}, rat(2, 3));
    json j = to_json(jp);
    auto P = sympoly_from_json<Rational>(j.at("P"), rational_from_json);
    CHECK(P == jp.P);
    CHECK(rational_from_json(j.at("b")) == jp.b);

    ModelParams m = model(2, 3);
    FockElement v = singular_vector(m, '+', 1, 2);
    CHECK(fock_from_json(to_json(v)) == v);
    // labelled round-trip: the weight emitted as its (r,s,n) lattice label
    CHECK(fock_from_json(to_json_labeled(v, -1, -2, 0), m) == v);
}

TEST_CASE("char series round-trip") {
    CharSeries c(rat(-1, 5), {1, 0, 2, 3});
    CHECK(charseries_from_json(to_json(c)) == c);
}

TEST_CASE("soliton label serialization") {
    SolitonLabel w{'+', 1, 1, 2, -1};
    json j = to_json(w);
    CHECK(j.at("sign") == "+");
    CHECK(j.at("n") == 2);
    CHECK(j.at("m") == -1);
}
