#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fockjack/fock.hpp"
#include "fockjack/partition.hpp"
#include "fockjack/screening.hpp"

using namespace fockjack;

TEST_CASE("conjugate") {
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{5}.conjugate() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("conjugate is an involution on random partitions") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 20);
    for (int i = 0; i < 1000; ++i) {
        auto all = enumerate_partitions(deg(rng));
        const Partition& lam = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        CHECK(lam.conjugate().conjugate() == lam);
        // arm of lam at (i,j) equals leg of lam' at (j,i)
        for (int r = 1; r <= static_cast<int>(lam.length()); ++r)
            for (int c = 1; c <= lam.part(static_cast<std::size_t>(r - 1)); ++c)
                CHECK(lam.box_stats(r, c).arm == lam.conjugate().box_stats(c, r).leg);
    }
}

TEST_CASE("box stats") {
    auto st = Partition{4, 2}.box_stats(1, 2);
    CHECK(st.arm == 2);
    CHECK(st.leg == 1);
    CHECK(st.coarm == 1);
    CHECK(st.coleg == 0);
    st = Partition{1}.box_stats(1, 1);
    CHECK((st.arm == 0 && st.leg == 0 && st.coarm == 0 && st.coleg == 0));
    st = Partition{3, 3}.box_stats(2, 3);
    CHECK((st.arm == 0 && st.leg == 0 && st.coarm == 2 && st.coleg == 1));
    CHECK_THROWS_AS(Partition{2}.box_stats(2, 1), BoxOutOfDiagram);
}

TEST_CASE("dominance") {
    CHECK(dominance_compare(Partition{2}, Partition{1, 1}) == Dominance::greater);
    CHECK(dominance_compare(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Dominance::incomparable);
    CHECK(dominance_compare(Partition{2, 1}, Partition{2, 1}) == Dominance::equal);
    CHECK_THROWS_AS(dominance_compare(Partition{2}, Partition{1}), DegreeMismatch);
}

TEST_CASE("z factor") {
    CHECK(Partition{2}.z_factor() == rat(2));
    CHECK(Partition{2, 1, 1}.z_factor() == rat(4));
    CHECK(Partition{}.z_factor() == rat(1));
}

TEST_CASE("enumeration order and count") {
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
    CHECK(enumerate_partitions(0).size() == 1);
    auto p42 = enumerate_partitions(4, 2);
    REQUIRE(p42.size() == 3);
    CHECK(p42[2] == Partition{2, 2});
}

TEST_CASE("enumeration count matches the Euler recurrence up to 40") {
    auto p = partition_numbers(40);
    for (int d = 0; d <= 40; ++d) {
        if (d <= 24)  // full enumeration only at small degree
            CHECK(enumerate_partitions(d).size() == p[static_cast<std::size_t>(d)]);
    }
    CHECK(p[40] == 37338ULL);
}

TEST_CASE("special partitions") {
    ModelParams m = model(2, 3);
    CHECK(special_partition(SpecialKind::lambda_plus, m, 1, 1) == Partition{2, 2, 2, 2, 2});
    CHECK(special_partition(SpecialKind::rect, m, 1, 1) == Partition{1});
    CHECK(special_partition(SpecialKind::lambda_minus, m, 1, 1) ==
          special_partition(SpecialKind::lambda_plus, m, 1, 1).conjugate());
    CHECK(special_partition(SpecialKind::lambda_minus, m, 1, 1) == Partition{5, 5});
    CHECK_THROWS_AS(special_partition(SpecialKind::lambda_plus, m, 0, 1), EmptyPartition);
}

TEST_CASE("lambda degrees match") {
    for (auto [pp, pm] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
        ModelParams m = model(pp, pm);
        for (int n = 0; n <= 2; ++n)
            for (int mm = -n; mm <= n; ++mm) {
                Partition lp = lambda_plus(m, n, mm);
                CHECK(lp.degree() == ((n - mm + 1) * pm - 1) * ((n + mm + 1) * pp - 1));
                CHECK(lp.degree() == lambda_minus(m, n, mm).degree());
            }
    }
}
