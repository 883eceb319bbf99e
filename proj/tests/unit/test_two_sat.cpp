#include "hellyca/two_sat.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace hca;

TEST_CASE("two-sat basics") {
    TwoSatFormula f(1);
    f.require({0, true});
    f.require({0, false});
    CHECK_FALSE(solveTwoSat(f));

    TwoSatFormula empty(3);
    auto a = solveTwoSat(empty);
    REQUIRE(a);
    CHECK(a->size() == 3);

    TwoSatFormula g(2);
    g.either({0, true}, {1, true});
    g.require({0, false});
    auto b = solveTwoSat(g);
    REQUIRE(b);
    CHECK((*b)[1]);

    TwoSatFormula bad(1);
    bad.require({2, true});
    CHECK_THROWS_AS(solveTwoSat(bad), std::out_of_range);
}

TEST_CASE("two-sat agrees with truth tables") {
    std::mt19937 rng(41);
    int sat = 0, unsat = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 15;
        TwoSatFormula f(n);
        std::uniform_int_distribution<int> var(0, n - 1);
        const int clauses = static_cast<int>(rng() % static_cast<unsigned>(3 * n + 1));
        for (int c = 0; c < clauses; ++c) {
            Literal x{var(rng), rng() % 2 == 0}, y{var(rng), rng() % 2 == 0};
            if (rng() % 6 == 0) f.require(x);
            else f.forbid(x, y);
        }
        bool any = false;
        for (unsigned mask = 0; mask < (1u << n) && !any; ++mask) {
            std::vector<bool> a(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v)] = mask >> v & 1;
            any = f.satisfiedBy(a);
        }
        auto got = solveTwoSat(f);
        CHECK(got.has_value() == any);
        if (got) CHECK(f.satisfiedBy(*got));
        (any ? sat : unsat)++;
    }
    CHECK(sat > 50);
    CHECK(unsat > 50);
}
