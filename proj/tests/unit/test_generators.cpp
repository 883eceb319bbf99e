#include "hellyca/generators.hpp"
#include "hellyca/instance.hpp"
#include "hellyca/oracle.hpp"
#include "hellyca/pqm_tree.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace hca;
using testing_helpers::model;
using testing_helpers::vid;

TEST_CASE("matching complement") {
    for (int n = 2; n <= 5; ++n) {
        auto m = matchingComplement(n);
        auto g = graphFromModel(m);
        CHECK(m.size() == 2 * n);
        CHECK_FALSE(g.hasTwinsOrUniversal());
        CHECK(relationsFromGraph(g) == relationsFromModel(m));
        for (int v = 0; v < 2 * n; ++v) {
            int nonNeighbours = 0;
            for (int u = 0; u < 2 * n; ++u)
                if (u != v && !g.adjacent(u, v)) ++nonNeighbours;
            CHECK(nonNeighbours == 1);
        }
    }
    CHECK(matchingComplement(2).str() == "v1^1 u1^0 v2^1 u2^0 u1^1 v1^0 u2^1 v2^0");
}

TEST_CASE("total ordering brute force") {
    CHECK(totalOrderingSatisfiable(3, {{1, 2, 3}}));
    CHECK_FALSE(totalOrderingSatisfiable(3, {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}}));
    CHECK(totalOrderingSatisfiable(4, {}));
}

TEST_CASE("betweenness instance shape") {
    auto inst = fromTotalOrdering(3, {{1, 2, 3}, {2, 1, 3}});
    CHECK(inst.model.size() == 10);
    CHECK(inst.model.str() == "v1^1 u1^0 v2^1 u2^0 v3^1 u3^0 z^1 w^0 u1^1 v1^0 u2^1 v2^0 u3^1 v3^0 x^0 w^1 y^0 x^1 z^0 y^1");
    auto gg = graphFromModel(inst.model);
    CHECK_FALSE(gg.hasTwinsOrUniversal());
    CHECK(relationsFromGraph(gg) == relationsFromModel(inst.model));
    CHECK(inst.cliques.size() == 4);
    auto g = graphFromModel(inst.model);
    for (const auto& c : inst.cliques) CHECK(isClique(g, c));
    CHECK(cliqueNames(inst.model, inst.cliques[0]) == "u2 u3 v1");
    CHECK_THROWS_AS(fromTotalOrdering(3, {{1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("betweenness instances match the brute force over all models") {
    const std::vector<std::vector<Triple>> sets = {
        {{1, 2, 3}}, {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}}, {{1, 2, 3}, {3, 2, 1}}, {{1, 2, 3}, {2, 3, 1}}};
    for (const auto& t : sets) {
        auto inst = fromTotalOrdering(3, t);
        WordSet models;
        for (const auto& m : PqmTree(inst.model).enumerateModels(1000)) models.insert(m.canonicalWord());
        CHECK(oracleHellyCliques(10, models, inst.cliques).has_value() == totalOrderingSatisfiable(3, t));
    }
}

TEST_CASE("normalize") {
    auto conformal = model("a^0 b^0 a^1 b^1");
    CHECK(normalize(conformal, graphFromModel(conformal)).word == conformal.word);

    // N[c] within N[a]: a must contain c
    auto m = model("e^0 a^0 e^1 c^0 a^1 c^1 d^0 d^1");
    auto g = graphFromModel(m);
    int a = vid(m, "a"), c = vid(m, "c");
    REQUIRE(forcedRelation(g, a, c) == PairRelation::Contains);
    auto fixed = normalize(m, g);
    CHECK(validateConformal(fixed, g).ok);
    CHECK(geometricRelation(Geometry(fixed), a, c) == PairRelation::Contains);
}

TEST_CASE("random models are conformal and reproducible") {
    CHECK(randomModel(1, 5).str() == "a^0 a^1");
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        auto m = randomModel(n, seed);
        CHECK(validateConformal(m, graphFromModel(m)).ok);
        CHECK(randomModel(n, seed).word == m.word);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto m = randomReducedModel(5, seed);
        auto g = graphFromModel(m);
        CHECK_FALSE(g.hasTwinsOrUniversal());
        CHECK(relationsFromGraph(g) == relationsFromModel(m));
    }
}

TEST_CASE("instance text round trip") {
    auto inst = parseInstance("# tri\nmodel: a^0 b^1 c^0 a^1 b^0 c^1\nclique: c a b\n\nclique: a b\n");
    CHECK(inst.cliques.size() == 2);
    CHECK(inst.cliques[0] == std::vector<int>{0, 1, 2});
    CHECK(parseInstance(formatInstance(inst)).cliques == inst.cliques);
    CHECK_THROWS_AS(parseInstance("clique: a\n"), ParseError);
    CHECK_THROWS_AS(parseInstance("model: a^0 a^1\nclique: z\n"), ParseError);
    CHECK_THROWS_AS(parseInstance("model: a^0 a^\n"), ParseError);
    Witness w{inst.model, {2, 4}};
    auto back = parseWitness(formatWitness(w));
    CHECK(back.gaps == w.gaps);
    CHECK(back.model.word == w.model.word);
}

TEST_CASE("betweenness chords form one CA-module under a prime root") {
    auto inst = fromTotalOrdering(4, {});
    PqmTree t(inst.model);
    CHECK(t.rootCase() == RootCase::Prime);
    int big = 0;
    for (const auto& m : t.modules())
        if (m.vertices.size() == 8) {
            ++big;
            CHECK(t.mnode(m.mroot).type == ModuleType::Serial);
            CHECK(t.mnode(m.mroot).children.size() == 4);
        }
    CHECK(big == 1);
    CHECK(t.modelCount() == 2 * 24);
    CHECK(t.modules().size() == 5);
}
