#include "hellyca/oracle.hpp"
#include "hellyca/pqm_tree.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hca;
using testing_helpers::model;
using testing_helpers::randomWord;

namespace {

WordSet permutationModels(const ChordModel& m) {
    auto rel = relationsFromModel(m);
    std::vector<Letter> rest;
    for (Letter l = 1; l < 2 * m.size(); ++l) rest.push_back(l);
    WordSet out;
    do {
        ChordModel c{m.names, {0}};
        c.word.insert(c.word.end(), rest.begin(), rest.end());
        if (relationsFromModel(c) == rel) out.insert(c.canonicalWord());
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

TEST_CASE("filter search matches full permutation scan") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        auto m = randomWord(1 + trial % 4, rng);
        auto rel = relationsFromModel(m);
        auto expect = permutationModels(m);
        CHECK(enumerateByFilterSerial(rel) == expect);
        CHECK(enumerateByFilter(rel) == expect);
    }
}

TEST_CASE("filter search matches the tree enumeration") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = randomWord(5 + trial % 2, rng);
        PqmTree t(m);
        WordSet fromTree;
        for (const auto& g : t.enumerateModels(1'000'000)) fromTree.insert(g.canonicalWord());
        CHECK(enumerateByFilter(t.relations()) == fromTree);
    }
}

TEST_CASE("oracle cap") {
    auto m = model("a^0 b^1 c^0 a^1 b^0 c^1");
    CHECK(enumerateByFilter(relationsFromModel(m)).size() == 8);
    CHECK_THROWS_AS(enumerateByFilter(relationsFromModel(m), 7), OracleCapExceeded);
    CHECK_THROWS_AS(enumerateByFilterSerial(relationsFromModel(m), 7), OracleCapExceeded);
}

TEST_CASE("oracle clique types on the triangle") {
    auto m = model("a^0 b^1 c^0 a^1 b^0 c^1");
    auto models = enumerateByFilter(relationsFromModel(m));
    CHECK(oracleCliqueType(3, models, {0, 1, 2}) == CliqueType::Ambiguous);
    CHECK(oracleCliqueType(3, models, {0, 1}) == CliqueType::AlwaysHelly);
    CHECK_FALSE(hellyInWord(3, m.word, {0, 1, 2}));
    auto w = oracleHellyCliques(3, models, {{0, 1, 2}});
    REQUIRE(w);
    CHECK(hellyInWord(3, *w, {0, 1, 2}));
}
