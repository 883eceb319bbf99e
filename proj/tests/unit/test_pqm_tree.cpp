#include "hellyca/pqm_tree.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hca;
using testing_helpers::model;
using testing_helpers::vid;

namespace {

const char* kTriangle = "a^0 b^1 c^0 a^1 b^0 c^1";
const char* kFourCycleOverlap = "a^0 c^1 b^0 d^1 c^0 a^1 d^0 b^1";
// Four CA-modules {a,b,c,d,e}, {f}, {g}, {h,i} with slot order
// S1^1 S2^1 S4^1 S1^0 S3^0 S4^0 S3^1 S2^0.
const char* kFourModules = "a^1 b^1 c^0 d^1 e^0 f^1 h^1 i^0 c^1 b^0 e^1 d^0 a^0 g^0 i^1 h^0 g^1 f^0";

std::set<std::vector<Letter>> canonicalSet(const std::vector<ChordModel>& ms) {
    std::set<std::vector<Letter>> out;
    for (const auto& m : ms) out.insert(m.canonicalWord());
    return out;
}

// Every arrangement with letter 0 first that realizes the same relations.
std::set<std::vector<Letter>> bruteForceModels(const ChordModel& m) {
    auto rel = relationsFromModel(m);
    std::vector<Letter> rest;
    for (Letter l = 1; l < 2 * m.size(); ++l) rest.push_back(l);
    std::set<std::vector<Letter>> out;
    do {
        ChordModel c{m.names, {0}};
        c.word.insert(c.word.end(), rest.begin(), rest.end());
        if (relationsFromModel(c) == rel) out.insert(c.canonicalWord());
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("triangle tree") {
    PqmTree t(model(kTriangle));
    CHECK(t.rootCase() == RootCase::Serial);
    CHECK(t.modules().size() == 3);
    for (const auto& m : t.modules()) CHECK(m.vertices.size() == 1);
    CHECK(t.modelCount() == 8);
    auto models = t.enumerateModels(100);
    CHECK(models.size() == 8);
    CHECK(canonicalSet(models) == bruteForceModels(model(kTriangle)));
    CHECK(canonicalSet(models).size() == 8);
}

TEST_CASE("reference choice reproduces the input") {
    for (const char* w : {kTriangle, kFourCycleOverlap, kFourModules, "a^0 a^1", "a^0 a^1 b^0 b^1"}) {
        auto m = model(w);
        PqmTree t(m);
        CHECK(t.generateModel(t.referenceChoice()).sameAs(m));
    }
}

TEST_CASE("four-cycle overlap word has two models") {
    PqmTree t(model(kFourCycleOverlap));
    // the overlap graph is the cycle a-b-c-d; its complement is two disjoint
    // edges, so the root is serial with modules {a,c} and {b,d}
    CHECK(t.rootCase() == RootCase::Serial);
    CHECK(t.modules().size() == 2);
    CHECK(t.modelCount() == 2);
    auto models = t.enumerateModels(10);
    REQUIRE(models.size() == 2);
    auto ref = model(kFourCycleOverlap);
    std::set<std::vector<Letter>> expect{ref.canonicalWord(), canonicalLetters(reflectLetters(ref.word))};
    CHECK(canonicalSet(models) == expect);
}

TEST_CASE("single chord and empty input") {
    PqmTree one(model("a^0 a^1"));
    CHECK(one.modelCount() == 1);
    CHECK(one.enumerateModels(5).size() == 1);
    PqmTree none(ChordModel{});
    CHECK(none.rootCase() == RootCase::Empty);
    CHECK(none.enumerateModels(5).size() == 1);
}

TEST_CASE("four-module example") {
    auto m = model(kFourModules);
    PqmTree t(m);
    CHECK(t.rootCase() == RootCase::Prime);
    REQUIRE(t.modules().size() == 4);
    auto names = [&](const std::vector<int>& vs) {
        std::vector<std::string> out;
        for (int v : vs) out.push_back(m.names[static_cast<std::size_t>(v)]);
        return out;
    };
    CHECK(names(t.modules()[0].vertices) == std::vector<std::string>{"a", "b", "c", "d", "e"});
    CHECK(names(t.modules()[1].vertices) == std::vector<std::string>{"f"});
    CHECK(names(t.modules()[2].vertices) == std::vector<std::string>{"g"});
    CHECK(names(t.modules()[3].vertices) == std::vector<std::string>{"h", "i"});
    std::vector<Letter> zero = t.modules()[0].slot[0];
    std::sort(zero.begin(), zero.end());
    std::vector<Letter> expect{letterOf(vid(m, "a"), 0), letterOf(vid(m, "b"), 0), letterOf(vid(m, "c"), 1),
                               letterOf(vid(m, "d"), 0), letterOf(vid(m, "e"), 1)};
    std::sort(expect.begin(), expect.end());
    CHECK(zero == expect);
    // pi = S1^1 S2^1 S4^1 S1^0 S3^0 S4^0 S3^1 S2^0
    std::vector<int> pi{slotOf(0, 1), slotOf(1, 1), slotOf(3, 1), slotOf(0, 0),
                        slotOf(2, 0), slotOf(3, 0), slotOf(2, 1), slotOf(1, 0)};
    auto orders = t.primeSlotOrders();
    REQUIRE(orders.size() == 2);
    auto rotateTo = [](std::vector<int> v, int first) {
        std::rotate(v.begin(), std::find(v.begin(), v.end(), first), v.end());
        return v;
    };
    CHECK(rotateTo(orders[0], pi[0]) == pi);
    CHECK(rotateTo(orders[1], pi[0]) == rotateTo(reflectSlotOrder(pi), pi[0]));
    // metachord orientations
    const int a = vid(m, "a"), b = vid(m, "b"), c = vid(m, "c"), d = vid(m, "d"), e = vid(m, "e");
    const int h = vid(m, "h"), i = vid(m, "i");
    CHECK(t.nestedBefore(b, a));
    CHECK(t.nestedBefore(c, a));
    CHECK(t.nestedBefore(d, a));
    CHECK(t.nestedBefore(e, a));
    CHECK(t.nestedBefore(c, b));
    CHECK(t.nestedBefore(e, d));
    CHECK(t.nestedBefore(i, h));
    CHECK_FALSE(t.nestedBefore(a, b));
    // flipping the prime root gives the reflection
    auto choice = t.reflectedChoice(t.referenceChoice());
    CHECK(choice.flipRoot == 1);
    CHECK(canonicalLetters(t.generate(choice)) == canonicalLetters(reflectLetters(m.word)));
}

TEST_CASE("enumeration equals brute force on random small words") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 4;
        auto m = testing_helpers::randomWord(n, rng);
        PqmTree t(m);
        auto models = t.enumerateModels(100000);
        auto set = canonicalSet(models);
        INFO(m.str());
        CHECK(set.size() == models.size());
        CHECK(set == bruteForceModels(m));
        CHECK(t.modelCount() == models.size());
    }
}

TEST_CASE("enumeration equals brute force on random 5-chord words") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 12; ++trial) {
        auto m = testing_helpers::randomWord(5, rng);
        PqmTree t(m);
        auto models = t.enumerateModels(100000);
        INFO(m.str());
        CHECK(canonicalSet(models) == bruteForceModels(m));
        CHECK(canonicalSet(models).size() == models.size());
    }
}

TEST_CASE("generated models keep the tree") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        auto m = testing_helpers::randomWord(3 + trial % 4, rng);
        PqmTree t(m);
        auto rel = relationsFromModel(m);
        t.forEachChoice([&](const ModelChoice& c) {
            auto g = t.generateModel(c);
            CHECK(validateAgainst(g, rel).ok);
            PqmTree u(g);
            CHECK(u.modules().size() == t.modules().size());
            for (std::size_t i = 0; i < t.modules().size(); ++i)
                CHECK(sorted(u.modules()[i].vertices) == sorted(t.modules()[i].vertices));
            CHECK(u.modelCount() == t.modelCount());
            return true;
        });
    }
}

TEST_CASE("reflected choice generates the reflection") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = testing_helpers::randomWord(2 + trial % 6, rng);
        PqmTree t(m);
        int seen = 0;
        t.forEachChoice([&](const ModelChoice& c) {
            CHECK(canonicalLetters(t.generate(t.reflectedChoice(c))) == canonicalLetters(reflectLetters(t.generate(c))));
            return ++seen < 20;
        });
    }
}

TEST_CASE("cap is enforced") {
    PqmTree t(model(kTriangle));
    CHECK_THROWS_AS(t.enumerateModels(7), EnumerationTooLarge);
}

TEST_CASE("clique placement") {
    auto helly = model("a^0 b^0 c^0 a^1 b^1 c^1");
    PqmTree th(helly);
    auto placed = extendWithCliques(th, helly.word, {{0, 1, 2}});
    REQUIRE(placed.gaps.size() == 1);
    CHECK(placed.gaps[0] == std::vector<int>{2});
    auto bad = model(kTriangle);
    PqmTree tb(bad);
    auto none = extendWithCliques(tb, bad.word, {{0, 1, 2}});
    CHECK_FALSE(none.feasible());
    auto single = extendWithCliques(tb, bad.word, {{0}});
    CHECK(single.gaps[0] == std::vector<int>{0, 1, 2});
}
