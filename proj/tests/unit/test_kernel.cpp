#include "hellyca/clique_type.hpp"
#include "hellyca/generators.hpp"
#include "hellyca/helly_analysis.hpp"
#include "hellyca/kernel.hpp"
#include "hellyca/oracle.hpp"
#include "hellyca/solver.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hca;
using testing_helpers::model;

namespace {

// Word restricted to the chords in `ids` (in order), renumbered 0..|ids|-1.
std::vector<Letter> projected(const std::vector<Letter>& word, const std::vector<int>& ids) {
    std::vector<Letter> out;
    for (Letter l : word) {
        auto it = std::find(ids.begin(), ids.end(), vertexOf(l));
        if (it != ids.end()) out.push_back(letterOf(static_cast<int>(it - ids.begin()), endOf(l)));
    }
    return canonicalLetters(out);
}

std::set<std::vector<Letter>> projectAll(const std::vector<std::vector<Letter>>& words, const std::vector<int>& ids) {
    std::set<std::vector<Letter>> out;
    for (const auto& w : words) out.insert(projected(w, ids));
    return out;
}

std::vector<int> randomSubset(int n, std::mt19937& rng) {
    std::vector<int> out;
    while (out.empty())
        for (int v = 0; v < n; ++v)
            if (rng() % 2) out.push_back(v);
    return out;
}

void checkReduct(const ChordModel& m, const std::vector<int>& keep) {
    auto red = reduct(m, keep);
    INFO("model " << m.str() << " reduct " << red.model.str());
    CHECK(red.model.size() <= 12 * static_cast<int>(keep.size()));
    std::vector<int> mapped;
    for (int v : keep) {
        REQUIRE(red.fromOriginal[static_cast<std::size_t>(v)] >= 0);
        CHECK(red.model.names[static_cast<std::size_t>(red.fromOriginal[static_cast<std::size_t>(v)])] ==
              m.names[static_cast<std::size_t>(v)]);
        mapped.push_back(red.fromOriginal[static_cast<std::size_t>(v)]);
    }
    PqmTree t(m);
    auto original = enumerateByFilter(t.relations());
    std::vector<std::vector<Letter>> ws(original.begin(), original.end());
    std::vector<std::vector<Letter>> rs;
    for (const auto& x : PqmTree(red.model).enumerateModels(2'000'000)) rs.push_back(x.word);
    CHECK(projectAll(ws, keep) == projectAll(rs, mapped));
}

}  // namespace

TEST_CASE("reduct of a single chord") {
    auto m = model("a^0 b^0 a^1 c^0 b^1 c^1");
    for (int v = 0; v < 3; ++v) {
        auto red = reduct(m, {v});
        CHECK(red.model.size() == 2);
        auto g = graphFromModel(red.model);
        CHECK_FALSE(g.adjacent(0, 1));
    }
    CHECK(reduct(m, {}).model.size() == 0);
}

TEST_CASE("reduct names avoid existing chords") {
    auto m = model("_r0^0 b^0 _r0^1 c^0 b^1 c^1");
    auto red = reduct(m, {1});
    std::set<std::string> names(red.model.names.begin(), red.model.names.end());
    CHECK(names.size() == red.model.names.size());
    CHECK(names.count("b") == 1);
}

TEST_CASE("reduct models project like the original") {
    std::mt19937 rng(3);
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 90; ++seed) {
        const int n = 3 + static_cast<int>(seed % 3);
        ChordModel m;
        switch (seed % 3) {
        case 0: m = randomModel(n, seed); break;
        case 1: m = randomReducedModel(n, seed); break;
        default: m = randomDenseModel(n, seed); break;
        }
        checkReduct(m, randomSubset(n, rng));
        ++checked;
    }
    // every chord kept
    checkReduct(model("a^0 b^1 c^0 a^1 b^0 c^1"), {0, 1, 2});
    checkReduct(matchingComplement(2), {0, 1, 2, 3});
    CHECK(checked == 90);
}

TEST_CASE("reduct size stays within twelve chords per kept chord") {
    std::mt19937 rng(11);
    int worst = 0;  // largest size minus 12 |U|, must stay <= 0
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const int n = 6 + static_cast<int>(seed % 25);
        ChordModel m = seed % 4 == 0 ? randomDenseModel(4 + n % 7, seed) : randomModel(n, seed);
        std::vector<int> keep;
        const int want = 1 + static_cast<int>(rng() % 4);
        const int size = m.size();
        std::vector<int> all(static_cast<std::size_t>(size));
        for (int v = 0; v < size; ++v) all[static_cast<std::size_t>(v)] = v;
        std::shuffle(all.begin(), all.end(), rng);
        keep.assign(all.begin(), all.begin() + std::min(want, size));
        std::sort(keep.begin(), keep.end());
        auto red = reduct(m, keep);
        worst = std::max(worst, red.model.size() - 12 * static_cast<int>(keep.size()));
        INFO("model " << m.str());
        CHECK(red.model.size() <= 12 * static_cast<int>(keep.size()));
        // restricted to the kept chords the reduct is a model of the restricted input
        std::vector<int> mapped;
        for (int v : keep) mapped.push_back(red.fromOriginal[static_cast<std::size_t>(v)]);
        ChordModel sub, back;
        for (int v : keep) sub.names.push_back(m.names[static_cast<std::size_t>(v)]);
        back.names = sub.names;
        sub.word = projected(m.word, keep);
        back.word = projected(red.model.word, mapped);
        CHECK(validateAgainst(back, PqmTree(sub).relations()).ok);
    }
    CHECK(worst <= 0);
}

namespace {

// Cliques of the model (maximal ones and random subsets), ambiguous ones first.
std::vector<std::vector<int>> ambiguousFirst(const ChordModel& m, std::mt19937& rng, int want) {
    PqmTree t(m);
    std::vector<std::vector<int>> pool;
    forEachMaximalClique(graphFromModel(m), 1000, [&](const std::vector<int>& c) {
        pool.push_back(c);
        std::vector<int> sub;
        for (int v : c)
            if (rng() % 3 != 0) sub.push_back(v);
        if (sub.size() >= 2) pool.push_back(sub);
        return true;
    });
    std::shuffle(pool.begin(), pool.end(), rng);
    std::stable_partition(pool.begin(), pool.end(),
                          [&](const std::vector<int>& c) { return classify(t, c) == CliqueType::Ambiguous; });
    if (static_cast<int>(pool.size()) > want) pool.resize(static_cast<std::size_t>(want));
    return pool;
}

bool hellyAnswer(const Instance& inst) { return solveHellyCliques(PqmTree(inst.model), inst.cliques).helly; }

}  // namespace

TEST_CASE("kernel without ambiguous cliques is an empty yes instance") {
    auto tri = model("a^0 b^1 c^0 a^1 b^0 c^1");
    REQUIRE(classify(PqmTree(tri), {0, 1}) == CliqueType::AlwaysHelly);
    auto r = kernelize(Instance{tri, {{0, 1}}});
    CHECK_FALSE(r.rejected);
    CHECK(r.ambiguous == 0);
    CHECK(r.kernel.model.size() == 0);
    CHECK(r.kernel.cliques.empty());
    CHECK(hellyAnswer(r.kernel));
}

TEST_CASE("always non-Helly clique gives the fixed no instance") {
    auto k4 = model("a^0 c^1 b^0 d^1 c^0 a^1 d^0 b^1");
    auto r = kernelize(Instance{k4, {{0, 1, 2, 3}}});
    CHECK(r.rejected);
    CHECK_FALSE(hellyAnswer(r.kernel));
}

TEST_CASE("one ambiguous clique makes a single block") {
    std::mt19937 rng(7);
    int seen = 0;
    for (std::uint64_t seed = 1; seed <= 60 && seen < 20; ++seed) {
        auto m = randomModel(4 + static_cast<int>(seed % 4), seed);
        auto cl = ambiguousFirst(m, rng, 1);
        PqmTree t(m);
        if (cl.empty() || classify(t, cl[0]) != CliqueType::Ambiguous) continue;
        auto a = analyzeClique(t, cl[0]);
        auto state = computeBlocks(t, {a});
        CHECK_FALSE(state.rejected);
        for (const auto& nb : state.nodes) {
            REQUIRE(nb.blocks.size() == 1);
            CHECK(nb.blocks[0].sides[0] == std::vector<int>{0});
            CHECK(nb.blocks[0].sides[1].empty());
        }
        ++seen;
    }
    CHECK(seen >= 10);
}

TEST_CASE("kernel answers like the original instance") {
    std::mt19937 rng(19);
    int yes = 0, no = 0, rejected = 0, reduced = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        ChordModel m = seed % 2 == 0 ? randomDenseModel(n, seed) : randomModel(n, seed);
        Instance inst{m, ambiguousFirst(m, rng, 2 + static_cast<int>(seed % 3))};
        for (auto& c : inst.cliques) std::sort(c.begin(), c.end());
        const bool expect = hellyAnswer(inst);
        INFO("model " << m.str() << " cliques " << inst.cliques.size());

        auto plain = kernelize(inst);
        CHECK(hellyAnswer(plain.kernel) == expect);
        CHECK(plain.kernel.model.size() <= std::max(12 * static_cast<int>(plain.important.size()), m.size()));

        auto r = kernelize(inst, KernelOptions{true});
        CHECK(hellyAnswer(r.kernel) == expect);
        if (r.rejected) {
            ++rejected;
            CHECK_FALSE(expect);
            continue;
        }
        if (r.ambiguous == 0) continue;
        ++reduced;
        const auto bounds = kernelBounds(r.ambiguous);
        CHECK(r.important.size() <= bounds.vertices);
        CHECK(r.importantNodes <= bounds.importantNodes);
        CHECK(r.weaklyImportant <= bounds.weaklyImportant);
        CHECK(r.kernel.model.size() <= 12 * static_cast<int>(r.important.size()));
        CHECK(static_cast<int>(r.kernel.cliques.size()) == r.ambiguous);
        for (const auto& c : r.kernel.cliques) CHECK_FALSE(c.empty());
        (expect ? yes : no)++;
    }
    MESSAGE("yes " << yes << " no " << no << " rejected " << rejected << " reduced " << reduced);
    CHECK(yes >= 20);
    CHECK(no + rejected >= 10);
}
