#include "hellyca/modules.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hca;

namespace {

std::vector<Bits> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Bits> adj(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    return adj;
}

std::vector<int> iota(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

std::vector<std::vector<int>> treeModules(const ModuleTree& t) {
    std::vector<std::vector<int>> out;
    for (int id = 0; id < t.nodeCount(); ++id) out.push_back(t.node(id).vertices);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("decomposition labels") {
    ModuleTree tri(adjacency(3, {{0, 1}, {1, 2}, {0, 2}}), iota(3));
    CHECK(tri.node(tri.root()).type == ModuleType::Serial);
    CHECK(tri.node(tri.root()).children.size() == 3);
    ModuleTree p4(adjacency(4, {{0, 1}, {1, 2}, {2, 3}}), iota(4));
    CHECK(p4.node(p4.root()).type == ModuleType::Prime);
    CHECK(p4.node(p4.root()).children.size() == 4);
    ModuleTree empty(adjacency(3, {}), iota(3));
    CHECK(empty.node(empty.root()).type == ModuleType::Parallel);
}

TEST_CASE("decomposition matches brute force on random graphs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 8;
        std::vector<std::pair<int, int>> edges;
        std::bernoulli_distribution coin(0.2 + 0.1 * (trial % 6));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        auto adj = adjacency(n, edges);
        ModuleTree t(adj, iota(n));
        auto brute = strongModulesBrute(adj, iota(n));
        std::sort(brute.begin(), brute.end());
        REQUIRE(treeModules(t) == brute);
        // node labels follow the child adjacency pattern
        for (int id = 0; id < t.nodeCount(); ++id) {
            const auto& nd = t.node(id);
            if (nd.type == ModuleType::Leaf) continue;
            bool allAdj = true, noneAdj = true;
            for (std::size_t i = 0; i < nd.children.size(); ++i)
                for (std::size_t j = i + 1; j < nd.children.size(); ++j) {
                    int a = t.node(nd.children[i]).vertices.front();
                    int b = t.node(nd.children[j]).vertices.front();
                    bool e = adj[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
                    allAdj &= e;
                    noneAdj &= !e;
                }
            if (nd.type == ModuleType::Serial) CHECK(allAdj);
            if (nd.type == ModuleType::Parallel) CHECK(noneAdj);
            if (nd.type == ModuleType::Prime) CHECK((!allAdj && !noneAdj));
        }
    }
}

TEST_CASE("transitive orientations per node kind") {
    auto p4adj = adjacency(4, {{0, 1}, {1, 2}, {2, 3}});
    ModuleTree p4(p4adj, iota(4));
    auto prime = transitiveOrientations(p4, p4.root(), p4adj);
    REQUIRE(prime.size() == 2);
    CHECK(prime[1] == prime[0].reversed());
    CHECK(prime[0].isTransitive());
    auto triAdj = adjacency(3, {{0, 1}, {1, 2}, {0, 2}});
    ModuleTree tri(triAdj, iota(3));
    CHECK(transitiveOrientations(tri, tri.root(), triAdj).size() == 6);
    auto emptyAdj = adjacency(3, {});
    ModuleTree empty(emptyAdj, iota(3));
    auto par = transitiveOrientations(empty, empty.root(), emptyAdj);
    REQUIRE(par.size() == 1);
    CHECK(std::none_of(par[0].bits.begin(), par[0].bits.end(), [](char c) { return c != 0; }));
}

TEST_CASE("orientation pair of two vertices") {
    auto crossing = adjacency(2, {{0, 1}});
    OrientationPair o{{0, 1}, Relation(2), Relation(2)};
    o.crossing.set(0, 1);
    auto p = permutationModelFromOrientations(o);
    CHECK(p.first == std::vector<int>{0, 1});
    CHECK(p.second == std::vector<int>{0, 1});
    OrientationPair q{{0, 1}, Relation(2), Relation(2)};
    q.nested.set(0, 1);
    auto r = permutationModelFromOrientations(q);
    CHECK(r.first == std::vector<int>{0, 1});
    CHECK(r.second == std::vector<int>{1, 0});
    auto back = orientationsFromModel(p, crossing);
    CHECK(back.crossing == o.crossing);
    CHECK(back.nested == o.nested);
}

TEST_CASE("orientation round trip on random permutation graphs") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        PermutationModel p{iota(5), iota(5)};
        std::shuffle(p.second.begin(), p.second.end(), rng);
        // x ~ y iff they appear in the same order in both permutations
        std::vector<int> pos1(5);
        for (int i = 0; i < 5; ++i) pos1[static_cast<std::size_t>(p.second[static_cast<std::size_t>(i)])] = i;
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < 5; ++x)
            for (int y = x + 1; y < 5; ++y)
                if (pos1[static_cast<std::size_t>(x)] < pos1[static_cast<std::size_t>(y)]) edges.emplace_back(x, y);
        auto adj = adjacency(5, edges);
        auto o = orientationsFromModel(p, adj);
        CHECK(o.crossing.isTransitive());
        CHECK(o.nested.isTransitive());
        auto again = permutationModelFromOrientations(o);
        CHECK(again.first == p.first);
        CHECK(again.second == p.second);
        auto o2 = orientationsFromModel(again, adj);
        CHECK(o2.crossing == o.crossing);
        CHECK(o2.nested == o.nested);
    }
}

TEST_CASE("non-total orientation union is rejected") {
    OrientationPair o{{0, 1, 2}, Relation(3), Relation(3)};
    o.crossing.set(0, 1);
    CHECK_THROWS_AS(permutationModelFromOrientations(o), OrientationError);
}
