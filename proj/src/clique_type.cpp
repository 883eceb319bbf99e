#include "hellyca/clique_type.hpp"

#include "hellyca/helly_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

using Pairs = std::array<bool, 4>;

int indexIn(const std::vector<int>& v, int x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

// Any order on children respecting all edges of `edges`?
bool acyclic(const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::vector<int>> out;
    std::map<int, int> indeg;
    for (auto [a, b] : edges) {
        out[a].push_back(b);
        ++indeg[b];
        indeg.try_emplace(a, 0);
    }
    std::vector<int> ready;
    for (auto [v, d] : indeg)
        if (d == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return seen == indeg.size();
}

Pairs serialPairs(const std::vector<std::pair<int, int>>& e0, const std::vector<std::pair<int, int>>& e1) {
    Pairs p{};
    auto both = e0;
    both.insert(both.end(), e1.begin(), e1.end());
    p[0] = acyclic(both);
    auto violateOne = [](const std::vector<std::pair<int, int>>& broken, const std::vector<std::pair<int, int>>& kept) {
        for (auto [a, b] : broken) {
            auto edges = kept;
            edges.emplace_back(b, a);
            if (acyclic(edges)) return true;
        }
        return false;
    };
    p[2] = violateOne(e0, e1);
    p[1] = violateOne(e1, e0);
    for (auto x : e0)
        for (auto y : e1)
            if (y != std::pair{x.second, x.first}) p[3] = true;
    return p;
}

Pairs combine(const Pairs& a, const Pairs& b) {
    Pairs out{};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (a[sz(x)] && b[sz(y)]) out[sz(x | y)] = true;
    return out;
}

Pairs single(bool v0, bool v1) {
    Pairs p{};
    p[sz(2 * v0 + v1)] = true;
    return p;
}

bool primeLikeRoot(const PqmTree& t) { return t.rootCase() == RootCase::Prime || t.rootCase() == RootCase::Parallel; }

void setQFlip(const PqmTree& t, ModelChoice& c, int q, int f) {
    if (t.rootCase() == RootCase::Prime) c.flipRoot = f;
    else c.flipQ[sz(q)] = f;
}

int qFlipOf(const PqmTree& t, const ModelChoice& c, int q) {
    return t.rootCase() == RootCase::Prime ? c.flipRoot : c.flipQ[sz(q)];
}

bool outsideCovers(const PqmTree& t, const CliqueAnalysis& a, const std::vector<int>& order, int j) {
    return std::all_of(a.outside.begin(), a.outside.end(),
                       [&](int c) { return slotOnArc(t, order, c, slotOf(a.module, j)); });
}

bool ownerChain(const PqmTree& t, std::vector<int>& owners) {
    std::sort(owners.begin(), owners.end(), [&](int x, int y) { return t.mnode(x).depth < t.mnode(y).depth; });
    for (std::size_t i = 1; i < owners.size(); ++i) {
        int cur = owners[i];
        while (cur >= 0 && cur != owners[i - 1]) cur = t.mnode(cur).parent;
        if (cur < 0) return false;
    }
    return true;
}

void fillSets(const PqmTree& t, CliqueAnalysis& a) {
    auto add = [&](int node, const std::vector<int>& kids, const std::function<bool(int, int)>& holds) {
        NodeSets s;
        s.node = node;
        for (int k : kids) {
            if (std::find(a.owners.begin(), a.owners.end(), k) != a.owners.end()) continue;
            int member = -1;
            for (int v : a.cleaned)
                if (holds(k, v)) member = v;
            if (member < 0) continue;
            s.inner.push_back(k);
            (t.forward(member) ? s.left : s.right).push_back(k);
        }
        a.sets.push_back(std::move(s));
    };
    for (int m : a.owners)
        add(m, t.mnode(m).children, [&](int k, int v) { return t.inMNode(k, v); });
    std::vector<int> mods;
    for (int m : t.qnodes()[sz(a.component)].modules)
        if (m != a.module) mods.push_back(m);
    add(-1, mods, [&](int k, int v) { return t.moduleOf(v) == k; });
}

}  // namespace

SlotRequirement slotPrecedence(const PqmTree& t, const std::vector<int>& first, const std::vector<int>& second, int j) {
    SlotRequirement req;
    for (int a : first)
        for (int b : second) {
            if (a == b) continue;
            const int n = t.lowestCommonNode(a, b);
            const auto& nd = t.mnode(n);
            const int ka = t.childToward(n, a), kb = t.childToward(n, b);
            const int ia = indexIn(nd.children, ka), ib = indexIn(nd.children, kb);
            if (nd.nested(ia, ib) || nd.nested(ib, ia)) {
                if (!(j == 0 ? nd.nested(ia, ib) : nd.nested(ib, ia))) req.fixedOk = false;
            } else if (nd.type == ModuleType::Prime) {
                req.flips.emplace_back(n, nd.crossing(ia, ib) ? 0 : 1);
            } else {
                req.edges.push_back({n, ka, kb});
            }
        }
    std::sort(req.flips.begin(), req.flips.end());
    req.flips.erase(std::unique(req.flips.begin(), req.flips.end()), req.flips.end());
    std::sort(req.edges.begin(), req.edges.end());
    req.edges.erase(std::unique(req.edges.begin(), req.edges.end()), req.edges.end());
    return req;
}

std::pair<std::vector<int>, std::vector<int>> startsAndEnds(const PqmTree& t, const std::vector<int>& vertices, int j) {
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v : vertices) (t.forward(v) == (j == 0) ? out.first : out.second).push_back(v);
    return out;
}

const char* cliqueStageName(CliqueStage s) {
    switch (s) {
    case CliqueStage::Small: return "small";
    case CliqueStage::SeveralComponents: return "several-components";
    case CliqueStage::Rigid: return "rigid";
    case CliqueStage::Public: return "public";
    case CliqueStage::IncomparableOwners: return "incomparable-owners";
    case CliqueStage::CoverPairOutside: return "cover-pair-outside";
    case CliqueStage::Private: return "private";
    }
    return "?";
}

bool slotOnArc(const PqmTree& t, const std::vector<int>& slotOrder, int v, int s) {
    const int tail = slotOf(t.moduleOf(v), t.forward(v) ? 0 : 1);
    const int k = static_cast<int>(slotOrder.size());
    const int from = indexIn(slotOrder, tail);
    for (int i = 1; i < k; ++i) {
        int x = slotOrder[sz((from + i) % k)];
        if (x == s) return true;
        if (x == (tail ^ 1)) return false;
    }
    return false;
}

std::vector<int> cleanClique(const PqmTree& t, const std::vector<int>& clique) {
    std::vector<int> out;
    for (int v : clique)
        if (std::none_of(clique.begin(), clique.end(), [&](int u) { return t.relations().at(v, u) == PairRelation::Contains; }))
            out.push_back(v);
    return out;
}

CliqueAnalysis analyzeClique(const PqmTree& t, const std::vector<int>& clique) {
    CliqueAnalysis a;
    a.clique = clique;
    std::sort(a.clique.begin(), a.clique.end());
    a.clique.erase(std::unique(a.clique.begin(), a.clique.end()), a.clique.end());
    const auto& rel = t.relations();
    for (int v : a.clique)
        if (v < 0 || v >= t.vertexCount()) throw InvalidClique("clique vertex out of range");
    for (int v : a.clique)
        for (int u : a.clique)
            if (u != v && rel.at(v, u) == PairRelation::Disjoint) throw InvalidClique("clique chords do not intersect");

    a.cleaned = cleanClique(t, a.clique);
    auto settle = [&](CliqueStage s, CliqueType ty) {
        a.stage = s;
        a.type = ty;
        return a;
    };
    if (a.cleaned.size() <= 2) return settle(CliqueStage::Small, CliqueType::AlwaysHelly);
    a.component = t.componentOf(a.cleaned.front());
    for (int v : a.cleaned)
        if (t.componentOf(v) != a.component) return settle(CliqueStage::SeveralComponents, CliqueType::AlwaysHelly);
    if (isRigidNonHelly(t, a.cleaned)) return settle(CliqueStage::Rigid, CliqueType::AlwaysNonHelly);

    a.owners = t.owners(a.cleaned);
    if (a.owners.empty()) {
        std::set<int> mods;
        for (int v : a.cleaned) mods.insert(t.moduleOf(v));
        bool serial = t.rootCase() == RootCase::Serial;
        return settle(CliqueStage::Public, serial && mods.size() > 2 ? CliqueType::Ambiguous : CliqueType::AlwaysHelly);
    }
    a.module = t.mnode(a.owners.front()).module;
    for (int m : a.owners)
        if (t.mnode(m).module != a.module) return settle(CliqueStage::IncomparableOwners, CliqueType::AlwaysNonHelly);
    if (!ownerChain(t, a.owners)) return settle(CliqueStage::IncomparableOwners, CliqueType::AlwaysNonHelly);
    const int deepest = a.owners.back();
    std::vector<int> beyond;
    for (int v : a.cleaned)
        if (!t.inMNode(deepest, v)) beyond.push_back(v);
    for (int x : beyond)
        for (int y : beyond)
            if (x != y && !rel.overlap(x, y)) return settle(CliqueStage::CoverPairOutside, CliqueType::AlwaysNonHelly);

    a.stage = CliqueStage::Private;
    std::vector<int> inside;
    for (int v : a.cleaned) (t.moduleOf(v) == a.module ? inside : a.outside).push_back(v);
    fillSets(t, a);
    for (int j = 0; j < 2; ++j) {
        auto [starts, ends] = startsAndEnds(t, inside, j);
        a.slots[sz(j)] = slotPrecedence(t, starts, ends, j);
    }

    // Per node achievable (violates slot 0, violates slot 1) pairs.
    std::map<int, Pairs> perNode;
    std::set<int> prime, serial;
    for (int j = 0; j < 2; ++j) {
        for (auto [n, f] : a.slots[sz(j)].flips) prime.insert(n);
        for (const auto& e : a.slots[sz(j)].edges) serial.insert(e[0]);
    }
    for (int n : prime) {
        Pairs p{};
        for (int f = 0; f < 2; ++f) {
            bool v[2];
            for (int j = 0; j < 2; ++j) {
                const auto& fl = a.slots[sz(j)].flips;
                v[j] = std::any_of(fl.begin(), fl.end(), [&](auto x) { return x.first == n && x.second != f; });
            }
            p[sz(2 * v[0] + v[1])] = true;
        }
        perNode[n] = p;
    }
    for (int n : serial) {
        std::vector<std::pair<int, int>> e[2];
        for (int j = 0; j < 2; ++j)
            for (const auto& x : a.slots[sz(j)].edges)
                if (x[0] == n) e[j].emplace_back(x[1], x[2]);
        perNode[n] = serialPairs(e[0], e[1]);
    }
    Pairs qPairs{};
    if (primeLikeRoot(t)) {
        for (int f = 0; f < 2; ++f) {
            ModelChoice c = t.referenceChoice();
            setQFlip(t, c, a.component, f);
            auto order = t.slotOrderFor(c);
            for (int j = 0; j < 2; ++j) a.slots[sz(j)].qOrdering[sz(f)] = outsideCovers(t, a, order, j);
            qPairs[sz(2 * !a.slots[0].qOrdering[sz(f)] + !a.slots[1].qOrdering[sz(f)])] = true;
        }
    } else {
        std::set<int> mods;
        for (int v : a.outside) mods.insert(t.moduleOf(v));
        if (mods.empty()) qPairs = single(false, false);
        else {
            qPairs[1] = qPairs[2] = true;
            qPairs[3] = mods.size() >= 2;
        }
    }

    Pairs total = single(!a.slots[0].fixedOk, !a.slots[1].fixedOk);
    auto note = [&](int node, const Pairs& p) {
        total = combine(total, p);
        if (p == single(false, false)) return;
        a.affecting.push_back({node, p[1], p[2], p[3]});
    };
    for (int m : a.owners)
        if (perNode.count(m)) note(m, perNode[m]);
    note(-1, qPairs);
    a.achievable = total;
    if (!total[3]) a.type = CliqueType::AlwaysHelly;
    else if (!total[0] && !total[1] && !total[2]) a.type = CliqueType::AlwaysNonHelly;
    else a.type = CliqueType::Ambiguous;
    return a;
}

CliqueType classify(const PqmTree& t, const std::vector<int>& clique) { return analyzeClique(t, clique).type; }

const std::vector<AffectingNode>& affectingNodes(const CliqueAnalysis& a) { return a.affecting; }

bool bindsInSlot(const PqmTree& t, const CliqueAnalysis& a, int j, const ModelChoice& choice) {
    if (a.stage != CliqueStage::Private) throw std::invalid_argument("bindsInSlot: clique is not settled by its slots");
    const auto& req = a.slots[sz(j)];
    if (!req.fixedOk) return false;
    for (auto [n, f] : req.flips)
        if (choice.flipM[sz(n)] != f) return false;
    for (const auto& e : req.edges) {
        const auto& order = choice.orderM[sz(e[0])];
        if (indexIn(order, e[1]) > indexIn(order, e[2])) return false;
    }
    if (primeLikeRoot(t)) return req.qOrdering[sz(qFlipOf(t, choice, a.component))];
    return outsideCovers(t, a, t.slotOrderFor(choice), j);
}

bool bindsInSlot(const PqmTree& t, const std::vector<int>& clique, int j, const ModelChoice& choice) {
    return bindsInSlot(t, analyzeClique(t, clique), j, choice);
}

}  // namespace hca
