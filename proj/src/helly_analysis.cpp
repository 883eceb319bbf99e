#include "hellyca/helly_analysis.hpp"

#include "hellyca/generators.hpp"

#include <algorithm>
#include <functional>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::vector<Letter> restrictTo(const std::vector<Letter>& word, const std::vector<int>& vertices) {
    std::vector<Letter> out;
    for (Letter l : word)
        if (std::find(vertices.begin(), vertices.end(), vertexOf(l)) != vertices.end()) out.push_back(l);
    return out;
}

bool helly(int n, const std::vector<Letter>& word, const std::vector<int>& clique) {
    return clique.empty() || !commonGaps(n, word, clique).empty();
}

}  // namespace

void requireClique(const Graph& g, const std::vector<int>& clique) {
    for (int v : clique)
        if (v < 0 || v >= g.size()) throw InvalidClique("clique vertex out of range");
    if (!isClique(g, clique)) throw InvalidClique("vertices do not pairwise intersect");
}

bool isCliqueHellyInModel(const ChordModel& m, const std::vector<int>& clique) {
    requireClique(graphFromModel(m), clique);
    return helly(m.size(), m.word, clique);
}

std::optional<std::vector<int>> structureOrder(const std::vector<Letter>& word, const std::vector<int>& clique) {
    const int k = static_cast<int>(clique.size());
    if (k < 3) return std::nullopt;
    auto r = restrictTo(word, clique);
    auto first = std::find_if(r.begin(), r.end(), [](Letter l) { return endOf(l) == 0; });
    std::rotate(r.begin(), first, r.end());
    std::vector<int> order;
    for (int i = 0; i < k; ++i) order.push_back(vertexOf(r[sz(2 * i)]));
    for (int i = 0; i < k; ++i) {
        if (r[sz(2 * i)] != letterOf(order[sz(i)], 0)) return std::nullopt;
        if (r[sz(2 * i + 1)] != letterOf(order[sz((i + 2) % k)], 1)) return std::nullopt;
    }
    return order;
}

std::optional<NonHellyStructure> findMinimalNonHelly(const ChordModel& m, const std::vector<int>& clique) {
    const int n = m.size();
    if (helly(n, m.word, clique)) return std::nullopt;
    std::vector<int> c = clique;
    for (std::size_t i = 0; i < c.size();) {
        auto without = c;
        without.erase(without.begin() + static_cast<long>(i));
        if (!helly(n, m.word, without))
            c = std::move(without);
        else
            ++i;
    }
    auto order = structureOrder(m.word, c);
    if (!order) throw std::logic_error("minimal non-Helly clique without the circular pattern");
    return NonHellyStructure{*order, m.word};
}

namespace {

// Induced cycle of length >= 4 in (C, ~) whose other pairs cover the circle.
bool hasRigidCycle(const RelationTable& rel, const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k < 4) return false;
    auto ov = [&](int i, int j) { return rel.at(c[sz(i)], c[sz(j)]) == PairRelation::Overlap; };
    auto cc = [&](int i, int j) { return rel.at(c[sz(i)], c[sz(j)]) == PairRelation::CoverCircle; };
    std::vector<int> path;
    std::function<bool()> grow = [&]() {
        const int s = path.front(), last = path.back();
        for (int x = s + 1; x < k; ++x) {
            if (std::find(path.begin(), path.end(), x) != path.end() || !ov(last, x)) continue;
            bool ok = true;
            for (std::size_t i = 1; i + 1 < path.size() && ok; ++i) ok = cc(path[i], x);
            if (!ok) continue;
            if (path.size() >= 3 && ov(s, x)) return true;
            if (path.size() >= 2 && !cc(s, x)) continue;
            if (path.size() == 1 && !ov(s, x)) continue;
            path.push_back(x);
            if (grow()) return true;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < k; ++s) {
        path = {s};
        if (grow()) return true;
    }
    return false;
}

bool rigidTriple(const PqmTree& t, int a, int b, int c) {
    const auto& rel = t.relations();
    if (!rel.overlap(a, b) || !rel.overlap(b, c) || !rel.overlap(a, c)) return false;
    const std::vector<int> tri{a, b, c};
    ModelChoice base = t.referenceChoice();
    std::function<void(ModelChoice&, int)> flip;
    if (t.moduleOf(a) == t.moduleOf(b) && t.moduleOf(b) == t.moduleOf(c)) {
        int ab = t.lowestCommonNode(a, b), n = t.lowestCommonNode(a, c);
        if (t.mnode(ab).depth < t.mnode(n).depth) n = ab;
        const auto& nd = t.mnode(n);
        if (nd.type != ModuleType::Prime) return false;
        int ka = t.childToward(n, a), kb = t.childToward(n, b), kc = t.childToward(n, c);
        if (ka == kb || kb == kc || ka == kc) return false;
        flip = [n](ModelChoice& ch, int f) { ch.flipM[sz(n)] = f; };
    } else {
        if (t.moduleOf(a) == t.moduleOf(b) || t.moduleOf(b) == t.moduleOf(c) || t.moduleOf(a) == t.moduleOf(c)) return false;
        if (t.rootCase() == RootCase::Prime) {
            flip = [](ModelChoice& ch, int f) { ch.flipRoot = f; };
        } else if (t.rootCase() == RootCase::Parallel) {
            int q = t.componentOf(a);
            flip = [q](ModelChoice& ch, int f) { ch.flipQ[sz(q)] = f; };
        } else {
            return false;
        }
    }
    for (int f = 0; f < 2; ++f) {
        ModelChoice ch = base;
        flip(ch, f);
        if (!structureOrder(t.generate(ch), tri)) return false;
    }
    return true;
}

}  // namespace

bool isRigidNonHelly(const PqmTree& t, const std::vector<int>& clique) {
    if (clique.size() < 3) return false;
    if (hasRigidCycle(t.relations(), clique)) return true;
    const std::size_t k = clique.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                if (rigidTriple(t, clique[i], clique[j], clique[l])) return true;
    return false;
}

bool forEachMaximalClique(const Graph& g, std::size_t cap, const std::function<bool(const std::vector<int>&)>& visit) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        adj[v] = g.closed(static_cast<int>(v));
        adj[v].reset(v);
    }
    std::size_t count = 0;
    bool stopped = false;
    std::vector<int> r;
    std::function<void(Bits, Bits)> bk = [&](Bits p, Bits x) {
        if (stopped) return;
        if (p.none() && x.none()) {
            if (++count > cap || !visit(r)) stopped = true;
            return;
        }
        // pivot with the most neighbours in p
        Bits px = p | x;
        std::size_t pivot = px.find_first(), best = 0;
        for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
            auto d = (p & adj[u]).count();
            if (d >= best) best = d, pivot = u;
        }
        Bits cand = p - adj[pivot];
        for (auto v = cand.find_first(); v != Bits::npos && !stopped; v = cand.find_next(v)) {
            r.push_back(static_cast<int>(v));
            bk(p & adj[v], x & adj[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    Bits all(n);
    all.set();
    if (n > 0) bk(all, Bits(n));
    return !stopped;
}

HellyDecision decideHellyModel(const ChordModel& m) {
    HellyDecision d;
    const int n = m.size();
    auto g = graphFromModel(m);
    std::optional<std::vector<int>> bad;
    bool complete = forEachMaximalClique(g, static_cast<std::size_t>(10 * std::max(1, n)), [&](const std::vector<int>& c) {
        if (helly(n, m.word, c)) return true;
        bad = c;
        return false;
    });
    if (bad) {
        d.verdict = HellyVerdict::NoneHelly;
        d.witness = findMinimalNonHelly(m, *bad);
    } else if (!complete) {
        // Helly models have at most 2n maximal cliques.
        d.verdict = HellyVerdict::NoneHelly;
        d.cliqueCapHit = true;
        for (int a = 0; a < n && !d.witness; ++a)
            for (int b = a + 1; b < n && !d.witness; ++b)
                for (int c = b + 1; c < n && !d.witness; ++c)
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c) && !helly(n, m.word, {a, b, c}))
                        d.witness = findMinimalNonHelly(m, {a, b, c});
    }
    return d;
}

HellyDecision decideHellyGraph(const PqmTree& t) {
    const auto& m = t.reference();
    auto g = graphFromModel(m);
    auto p = preprocess(g, m);
    auto model = normalize(p.model, p.graph);
    auto d = decideHellyModel(model);
    d.reduced = p.graph.size() != g.size() || model.word != p.model.word;
    if (d.witness) {
        for (int& v : d.witness->order) v = p.toOriginal[sz(v)];
        // report the word over the original vertex ids, reduced chords only
        for (Letter& l : d.witness->word) l = letterOf(p.toOriginal[sz(vertexOf(l))], endOf(l));
    }
    return d;
}

namespace {

// Letters of node `id` in slot side j, in clockwise order of the word.
std::vector<Letter> nodeSlotWord(const PqmTree& t, const std::vector<Letter>& word, int id, int j) {
    const int module = t.mnode(id).module;
    const int len = static_cast<int>(word.size());
    auto inSlot = [&](Letter l) {
        int v = vertexOf(l);
        return t.moduleOf(v) == module && t.slotLetter(v, j) == l;
    };
    int start = 0;
    for (int i = 0; i < len; ++i)
        if (inSlot(word[sz(i)]) && !inSlot(word[sz((i + len - 1) % len)])) start = i;
    std::vector<Letter> out;
    for (int i = 0; i < len; ++i) {
        Letter l = word[sz((start + i) % len)];
        if (inSlot(l) && t.inMNode(id, vertexOf(l))) out.push_back(l);
    }
    return out;
}

bool subsequence(const std::vector<Letter>& word, std::initializer_list<Letter> pattern) {
    auto it = word.begin();
    for (Letter l : pattern) {
        it = std::find(it, word.end(), l);
        if (it == word.end()) return false;
        ++it;
    }
    return true;
}

}  // namespace

std::optional<std::pair<int, int>> technicalCrossingWitness(const PqmTree& t, const std::vector<Letter>& word,
                                                            int node, int a, int b, CrossingCase kind) {
    if (!t.inMNode(node, a) || !t.inMNode(node, b) || !t.relations().overlap(a, b))
        throw std::invalid_argument("technicalCrossingWitness: a, b must be overlapping chords of the node");
    const std::vector<Letter> slot[2] = {nodeSlotWord(t, word, node, 0), nodeSlotWord(t, word, node, 1)};
    const bool same = kind == CrossingCase::SameDirection;
    int j = -1;
    for (int s = 0; s < 2 && j < 0; ++s)
        if (subsequence(slot[s], {letterOf(a, same ? 0 : 1), letterOf(b, 0)})) j = s;
    if (j < 0) throw std::invalid_argument("technicalCrossingWitness: premise not met in this model");
    const auto& here = slot[sz(j)];
    const auto& there = slot[sz(1 - j)];
    for (int c : t.mnode(node).vertices)
        for (int d : t.mnode(node).vertices) {
            if (c == d || !t.relations().overlap(c, d)) continue;
            bool ok = same ? subsequence(here, {letterOf(c, 1), letterOf(a, 0), letterOf(d, 1), letterOf(b, 0)}) &&
                                 subsequence(there, {letterOf(a, 1), letterOf(c, 0), letterOf(b, 1), letterOf(d, 0)})
                           : subsequence(here, {letterOf(a, 1), letterOf(c, 0), letterOf(d, 1), letterOf(b, 0)}) &&
                                 subsequence(there, {letterOf(c, 1), letterOf(a, 0), letterOf(b, 1), letterOf(d, 0)});
            if (ok) return std::pair{c, d};
        }
    return std::nullopt;
}

}  // namespace hca
