#include "hellyca/graph.hpp"

#include <algorithm>
#include <map>

namespace hca {

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
    const auto n = names_.size();
    closed_.assign(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) closed_[v].set(v);
}

int Graph::indexOf(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

void Graph::addEdge(int u, int v) {
    if (u == v) return;
    closed_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    closed_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

bool Graph::hasTwinsOrUniversal() const {
    for (int v = 0; v < size(); ++v) {
        if (isUniversal(v)) return true;
        for (int u = v + 1; u < size(); ++u)
            if (areTwins(u, v)) return true;
    }
    return false;
}

Graph graphFromModel(const ChordModel& m) {
    Graph g(m.names);
    Geometry geo(m);
    for (int v = 0; v < m.size(); ++v)
        for (int u = v + 1; u < m.size(); ++u)
            if (geo.onArc(v, geo.pos(letterOf(u, 0))) || geo.onArc(u, geo.pos(letterOf(v, 0))))
                g.addEdge(u, v);
    return g;
}

const char* relationName(PairRelation r) {
    switch (r) {
    case PairRelation::Disjoint: return "disjoint";
    case PairRelation::Contains: return "contains";
    case PairRelation::ContainedIn: return "contained-in";
    case PairRelation::CoverCircle: return "cover-circle";
    case PairRelation::Overlap: return "overlap";
    }
    return "?";
}

const char* cliqueTypeName(CliqueType t) {
    switch (t) {
    case CliqueType::AlwaysHelly: return "always-helly";
    case CliqueType::AlwaysNonHelly: return "always-non-helly";
    case CliqueType::Ambiguous: return "ambiguous";
    }
    return "?";
}

PairRelation converse(PairRelation r) {
    if (r == PairRelation::Contains) return PairRelation::ContainedIn;
    if (r == PairRelation::ContainedIn) return PairRelation::Contains;
    return r;
}

namespace {

bool properSubset(const Bits& a, const Bits& b) { return a.is_proper_subset_of(b); }

}  // namespace

PairRelation forcedRelation(const Graph& g, int v, int u) {
    if (!g.adjacent(v, u)) return PairRelation::Disjoint;
    const Bits& nv = g.closed(v);
    const Bits& nu = g.closed(u);
    if (properSubset(nu, nv)) return PairRelation::Contains;
    if (properSubset(nv, nu)) return PairRelation::ContainedIn;
    if ((nv | nu).all()) {
        auto dominated = [&](const Bits& own, const Bits& other) {
            Bits only = own - other;
            for (auto w = only.find_first(); w != Bits::npos; w = only.find_next(w))
                if (!properSubset(g.closed(static_cast<int>(w)), own)) return false;
            return true;
        };
        if (dominated(nv, nu) && dominated(nu, nv)) return PairRelation::CoverCircle;
    }
    return PairRelation::Overlap;
}

PairRelation classifyPair(const Graph& g, int v, int u) {
    if (v == u) throw std::invalid_argument("classifyPair needs two distinct vertices");
    if (g.hasTwinsOrUniversal())
        throw PreprocessingRequired("graph has twins or universal vertices");
    return forcedRelation(g, v, u);
}

RelationTable::RelationTable(int n) : n_(n), rel_(static_cast<std::size_t>(n * n), PairRelation::Disjoint) {}

void RelationTable::set(int v, int u, PairRelation r) {
    rel_[static_cast<std::size_t>(v * n_ + u)] = r;
    rel_[static_cast<std::size_t>(u * n_ + v)] = converse(r);
}

bool RelationTable::inLeft(int v, int u) const {
    if (v == u) return false;
    auto r = at(v, u);
    return r == PairRelation::Contains || r == PairRelation::CoverCircle;
}

bool RelationTable::inRight(int v, int u) const {
    if (v == u) return false;
    auto r = at(v, u);
    return r == PairRelation::Disjoint || r == PairRelation::ContainedIn;
}

RelationTable relationsFromGraph(const Graph& g) {
    if (g.hasTwinsOrUniversal())
        throw PreprocessingRequired("graph has twins or universal vertices");
    RelationTable t(g.size());
    for (int v = 0; v < g.size(); ++v)
        for (int u = v + 1; u < g.size(); ++u) t.set(v, u, forcedRelation(g, v, u));
    return t;
}

PairRelation geometricRelation(const Geometry& geo, int v, int u) {
    if (geo.crosses(v, u)) return PairRelation::Overlap;
    bool uLeft = geo.leftOf(v, u);
    bool vLeft = geo.leftOf(u, v);
    if (uLeft && vLeft) return PairRelation::CoverCircle;
    if (uLeft) return PairRelation::Contains;
    if (vLeft) return PairRelation::ContainedIn;
    return PairRelation::Disjoint;
}

RelationTable relationsFromModel(const ChordModel& m) {
    Geometry geo(m);
    RelationTable t(m.size());
    for (int v = 0; v < m.size(); ++v)
        for (int u = v + 1; u < m.size(); ++u) t.set(v, u, geometricRelation(geo, v, u));
    return t;
}

SideSets leftRightSets(const RelationTable& rel) {
    const auto n = static_cast<std::size_t>(rel.size());
    SideSets s{std::vector<Bits>(n, Bits(n)), std::vector<Bits>(n, Bits(n))};
    for (int v = 0; v < rel.size(); ++v)
        for (int u = 0; u < rel.size(); ++u) {
            if (rel.inLeft(v, u)) s.left[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
            if (rel.inRight(v, u)) s.right[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        }
    return s;
}

Preprocessed preprocess(const Graph& g, const ChordModel& m) {
    Preprocessed p;
    const int n = g.size();
    p.toReduced.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> classOf(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (g.isUniversal(v)) {
            p.universal.push_back(v);
            continue;
        }
        if (classOf[static_cast<std::size_t>(v)] >= 0) continue;
        classOf[static_cast<std::size_t>(v)] = static_cast<int>(p.twinClasses.size());
        std::vector<int> cls{v};
        for (int u = v + 1; u < n; ++u)
            if (!g.isUniversal(u) && g.areTwins(u, v)) {
                classOf[static_cast<std::size_t>(u)] = classOf[static_cast<std::size_t>(v)];
                cls.push_back(u);
            }
        p.twinClasses.push_back(std::move(cls));
    }
    std::vector<std::string> names;
    for (const auto& cls : p.twinClasses) {
        p.toOriginal.push_back(cls.front());
        names.push_back(g.name(cls.front()));
    }
    for (int v = 0; v < n; ++v) {
        int c = classOf[static_cast<std::size_t>(v)];
        if (c >= 0) p.toReduced[static_cast<std::size_t>(v)] = c;
    }
    p.graph = Graph(names);
    for (std::size_t a = 0; a < p.toOriginal.size(); ++a)
        for (std::size_t b = a + 1; b < p.toOriginal.size(); ++b)
            if (g.adjacent(p.toOriginal[a], p.toOriginal[b]))
                p.graph.addEdge(static_cast<int>(a), static_cast<int>(b));
    p.model.names = names;
    for (Letter l : m.word) {
        int v = vertexOf(l);
        int r = p.toReduced[static_cast<std::size_t>(v)];
        if (r >= 0 && p.toOriginal[static_cast<std::size_t>(r)] == v) p.model.word.push_back(letterOf(r, endOf(l)));
    }
    return p;
}

std::vector<int> mapClique(const Preprocessed& p, const std::vector<int>& clique) {
    std::vector<int> out;
    for (int v : clique) {
        int r = p.toReduced[static_cast<std::size_t>(v)];
        if (r >= 0) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string ConformalCheck::message() const {
    if (ok) return "ok";
    return "pair (" + std::to_string(v) + "," + std::to_string(u) + "): expected " + expected + ", found " + actual;
}

ConformalCheck validateConformal(const ChordModel& m, const Graph& g) {
    ConformalCheck c;
    if (m.names != g.names()) {
        c.ok = false;
        c.expected = "same vertex set";
        c.actual = "different vertex set";
        return c;
    }
    Geometry geo(m);
    for (int v = 0; v < g.size(); ++v)
        for (int u = 0; u < g.size(); ++u) {
            if (u == v) continue;
            auto actual = geometricRelation(geo, v, u);
            bool meets = actual != PairRelation::Disjoint;
            if (meets != g.adjacent(v, u)) {
                c = {false, v, u, g.adjacent(v, u) ? "intersecting" : "disjoint", meets ? "intersecting" : "disjoint"};
                return c;
            }
            bool degenerate = g.isUniversal(v) || g.isUniversal(u) || g.areTwins(v, u);
            if (degenerate) continue;
            auto expected = forcedRelation(g, v, u);
            if (expected != actual) {
                c = {false, v, u, relationName(expected), relationName(actual)};
                return c;
            }
        }
    return c;
}

ConformalCheck validateAgainst(const ChordModel& m, const RelationTable& rel) {
    ConformalCheck c;
    Geometry geo(m);
    for (int v = 0; v < m.size(); ++v)
        for (int u = v + 1; u < m.size(); ++u) {
            auto actual = geometricRelation(geo, v, u);
            if (actual != rel.at(v, u)) {
                c = {false, v, u, relationName(rel.at(v, u)), relationName(actual)};
                return c;
            }
        }
    return c;
}

bool isClique(const Graph& g, const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.adjacent(c[i], c[j])) return false;
    return true;
}

}  // namespace hca
