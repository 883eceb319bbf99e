#include "hellyca/modules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace hca {

const char* moduleTypeName(ModuleType t) {
    switch (t) {
    case ModuleType::Leaf: return "leaf";
    case ModuleType::Serial: return "serial";
    case ModuleType::Parallel: return "parallel";
    case ModuleType::Prime: return "prime";
    }
    return "?";
}

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

Bits maskOf(std::size_t n, const std::vector<int>& vs) {
    Bits b(n);
    for (int v : vs) b.set(sz(v));
    return b;
}

std::vector<int> toList(const Bits& b) {
    std::vector<int> out;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

// Connected components of the graph (or its complement) induced on `within`.
std::vector<std::vector<int>> components(const std::vector<Bits>& adj, const Bits& within, bool complement) {
    std::vector<std::vector<int>> out;
    Bits left = within;
    while (left.any()) {
        auto start = left.find_first();
        Bits comp(within.size());
        comp.set(start);
        left.reset(start);
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            Bits nb = complement ? (left - adj[x]) : (left & adj[x]);
            if (complement) nb.reset(x);
            for (auto y = nb.find_first(); y != Bits::npos; y = nb.find_next(y)) {
                left.reset(y);
                comp.set(y);
                queue.push_back(y);
            }
        }
        out.push_back(toList(comp));
    }
    return out;
}

bool splits(const std::vector<Bits>& adj, int z, const Bits& set) {
    Bits in = set & adj[sz(z)];
    return in.any() && in != set;
}

Bits moduleClosure(const std::vector<Bits>& adj, const Bits& universe, Bits set) {
    bool grown = true;
    while (grown) {
        grown = false;
        Bits outside = universe - set;
        Bits add(universe.size());
        for (auto z = outside.find_first(); z != Bits::npos; z = outside.find_next(z))
            if (splits(adj, static_cast<int>(z), set)) add.set(z);
        if (add.any()) {
            set |= add;
            grown = true;
        }
    }
    return set;
}

// Maximal modules of the induced graph that avoid v.
std::vector<Bits> modulesAvoiding(const std::vector<Bits>& adj, const Bits& universe, int v) {
    Bits rest = universe;
    rest.reset(sz(v));
    std::vector<Bits> parts;
    Bits in = rest & adj[sz(v)];
    Bits out = rest - adj[sz(v)];
    if (in.any()) parts.push_back(in);
    if (out.any()) parts.push_back(out);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto z = universe.find_first(); z != Bits::npos; z = universe.find_next(z)) {
            std::vector<Bits> next;
            for (const auto& p : parts) {
                if (p.test(z)) {
                    next.push_back(p);
                    continue;
                }
                Bits a = p & adj[z];
                Bits b = p - adj[z];
                if (a.any() && b.any()) {
                    next.push_back(a);
                    next.push_back(b);
                    changed = true;
                } else {
                    next.push_back(p);
                }
            }
            parts = std::move(next);
        }
    }
    return parts;
}

}  // namespace

ModuleTree::ModuleTree(const std::vector<Bits>& adj, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    leaf_.assign(adj.size(), -1);
    if (!subset.empty()) root_ = build(adj, std::move(subset), -1);
}

int ModuleTree::build(const std::vector<Bits>& adj, std::vector<int> vertices, int parent) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    nodes_[sz(id)].vertices = vertices;
    nodes_[sz(id)].parent = parent;
    if (vertices.size() == 1) {
        nodes_[sz(id)].type = ModuleType::Leaf;
        leaf_[sz(vertices[0])] = id;
        return id;
    }
    const Bits universe = maskOf(adj.size(), vertices);
    std::vector<std::vector<int>> parts = components(adj, universe, false);
    ModuleType type = ModuleType::Parallel;
    if (parts.size() == 1) {
        parts = components(adj, universe, true);
        type = ModuleType::Serial;
    }
    if (parts.size() == 1) {
        type = ModuleType::Prime;
        parts.clear();
        const int v = vertices.front();
        Bits own(adj.size());
        own.set(sz(v));
        for (const auto& p : modulesAvoiding(adj, universe, v)) {
            Bits probe = p;
            probe.set(sz(v));
            if (moduleClosure(adj, universe, probe) != universe) own |= p;
            else parts.push_back(toList(p));
        }
        parts.push_back(toList(own));
    }
    std::sort(parts.begin(), parts.end());
    nodes_[sz(id)].type = type;
    std::vector<int> kids;
    for (auto& p : parts) kids.push_back(build(adj, std::move(p), id));
    nodes_[sz(id)].children = std::move(kids);
    return id;
}

int ModuleTree::leafOf(int v) const { return leaf_[sz(v)]; }

bool ModuleTree::contains(int id, int v) const {
    const auto& vs = node(id).vertices;
    return std::binary_search(vs.begin(), vs.end(), v);
}

int ModuleTree::childContaining(int id, int v) const {
    int cur = leafOf(v);
    while (cur >= 0 && node(cur).parent != id) cur = node(cur).parent;
    return cur;
}

bool isModule(const std::vector<Bits>& adj, const std::vector<int>& subset, const std::vector<int>& m) {
    Bits set = maskOf(adj.size(), m);
    for (int z : subset)
        if (!set.test(sz(z)) && splits(adj, z, set)) return false;
    return true;
}

std::vector<std::vector<int>> strongModulesBrute(const std::vector<Bits>& adj, const std::vector<int>& subset) {
    const std::size_t k = subset.size();
    std::vector<std::vector<int>> modules;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> m;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) m.push_back(subset[i]);
        if (isModule(adj, subset, m)) modules.push_back(m);
    }
    std::vector<std::vector<int>> strong;
    for (const auto& m : modules) {
        bool ok = true;
        for (const auto& o : modules) {
            std::vector<int> common;
            std::set_intersection(m.begin(), m.end(), o.begin(), o.end(), std::back_inserter(common));
            if (!common.empty() && common.size() != m.size() && common.size() != o.size()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            auto sorted = m;
            std::sort(sorted.begin(), sorted.end());
            strong.push_back(sorted);
        }
    }
    std::sort(strong.begin(), strong.end());
    return strong;
}

Relation Relation::reversed() const {
    Relation r(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.set(a, b, (*this)(b, a));
    return r;
}

bool Relation::isTransitive() const {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!(*this)(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if ((*this)(b, c) && !(*this)(a, c)) return false;
        }
    return true;
}

Relation primeOrientation(const Relation& q) {
    const int k = q.n;
    Relation o(k);
    auto orient = [&](int a, int b, std::deque<std::pair<int, int>>& queue) {
        if (o(b, a)) throw OrientationError("prime quotient is not a comparability graph");
        if (!o(a, b)) {
            o.set(a, b);
            queue.emplace_back(a, b);
        }
    };
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t) {
            if (!q(s, t) || o(s, t) || o(t, s)) continue;
            std::deque<std::pair<int, int>> queue;
            orient(s, t, queue);
            while (!queue.empty()) {
                auto [a, b] = queue.front();
                queue.pop_front();
                for (int c = 0; c < k; ++c) {
                    if (c == a || c == b) continue;
                    if (q(a, c) && !q(b, c)) orient(a, c, queue);
                    if (q(c, b) && !q(a, c)) orient(c, b, queue);
                }
            }
        }
    if (!o.isTransitive()) throw OrientationError("forced orientation is not transitive");
    return o;
}

std::vector<Relation> transitiveOrientations(const ModuleTree& t, int id, const std::vector<Bits>& adj) {
    const auto& nd = t.node(id);
    if (nd.type == ModuleType::Leaf) throw std::invalid_argument("leaf has no orientations");
    const int k = static_cast<int>(nd.children.size());
    if (nd.type == ModuleType::Parallel) return {Relation(k)};
    if (nd.type == ModuleType::Serial) {
        std::vector<int> perm(sz(k));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Relation> out;
        do {
            Relation r(k);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) r.set(perm[sz(i)], perm[sz(j)]);
            out.push_back(r);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    Relation q(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int a = t.node(nd.children[sz(i)]).vertices.front();
            int b = t.node(nd.children[sz(j)]).vertices.front();
            if (i != j && adj[sz(a)].test(sz(b))) q.set(i, j);
        }
    Relation o = primeOrientation(q);
    return {o, o.reversed()};
}

OrientationPair orientationsFromModel(const PermutationModel& p, const std::vector<Bits>& adj) {
    OrientationPair o;
    o.vertices = p.first;
    std::sort(o.vertices.begin(), o.vertices.end());
    const int k = static_cast<int>(o.vertices.size());
    std::map<int, int> local;
    for (int i = 0; i < k; ++i) local[o.vertices[sz(i)]] = i;
    o.crossing = Relation(k);
    o.nested = Relation(k);
    for (std::size_t i = 0; i < p.first.size(); ++i)
        for (std::size_t j = i + 1; j < p.first.size(); ++j) {
            int x = p.first[i], y = p.first[j];
            if (adj[sz(x)].test(sz(y))) o.crossing.set(local[x], local[y]);
            else o.nested.set(local[x], local[y]);
        }
    return o;
}

PermutationModel permutationModelFromOrientations(const OrientationPair& o) {
    const int k = static_cast<int>(o.vertices.size());
    auto order = [&](bool second) {
        auto before = [&](int a, int b) {
            return o.crossing(a, b) || (second ? o.nested(b, a) : o.nested(a, b));
        };
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (before(a, b) == before(b, a)) throw OrientationError("orientation pair is not a total order");
        // In a strict total order the rank of a is the number of its predecessors.
        std::vector<int> idx(sz(k), -1);
        for (int a = 0; a < k; ++a) {
            int rank = 0;
            for (int b = 0; b < k; ++b) rank += (b != a && before(b, a));
            if (idx[sz(rank)] != -1) throw OrientationError("orientation pair is not transitive");
            idx[sz(rank)] = a;
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!before(idx[sz(i)], idx[sz(j)])) throw OrientationError("orientation pair is not transitive");
        std::vector<int> out;
        for (int i : idx) out.push_back(o.vertices[sz(i)]);
        return out;
    };
    return {order(false), order(true)};
}

}  // namespace hca
