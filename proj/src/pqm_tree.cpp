#include "hellyca/pqm_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

template <class T>
bool cyclicEqual(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    auto ka = leastRotation(std::span<const T>(a), std::less<T>{});
    auto kb = leastRotation(std::span<const T>(b), std::less<T>{});
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[(ka + i) % a.size()] == b[(kb + i) % b.size()])) return false;
    return true;
}

// Compress a cyclic labelling into its run sequence; every label must form a
// single run.
template <class T>
std::optional<std::vector<T>> runsOf(const std::vector<T>& labels) {
    const std::size_t n = labels.size();
    if (n == 0) return std::vector<T>{};
    std::size_t start = 0;
    while (start < n && labels[start] == labels[(start + n - 1) % n]) ++start;
    if (start == n) return std::vector<T>{labels[0]};
    std::vector<T> out;
    for (std::size_t i = 0; i < n; ++i) {
        const T& x = labels[(start + i) % n];
        if (out.empty() || !(out.back() == x)) out.push_back(x);
    }
    std::vector<T> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    return out;
}

std::vector<int> rankOrder(int k, const std::function<bool(int, int)>& before) {
    std::vector<int> idx(sz(k), -1);
    for (int a = 0; a < k; ++a) {
        int rank = 0;
        for (int b = 0; b < k; ++b) rank += (b != a && before(b, a));
        if (rank >= k || idx[sz(rank)] != -1) throw std::logic_error("admissible ordering is not a total order");
        idx[sz(rank)] = a;
    }
    return idx;
}

std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

std::uint64_t factorial(std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r = satMul(r, i);
    return r;
}

}  // namespace

const char* rootCaseName(RootCase c) {
    switch (c) {
    case RootCase::Empty: return "empty";
    case RootCase::Serial: return "serial";
    case RootCase::Prime: return "prime";
    case RootCase::Parallel: return "parallel";
    }
    return "?";
}

std::vector<int> reflectSlotOrder(const std::vector<int>& order) {
    std::vector<int> out(order.rbegin(), order.rend());
    for (auto& s : out) s ^= 1;
    return out;
}

std::vector<PqItem> reflectAround(const std::vector<PqItem>& around) {
    std::vector<PqItem> out(around.rbegin(), around.rend());
    for (auto& it : out)
        if (!it.node) it.id ^= 1;
    return out;
}

PqmTree::PqmTree(const ChordModel& model) : model_(model), rel_(relationsFromModel(model)) {
    const int n = model_.size();
    ov_.assign(sz(n), Bits(sz(n)));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (rel_.overlap(v, u)) ov_[sz(v)].set(sz(u));
    std::vector<int> all(sz(n));
    std::iota(all.begin(), all.end(), 0);
    md_ = ModuleTree(ov_, all);
    moduleOf_.assign(sz(n), -1);
    leaf_.assign(sz(n), -1);
    zeroEnd_.assign(sz(n), 0);
    posInSlot_.assign(sz(2 * n), -1);
    if (n == 0) return;

    const auto& root = md_.node(md_.root());
    switch (root.type) {
    case ModuleType::Leaf:
    case ModuleType::Prime: rootCase_ = RootCase::Prime; break;
    case ModuleType::Serial: rootCase_ = RootCase::Serial; break;
    case ModuleType::Parallel: rootCase_ = RootCase::Parallel; break;
    }

    std::vector<std::vector<int>> groups;
    if (root.type == ModuleType::Leaf) {
        groups.push_back(root.vertices);
    } else {
        for (int child : root.children) {
            auto part = caModulesOf(child);
            groups.insert(groups.end(), part.begin(), part.end());
        }
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end());
    for (auto& g : groups) buildModule(std::move(g));

    if (rootCase_ == RootCase::Parallel) {
        for (int child : root.children) {
            QNode q;
            q.vertices = md_.node(child).vertices;
            q.type = md_.node(child).type;
            qnodes_.push_back(std::move(q));
        }
    } else {
        QNode q;
        q.vertices = root.vertices;
        q.type = root.type;
        qnodes_.push_back(std::move(q));
    }
    for (std::size_t qi = 0; qi < qnodes_.size(); ++qi)
        for (std::size_t m = 0; m < modules_.size(); ++m)
            if (std::binary_search(qnodes_[qi].vertices.begin(), qnodes_[qi].vertices.end(),
                                   modules_[m].vertices.front())) {
                modules_[m].component = static_cast<int>(qi);
                qnodes_[qi].modules.push_back(static_cast<int>(m));
            }
    readSlotOrder();
    buildPqTree();
}

bool PqmTree::validPermutationModel(const std::vector<int>& set, std::vector<Letter>* part0,
                                    std::vector<Letter>* part1) const {
    const int len = static_cast<int>(model_.word.size());
    std::vector<char> in(sz(len), 0);
    std::vector<char> member(sz(model_.size()), 0);
    for (int v : set) member[sz(v)] = 1;
    int count = 0;
    for (int p = 0; p < len; ++p)
        if (member[sz(vertexOf(model_.word[sz(p)]))]) {
            in[sz(p)] = 1;
            ++count;
        }
    const int k = static_cast<int>(set.size());
    std::vector<int> starts;
    for (int p = 0; p < len; ++p)
        if (in[sz(p)] && !in[sz((p + len - 1) % len)]) starts.push_back(p);

    auto checkSplit = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> seen(sz(model_.size()), 0);
        for (int p : a) seen[sz(vertexOf(model_.word[sz(p)]))] += 1;
        for (int p : b) seen[sz(vertexOf(model_.word[sz(p)]))] += 2;
        for (int v : set)
            if (seen[sz(v)] != 3) return false;
        const int rep = set.front();
        bool repFirst = std::any_of(a.begin(), a.end(), [&](int p) { return model_.word[sz(p)] == letterOf(rep, 0); });
        const auto& first = repFirst ? a : b;
        const auto& second = repFirst ? b : a;
        if (part0) {
            part0->clear();
            for (int p : first) part0->push_back(model_.word[sz(p)]);
        }
        if (part1) {
            part1->clear();
            for (int p : second) part1->push_back(model_.word[sz(p)]);
        }
        return true;
    };
    auto span = [&](int from, int length) {
        std::vector<int> out;
        for (int i = 0; i < length; ++i) out.push_back((from + i) % len);
        return out;
    };
    if (count == len) {
        for (int cut = 0; cut < len; ++cut)
            if (checkSplit(span(cut, k), span(cut + k, k))) return true;
        return false;
    }
    if (starts.size() == 1) return checkSplit(span(starts[0], k), span(starts[0] + k, k));
    if (starts.size() == 2) {
        auto runLength = [&](int s) {
            int l = 0;
            while (in[sz((s + l) % len)]) ++l;
            return l;
        };
        return checkSplit(span(starts[0], runLength(starts[0])), span(starts[1], runLength(starts[1])));
    }
    return false;
}

std::vector<std::vector<int>> PqmTree::caModulesOf(int mdNode) const {
    const auto& nd = md_.node(mdNode);
    if (nd.type == ModuleType::Leaf || validPermutationModel(nd.vertices, nullptr, nullptr)) return {nd.vertices};
    std::vector<std::vector<int>> out;
    if (nd.type == ModuleType::Prime) {
        for (int child : nd.children) {
            auto part = caModulesOf(child);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    std::vector<std::vector<int>> groups;
    for (int child : nd.children) {
        const auto& vs = md_.node(child).vertices;
        if (validPermutationModel(vs, nullptr, nullptr)) {
            groups.push_back(vs);
        } else {
            auto part = caModulesOf(child);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < groups.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < groups.size() && !merged; ++j) {
                std::vector<int> u = groups[i];
                u.insert(u.end(), groups[j].begin(), groups[j].end());
                std::sort(u.begin(), u.end());
                if (validPermutationModel(u, nullptr, nullptr)) {
                    groups[i] = std::move(u);
                    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
    }
    out.insert(out.end(), groups.begin(), groups.end());
    return out;
}

void PqmTree::buildModule(std::vector<int> vertices) {
    const int id = static_cast<int>(modules_.size());
    CaModule m;
    m.vertices = std::move(vertices);
    m.representative = m.vertices.front();
    if (!validPermutationModel(m.vertices, &m.slot[0], &m.slot[1]))
        throw NotConformal("module read-out produced an invalid permutation model");
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < m.slot[side].size(); ++i) {
            Letter l = m.slot[side][i];
            posInSlot_[sz(l)] = static_cast<int>(i);
            if (side == 0) zeroEnd_[sz(vertexOf(l))] = endOf(l);
        }
    for (int v : m.vertices) moduleOf_[sz(v)] = id;
    ModuleTree t(ov_, m.vertices);
    modules_.push_back(m);
    modules_.back().mroot = copyTree(t, t.root(), -1, id, 0);
}

int PqmTree::copyTree(const ModuleTree& t, int node, int parent, int module, int depth) {
    const int id = static_cast<int>(mnodes_.size());
    mnodes_.emplace_back();
    const auto& src = t.node(node);
    mnodes_[sz(id)].type = src.type;
    mnodes_[sz(id)].vertices = src.vertices;
    mnodes_[sz(id)].parent = parent;
    mnodes_[sz(id)].module = module;
    mnodes_[sz(id)].depth = depth;
    if (src.type == ModuleType::Leaf) leaf_[sz(src.vertices.front())] = id;
    std::vector<int> kids;
    for (int c : src.children) kids.push_back(copyTree(t, c, id, module, depth + 1));
    const int k = static_cast<int>(kids.size());
    Relation crossing(k), nested(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            int x = mnodes_[sz(kids[sz(a)])].vertices.front();
            int y = mnodes_[sz(kids[sz(b)])].vertices.front();
            bool before = posInSlot_[sz(slotLetter(x, 0))] < posInSlot_[sz(slotLetter(y, 0))];
            if (!before) continue;
            if (rel_.overlap(x, y)) crossing.set(a, b);
            else nested.set(a, b);
        }
    auto& me = mnodes_[sz(id)];
    me.children = std::move(kids);
    me.crossing = std::move(crossing);
    me.nested = std::move(nested);
    return id;
}

void PqmTree::readSlotOrder() {
    std::vector<int> labels;
    for (Letter l : model_.word) {
        int v = vertexOf(l);
        labels.push_back(slotOf(moduleOf(v), endOf(l) == zeroEnd(v) ? 0 : 1));
    }
    auto runs = runsOf(labels);
    if (!runs || runs->size() != 2 * modules_.size()) throw NotConformal("slots are not contiguous");
    slotOrder_ = *runs;
}

void PqmTree::buildPqTree() {
    if (rootCase_ != RootCase::Parallel) {
        auto& q = qnodes_.front();
        for (int s : slotOrder_) q.around.push_back({false, s});
        rootSymmetric_ = cyclicEqual(slotOrder_, reflectSlotOrder(slotOrder_));
        q.symmetric = rootSymmetric_;
        return;
    }
    const int m = static_cast<int>(qnodes_.size());
    const auto sides = leftRightSets(rel_);
    const int n = model_.size();
    std::vector<Bits> qmask(sz(m), Bits(sz(n)));
    for (int q = 0; q < m; ++q)
        for (int v : qnodes_[sz(q)].vertices) qmask[sz(q)].set(sz(v));
    auto separated = [&](int a, int b) {
        for (int v = 0; v < n; ++v) {
            if (qmask[sz(a)].test(sz(v)) || qmask[sz(b)].test(sz(v))) continue;
            const Bits& l = sides.left[sz(v)];
            const Bits& r = sides.right[sz(v)];
            if (qmask[sz(a)].is_subset_of(l) && qmask[sz(b)].is_subset_of(r)) return true;
            if (qmask[sz(b)].is_subset_of(l) && qmask[sz(a)].is_subset_of(r)) return true;
        }
        return false;
    };
    std::vector<Bits> nb(sz(m), Bits(sz(m)));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!separated(a, b)) {
                nb[sz(a)].set(sz(b));
                nb[sz(b)].set(sz(a));
            }
    // Maximal cliques of the neighbouring relation (Bron-Kerbosch with pivot).
    std::vector<Bits> cliques;
    std::function<void(Bits, Bits, Bits)> bk = [&](Bits r, Bits p, Bits x) {
        if (p.none() && x.none()) {
            if (r.count() >= 2) cliques.push_back(r);
            return;
        }
        Bits px = p | x;
        auto pivot = px.find_first();
        Bits cand = p - nb[pivot];
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            Bits r2 = r;
            r2.set(v);
            bk(r2, p & nb[v], x & nb[v]);
            p.reset(v);
            x.set(v);
        }
    };
    Bits all(sz(m));
    all.set();
    bk(Bits(sz(m)), all, Bits(sz(m)));
    std::sort(cliques.begin(), cliques.end(), [](const Bits& a, const Bits& b) { return a.find_first() < b.find_first() || (a.find_first() == b.find_first() && a < b); });
    for (const auto& c : cliques) {
        PNode p;
        for (auto q = c.find_first(); q != Bits::npos; q = c.find_next(q)) {
            p.qnodes.push_back(static_cast<int>(q));
            qnodes_[q].pnodes.push_back(static_cast<int>(pnodes_.size()));
        }
        pnodes_.push_back(std::move(p));
    }
    // The Q/P incidence graph must be a tree.
    std::size_t edges = 0;
    for (const auto& p : pnodes_) edges += p.qnodes.size();
    if (edges + 1 != qnodes_.size() + pnodes_.size()) throw NotConformal("PQ-tree incidence is not a tree");

    // First hop from a Q-node (through a P-node) or from a P-node (to a Q-node)
    // toward every Q-node.
    auto hopsFromQ = [&](int q0) {
        std::vector<int> via(sz(m), -1);
        std::deque<std::pair<int, int>> queue;  // (q, first P)
        std::vector<char> seenQ(sz(m), 0), seenP(pnodes_.size(), 0);
        seenQ[sz(q0)] = 1;
        for (int p : qnodes_[sz(q0)].pnodes) {
            seenP[sz(p)] = 1;
            for (int q : pnodes_[sz(p)].qnodes)
                if (!seenQ[sz(q)]) {
                    seenQ[sz(q)] = 1;
                    via[sz(q)] = p;
                    queue.emplace_back(q, p);
                }
        }
        while (!queue.empty()) {
            auto [q, first] = queue.front();
            queue.pop_front();
            for (int p : qnodes_[sz(q)].pnodes) {
                if (seenP[sz(p)]) continue;
                seenP[sz(p)] = 1;
                for (int r : pnodes_[sz(p)].qnodes)
                    if (!seenQ[sz(r)]) {
                        seenQ[sz(r)] = 1;
                        via[sz(r)] = first;
                        queue.emplace_back(r, first);
                    }
            }
        }
        return via;
    };
    for (int q = 0; q < m; ++q) {
        auto via = hopsFromQ(q);
        std::vector<PqItem> labels;
        for (int s : slotOrder_) {
            int c = modules_[sz(slotModule(s))].component;
            labels.push_back(c == q ? PqItem{false, s} : PqItem{true, via[sz(c)]});
        }
        auto runs = runsOf(labels);
        if (!runs) throw NotConformal("subtree slots are not contiguous around a Q-node");
        qnodes_[sz(q)].around = *runs;
        qnodes_[sz(q)].symmetric = cyclicEqual(*runs, reflectAround(*runs));
    }
    for (std::size_t p = 0; p < pnodes_.size(); ++p) {
        std::vector<int> labels;
        for (int s : slotOrder_) {
            int c = modules_[sz(slotModule(s))].component;
            int hop = c;
            if (std::find(pnodes_[p].qnodes.begin(), pnodes_[p].qnodes.end(), c) == pnodes_[p].qnodes.end()) {
                // Neighbour of p whose side holds c.
                hop = -1;
                for (int q : pnodes_[p].qnodes)
                    if (hopsFromQ(q)[sz(c)] != static_cast<int>(p)) {
                        hop = q;
                        break;
                    }
            }
            labels.push_back(hop);
        }
        auto runs = runsOf(labels);
        if (!runs || runs->size() != pnodes_[p].qnodes.size())
            throw NotConformal("subtree slots are not contiguous around a P-node");
        pnodes_[p].around = *runs;
    }
}

bool PqmTree::inMNode(int id, int v) const {
    const auto& vs = mnode(id).vertices;
    return std::binary_search(vs.begin(), vs.end(), v);
}

int PqmTree::childToward(int id, int v) const {
    int cur = leafOf(v);
    while (cur >= 0 && mnode(cur).parent != id) cur = mnode(cur).parent;
    return cur;
}

int PqmTree::lowestCommonNode(int a, int b) const {
    if (moduleOf(a) != moduleOf(b)) throw std::invalid_argument("lowestCommonNode: different CA-modules");
    int x = leafOf(a), y = leafOf(b);
    while (x != y) {
        if (mnode(x).depth < mnode(y).depth) std::swap(x, y);
        x = mnode(x).parent;
    }
    return x;
}

bool PqmTree::nestedBefore(int x, int y) const {
    if (moduleOf(x) != moduleOf(y) || x == y || rel_.overlap(x, y)) return false;
    return posInSlot_[sz(slotLetter(x, 0))] < posInSlot_[sz(slotLetter(y, 0))];
}

ModelChoice PqmTree::referenceChoice() const {
    ModelChoice c;
    c.slotOrder = slotOrder_;
    c.flipQ.assign(qnodes_.size(), 0);
    for (const auto& p : pnodes_) c.orderP.push_back(p.around);
    c.flipM.assign(mnodes_.size(), 0);
    c.orderM.assign(mnodes_.size(), {});
    for (std::size_t id = 0; id < mnodes_.size(); ++id) {
        const auto& nd = mnodes_[id];
        if (nd.type != ModuleType::Serial) continue;
        const int k = static_cast<int>(nd.children.size());
        auto idx = rankOrder(k, [&](int a, int b) { return nd.crossing(a, b); });
        for (int i : idx) c.orderM[id].push_back(nd.children[sz(i)]);
    }
    return c;
}

ModelChoice PqmTree::reflectedChoice(const ModelChoice& c) const {
    // Reflection reverses every crossing orientation and keeps the nesting.
    ModelChoice r = c;
    switch (rootCase_) {
    case RootCase::Serial: r.slotOrder = reflectSlotOrder(c.slotOrder); break;
    case RootCase::Prime: r.flipRoot ^= 1; break;
    case RootCase::Parallel:
        for (auto& f : r.flipQ) f ^= 1;
        for (auto& o : r.orderP) std::reverse(o.begin(), o.end());
        break;
    case RootCase::Empty: break;
    }
    for (auto& f : r.flipM) f ^= 1;
    for (auto& o : r.orderM) std::reverse(o.begin(), o.end());
    return r;
}

std::vector<int> PqmTree::slotOrderFor(const ModelChoice& c) const {
    switch (rootCase_) {
    case RootCase::Empty: return {};
    case RootCase::Serial: return c.slotOrder;
    case RootCase::Prime: return c.flipRoot ? reflectSlotOrder(slotOrder_) : slotOrder_;
    case RootCase::Parallel: break;
    }
    std::vector<int> out;
    std::function<void(int, int)> expandQ;
    std::function<void(int, int)> expandP = [&](int p, int from) {
        auto order = c.orderP[sz(p)];
        auto it = std::find(order.begin(), order.end(), from);
        std::rotate(order.begin(), it, order.end());
        for (std::size_t i = 1; i < order.size(); ++i) expandQ(order[i], p);
    };
    expandQ = [&](int q, int from) {
        auto around = c.flipQ[sz(q)] ? reflectAround(qnodes_[sz(q)].around) : qnodes_[sz(q)].around;
        if (from >= 0) {
            auto it = std::find(around.begin(), around.end(), PqItem{true, from});
            std::rotate(around.begin(), it, around.end());
            around.erase(around.begin());
        }
        for (const auto& item : around) {
            if (item.node) expandP(item.id, q);
            else out.push_back(item.id);
        }
    };
    expandQ(0, -1);
    return out;
}

std::pair<std::vector<int>, std::vector<int>> PqmTree::childOrders(int id, const ModelChoice& c) const {
    const auto& nd = mnode(id);
    const int k = static_cast<int>(nd.children.size());
    Relation prec(k);
    if (nd.type == ModuleType::Prime) {
        prec = c.flipM[sz(id)] ? nd.crossing.reversed() : nd.crossing;
    } else if (nd.type == ModuleType::Serial) {
        const auto& order = c.orderM[sz(id)];
        std::vector<int> rank(sz(k));
        for (int i = 0; i < k; ++i) {
            auto it = std::find(nd.children.begin(), nd.children.end(), order[sz(i)]);
            rank[sz(it - nd.children.begin())] = i;
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (rank[sz(a)] < rank[sz(b)]) prec.set(a, b);
    }
    auto first = rankOrder(k, [&](int a, int b) { return prec(a, b) || nd.nested(a, b); });
    auto second = rankOrder(k, [&](int a, int b) { return prec(a, b) || nd.nested(b, a); });
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int i : first) out.first.push_back(nd.children[sz(i)]);
    for (int i : second) out.second.push_back(nd.children[sz(i)]);
    return out;
}

void PqmTree::slotWords(int id, const ModelChoice& c, int side, std::vector<Letter>& out) const {
    const auto& nd = mnode(id);
    if (nd.type == ModuleType::Leaf) {
        out.push_back(slotLetter(nd.vertices.front(), side));
        return;
    }
    auto orders = childOrders(id, c);
    for (int child : side == 0 ? orders.first : orders.second) slotWords(child, c, side, out);
}

std::pair<std::vector<Letter>, std::vector<Letter>> PqmTree::admissibleWords(int module, const ModelChoice& c) const {
    std::pair<std::vector<Letter>, std::vector<Letter>> out;
    slotWords(modules_[sz(module)].mroot, c, 0, out.first);
    slotWords(modules_[sz(module)].mroot, c, 1, out.second);
    return out;
}

std::vector<Letter> PqmTree::generate(const ModelChoice& c) const {
    std::vector<Letter> word;
    for (int s : slotOrderFor(c)) slotWords(modules_[sz(slotModule(s))].mroot, c, slotSide(s), word);
    return word;
}

ChordModel PqmTree::generateModel(const ModelChoice& c) const {
    ChordModel m;
    m.names = model_.names;
    m.word = generate(c);
    return m;
}

std::uint64_t PqmTree::modelCount() const {
    std::uint64_t count = 1;
    const std::uint64_t t = modules_.size();
    switch (rootCase_) {
    case RootCase::Empty: return 1;
    case RootCase::Serial:
        count = factorial(t - 1);
        for (std::uint64_t i = 1; i < t; ++i) count = satMul(count, 2);
        break;
    case RootCase::Prime: count = rootSymmetric_ ? 1 : 2; break;
    case RootCase::Parallel:
        for (const auto& q : qnodes_) count = satMul(count, q.symmetric ? 1 : 2);
        for (const auto& p : pnodes_) count = satMul(count, factorial(p.qnodes.size() - 1));
        break;
    }
    for (const auto& nd : mnodes_) {
        if (nd.type == ModuleType::Prime) count = satMul(count, 2);
        if (nd.type == ModuleType::Serial) count = satMul(count, factorial(nd.children.size()));
    }
    return count;
}

void PqmTree::forEachChoice(const std::function<bool(const ModelChoice&)>& visit) const {
    ModelChoice c = referenceChoice();
    enum class Dim { SlotOrder, FlipRoot, FlipQ, OrderP, FlipM, OrderM };
    std::vector<std::pair<Dim, int>> dims;
    if (rootCase_ == RootCase::Serial) dims.emplace_back(Dim::SlotOrder, 0);
    if (rootCase_ == RootCase::Prime && !rootSymmetric_) dims.emplace_back(Dim::FlipRoot, 0);
    if (rootCase_ == RootCase::Parallel) {
        for (std::size_t q = 0; q < qnodes_.size(); ++q)
            if (!qnodes_[q].symmetric) dims.emplace_back(Dim::FlipQ, static_cast<int>(q));
        for (std::size_t p = 0; p < pnodes_.size(); ++p)
            if (pnodes_[p].qnodes.size() > 2) dims.emplace_back(Dim::OrderP, static_cast<int>(p));
    }
    for (std::size_t id = 0; id < mnodes_.size(); ++id) {
        if (mnodes_[id].type == ModuleType::Prime) dims.emplace_back(Dim::FlipM, static_cast<int>(id));
        if (mnodes_[id].type == ModuleType::Serial) dims.emplace_back(Dim::OrderM, static_cast<int>(id));
    }
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t d) {
        if (stop) return;
        if (d == dims.size()) {
            if (!visit(c)) stop = true;
            return;
        }
        auto [kind, idx] = dims[d];
        switch (kind) {
        case Dim::SlotOrder: {
            const int t = static_cast<int>(modules_.size());
            std::vector<int> perm;
            for (int i = 1; i < t; ++i) perm.push_back(i);
            do {
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (t - 1)) && !stop; ++bits) {
                    std::vector<int> order(sz(2 * t));
                    order[0] = slotOf(0, 0);
                    order[sz(t)] = slotOf(0, 1);
                    for (int i = 1; i < t; ++i) {
                        int side = static_cast<int>(bits >> (i - 1) & 1);
                        order[sz(i)] = slotOf(perm[sz(i - 1)], side);
                        order[sz(t + i)] = slotOf(perm[sz(i - 1)], 1 - side);
                    }
                    c.slotOrder = std::move(order);
                    rec(d + 1);
                }
            } while (!stop && std::next_permutation(perm.begin(), perm.end()));
            break;
        }
        case Dim::FlipRoot:
            for (int f = 0; f < 2 && !stop; ++f) {
                c.flipRoot = f;
                rec(d + 1);
            }
            c.flipRoot = 0;
            break;
        case Dim::FlipQ:
            for (int f = 0; f < 2 && !stop; ++f) {
                c.flipQ[sz(idx)] = f;
                rec(d + 1);
            }
            c.flipQ[sz(idx)] = 0;
            break;
        case Dim::OrderP: {
            auto base = pnodes_[sz(idx)].around;
            std::vector<int> rest(base.begin() + 1, base.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> order{base.front()};
                order.insert(order.end(), rest.begin(), rest.end());
                c.orderP[sz(idx)] = std::move(order);
                rec(d + 1);
            } while (!stop && std::next_permutation(rest.begin(), rest.end()));
            c.orderP[sz(idx)] = base;
            break;
        }
        case Dim::FlipM:
            for (int f = 0; f < 2 && !stop; ++f) {
                c.flipM[sz(idx)] = f;
                rec(d + 1);
            }
            c.flipM[sz(idx)] = 0;
            break;
        case Dim::OrderM: {
            auto saved = c.orderM[sz(idx)];
            auto perm = mnodes_[sz(idx)].children;
            std::sort(perm.begin(), perm.end());
            do {
                c.orderM[sz(idx)] = perm;
                rec(d + 1);
            } while (!stop && std::next_permutation(perm.begin(), perm.end()));
            c.orderM[sz(idx)] = saved;
            break;
        }
        }
    };
    rec(0);
}

std::vector<ChordModel> PqmTree::enumerateModels(std::uint64_t cap) const {
    if (modelCount() > cap) throw EnumerationTooLarge("model count exceeds cap");
    std::vector<ChordModel> out;
    forEachChoice([&](const ModelChoice& c) {
        out.push_back(generateModel(c));
        return true;
    });
    return out;
}

std::vector<std::vector<int>> PqmTree::primeSlotOrders() const {
    if (rootCase_ != RootCase::Prime) return {};
    if (rootSymmetric_) return {slotOrder_};
    return {slotOrder_, reflectSlotOrder(slotOrder_)};
}

bool PqmTree::owns(int id, const std::vector<int>& clique) const {
    const auto& nd = mnode(id);
    if (nd.type == ModuleType::Leaf) return false;
    bool f = false, b = false;
    for (int v : clique)
        if (inMNode(id, v)) (forward(v) ? f : b) = true;
    return f && b;
}

std::vector<int> PqmTree::owners(const std::vector<int>& clique) const {
    std::vector<int> out;
    for (int id = 0; id < static_cast<int>(mnodes_.size()); ++id)
        if (owns(id, clique)) out.push_back(id);
    return out;
}

bool CliquePlacement::feasible() const {
    return std::all_of(gaps.begin(), gaps.end(), [](const auto& g) { return !g.empty(); });
}

std::vector<int> commonGaps(int n, const std::vector<Letter>& word, const std::vector<int>& clique) {
    Geometry geo(n, word);
    std::vector<int> out;
    for (int p = 0; p < geo.length(); ++p)
        if (std::all_of(clique.begin(), clique.end(), [&](int v) { return geo.gapOnArc(v, p); })) out.push_back(p);
    return out;
}

CliquePlacement extendWithCliques(const PqmTree& t, const std::vector<Letter>& word,
                                  const std::vector<std::vector<int>>& cliques) {
    const int n = t.vertexCount();
    const int len = static_cast<int>(word.size());
    Geometry geo(n, word);
    CliquePlacement out;
    for (const auto& c : cliques) {
        auto gaps = commonGaps(n, word, c);
        std::vector<char> banned(sz(len), 0);
        for (int id = 0; id < static_cast<int>(t.mnodes().size()); ++id) {
            const auto& nd = t.mnode(id);
            if (nd.type == ModuleType::Leaf || t.owns(id, c)) continue;
            for (int side = 0; side < 2; ++side) {
                std::vector<char> in(sz(len), 0);
                for (int v : nd.vertices) in[sz(geo.pos(t.slotLetter(v, side)))] = 1;
                for (int p = 0; p < len; ++p)
                    if (in[sz(p)] && in[sz((p + 1) % len)]) banned[sz(p)] = 1;
            }
        }
        std::vector<int> kept;
        for (int g : gaps)
            if (!banned[sz(g)]) kept.push_back(g);
        out.gaps.push_back(std::move(kept));
    }
    return out;
}

}  // namespace hca
