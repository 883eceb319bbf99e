#include "hellyca/kernel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

int leastVertex(const PqmTree& t, int mnode) {
    const auto& vs = t.mnode(mnode).vertices;
    return *std::min_element(vs.begin(), vs.end());
}

bool serialNode(const PqmTree& t, KernelNode n) {
    return n.qnode ? t.rootCase() == RootCase::Serial : t.mnode(n.id).type == ModuleType::Serial;
}

bool inNode(const PqmTree& t, KernelNode n, int v) {
    return n.qnode ? t.componentOf(v) == n.id : t.inMNode(n.id, v);
}

bool owns(const CliqueAnalysis& a, int mnode) { return contains(a.owners, mnode); }

std::vector<int> meet(const PqmTree& t, const CliqueAnalysis& a, int mnode) {
    std::vector<int> out;
    for (int v : a.cleaned)
        if (t.inMNode(mnode, v)) out.push_back(v);
    return out;
}

// Slot side the flip f forces on the clique at a prime node, or -1.
int boundSlot(KernelNode n, const CliqueAnalysis& a, int f) {
    bool allowed[2];
    for (int j = 0; j < 2; ++j) {
        const auto& req = a.slots[sz(j)];
        if (n.qnode) {
            allowed[j] = req.qOrdering[sz(f)];
        } else {
            allowed[j] = std::none_of(req.flips.begin(), req.flips.end(),
                                      [&](const auto& x) { return x.first == n.id && x.second != f; });
        }
    }
    if (allowed[0] == allowed[1]) return -1;
    return allowed[0] ? 0 : 1;
}

void normalize(Block& b) {
    for (auto& s : b.sides) std::sort(s.begin(), s.end());
    auto least = [](const std::vector<int>& s) { return s.empty() ? 1 << 30 : s.front(); };
    if (least(b.sides[1]) < least(b.sides[0])) std::swap(b.sides[0], b.sides[1]);
}

Instance fixedNoInstance() {
    Instance inst;
    inst.model = ChordModel::fromWord(CircularWord::parse("a^0 c^1 b^0 d^1 c^0 a^1 d^0 b^1"));
    inst.cliques = {{0, 1, 2, 3}};
    return inst;
}

}  // namespace

const char* bindingName(Binding b) {
    switch (b) {
    case Binding::Unbound: return "unbound";
    case Binding::SameSide: return "same-side";
    case Binding::DifferentSides: return "different-sides";
    case Binding::Conflicting: return "conflicting";
    }
    return "?";
}

std::vector<int> kernelChildren(const PqmTree& t, KernelNode n) {
    std::vector<int> kids;
    if (n.qnode) {
        for (int m : t.qnodes()[sz(n.id)].modules) kids.push_back(t.modules()[sz(m)].mroot);
    } else {
        kids = t.mnode(n.id).children;
    }
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return leastVertex(t, a) < leastVertex(t, b); });
    return kids;
}

std::vector<KernelNode> bottomUpNodes(const PqmTree& t) {
    std::vector<KernelNode> out;
    std::function<void(int)> visit = [&](int m) {
        if (t.mnode(m).type == ModuleType::Leaf) return;
        for (int c : kernelChildren(t, {false, m})) visit(c);
        out.push_back({false, m});
    };
    for (int q = 0; q < static_cast<int>(t.qnodes().size()); ++q) {
        for (int root : kernelChildren(t, {true, q})) visit(root);
        out.push_back({true, q});
    }
    return out;
}

std::vector<int> privateCliques(const PqmTree& t, KernelNode n, const std::vector<CliqueAnalysis>& cliques) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
        const auto& a = cliques[sz(i)];
        bool mine = false;
        if (!n.qnode) mine = owns(a, n.id);
        else if (t.rootCase() == RootCase::Serial) mine = true;
        else mine = a.stage == CliqueStage::Private && a.component == n.id;
        if (mine) out.push_back(i);
    }
    return out;
}

std::vector<int> introducedCliques(const PqmTree& t, KernelNode n, const std::vector<CliqueAnalysis>& cliques) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
        const auto& a = cliques[sz(i)];
        bool mine = false;
        if (!n.qnode) mine = !a.owners.empty() && a.owners.back() == n.id;
        else mine = t.rootCase() == RootCase::Serial && a.stage == CliqueStage::Public;
        if (mine) out.push_back(i);
    }
    return out;
}

Binding bindingRelation(const PqmTree& t, KernelNode n, const std::vector<CliqueAnalysis>& cliques, int c1, int c2) {
    const auto& a = cliques[sz(c1)];
    const auto& b = cliques[sz(c2)];
    if (serialNode(t, n)) {
        bool same = false, different = false;
        const auto kids = kernelChildren(t, n);
        for (int k : kids) {
            if (!owns(a, k) || !owns(b, k)) continue;
            for (int l : kids) {
                if (l == k) continue;
                auto ma = meet(t, a, l), mb = meet(t, b, l);
                if (ma.empty() || mb.empty()) continue;
                (t.forward(ma.front()) == t.forward(mb.front()) ? same : different) = true;
            }
        }
        if (same && different) return Binding::Conflicting;
        if (same) return Binding::SameSide;
        if (different) return Binding::DifferentSides;
        return Binding::Unbound;
    }
    if (!n.qnode && t.mnode(n.id).type != ModuleType::Prime) return Binding::Unbound;
    bool same = true, different = true;
    for (int f = 0; f < 2; ++f) {
        int x = boundSlot(n, a, f), y = boundSlot(n, b, f);
        if (x < 0 || y < 0) return Binding::Unbound;
        (x == y ? different : same) = false;
    }
    return same ? Binding::SameSide : different ? Binding::DifferentSides : Binding::Unbound;
}

const NodeBlocks* BlockState::find(KernelNode n) const {
    for (const auto& nb : nodes)
        if (nb.node == n) return &nb;
    return nullptr;
}

BlockState computeBlocks(const PqmTree& t, const std::vector<CliqueAnalysis>& cliques) {
    for (const auto& a : cliques)
        if (a.type != CliqueType::Ambiguous) throw std::invalid_argument("computeBlocks: every clique must be ambiguous");
    BlockState state;
    for (KernelNode n : bottomUpNodes(t)) {
        NodeBlocks nb;
        nb.node = n;
        nb.priv = privateCliques(t, n, cliques);
        if (nb.priv.empty()) continue;
        nb.introduced = introducedCliques(t, n, cliques);
        std::vector<const NodeBlocks*> kids;
        for (int k : kernelChildren(t, n))
            if (const auto* kb = state.find({false, k})) {
                kids.push_back(kb);
                nb.blocks.insert(nb.blocks.end(), kb->blocks.begin(), kb->blocks.end());
            }
        for (int c : nb.introduced) nb.blocks.push_back({{std::vector<int>{c}, {}}});

        auto locate = [&](int c) {
            for (int i = 0; i < static_cast<int>(nb.blocks.size()); ++i)
                for (int s = 0; s < 2; ++s)
                    if (contains(nb.blocks[sz(i)].sides[sz(s)], c)) return std::pair{i, s};
            throw std::logic_error("clique missing from the blocks of a node");
        };
        for (std::size_t x = 0; x < nb.priv.size(); ++x)
            for (std::size_t y = x + 1; y < nb.priv.size(); ++y) {
                const int c1 = nb.priv[x], c2 = nb.priv[y];
                const Binding rel = bindingRelation(t, n, cliques, c1, c2);
                if (rel == Binding::Unbound) continue;
                auto fail = [&](const std::string& why) {
                    state.rejected = true;
                    state.reason = "cliques " + std::to_string(c1 + 1) + " and " + std::to_string(c2 + 1) + " " + why;
                    return state;
                };
                if (rel == Binding::Conflicting) return fail("are bound on the same and on different sides");
                const int parity = rel == Binding::SameSide ? 0 : 1;
                auto [bi, si] = locate(c1);
                auto [bj, sj] = locate(c2);
                if (bi == bj) {
                    if ((si ^ sj) != parity)
                        return fail(parity ? "must be on different sides but share a side"
                                           : "must be on one side but sit on different sides");
                    continue;
                }
                Block merged;
                const Block& b1 = nb.blocks[sz(bi)];
                const Block& b2 = nb.blocks[sz(bj)];
                const int with = parity ? 1 - sj : sj;
                merged.sides[0] = b1.sides[sz(si)];
                merged.sides[0].insert(merged.sides[0].end(), b2.sides[sz(with)].begin(), b2.sides[sz(with)].end());
                merged.sides[1] = b1.sides[sz(1 - si)];
                merged.sides[1].insert(merged.sides[1].end(), b2.sides[sz(1 - with)].begin(), b2.sides[sz(1 - with)].end());
                nb.blocks.erase(nb.blocks.begin() + std::max(bi, bj));
                nb.blocks.erase(nb.blocks.begin() + std::min(bi, bj));
                nb.blocks.push_back(std::move(merged));
                nb.merges.emplace_back(c1, c2);
            }
        for (auto& b : nb.blocks) normalize(b);
        std::sort(nb.blocks.begin(), nb.blocks.end());
        nb.important = std::none_of(kids.begin(), kids.end(), [&](const NodeBlocks* kb) { return kb->blocks == nb.blocks; });
        state.nodes.push_back(std::move(nb));
    }
    return state;
}

ImportantSet markImportant(const PqmTree& t, const std::vector<CliqueAnalysis>& cliques, const BlockState& blocks) {
    if (blocks.rejected) throw std::invalid_argument("markImportant: the blocks were rejected");
    ImportantSet out;
    std::set<int> marked;
    for (const auto& nb : blocks.nodes) {
        if (!nb.important) continue;
        const KernelNode n = nb.node;
        out.importantNodes.push_back(n);
        const auto kids = kernelChildren(t, n);
        if (!serialNode(t, n)) {
            // two differently oriented chords of each clique introduced here
            for (int c : nb.introduced) {
                const auto& a = cliques[sz(c)];
                const bool affects = std::any_of(a.affecting.begin(), a.affecting.end(),
                                                 [&](const AffectingNode& x) { return !n.qnode && x.node == n.id; });
                std::pair<int, int> pick{-1, -1}, fallback{-1, -1};
                for (int u : a.cleaned)
                    for (int v : a.cleaned) {
                        if (u >= v || !inNode(t, n, u) || !inNode(t, n, v) || t.forward(u) == t.forward(v)) continue;
                        if (fallback.first < 0) fallback = {u, v};
                        if (pick.first < 0 && (!affects || t.relations().overlap(u, v))) pick = {u, v};
                    }
                if (pick.first < 0) pick = fallback;
                if (pick.first >= 0) marked.insert({pick.first, pick.second});
            }
            // one chord per merged clique from a child not owning it
            for (auto [c1, c2] : nb.merges)
                for (int c : {c1, c2}) {
                    if (contains(nb.introduced, c)) continue;
                    const auto& a = cliques[sz(c)];
                    for (int v : a.cleaned) {
                        if (!inNode(t, n, v)) continue;
                        int k = n.qnode ? t.modules()[sz(t.moduleOf(v))].mroot : t.childToward(n.id, v);
                        if (!owns(a, k)) {
                            marked.insert(v);
                            break;
                        }
                    }
                }
            continue;
        }
        std::set<int> weak;
        for (int k : kids)
            if (!privateCliques(t, {false, k}, cliques).empty()) weak.insert(k);
        std::set<std::pair<std::vector<int>, std::vector<int>>> visited;
        for (int k : kids) {
            if (weak.count(k)) continue;
            std::vector<int> meeting;
            for (int c : nb.priv)
                if (!meet(t, cliques[sz(c)], k).empty()) meeting.push_back(c);
            if (meeting.empty()) continue;
            const int m = static_cast<int>(meeting.size());
            bool fresh = false;
            std::vector<int> pickIdx;
            std::function<void(int)> subsets = [&](int from) {
                std::pair<std::vector<int>, std::vector<int>> sig;
                for (int i : pickIdx) {
                    const int c = meeting[sz(i)];
                    (t.forward(meet(t, cliques[sz(c)], k).front()) ? sig.first : sig.second).push_back(c);
                }
                if (visited.insert(std::move(sig)).second) fresh = true;
                if (pickIdx.size() == 4) return;
                for (int i = from; i < m; ++i) {
                    pickIdx.push_back(i);
                    subsets(i + 1);
                    pickIdx.pop_back();
                }
            };
            subsets(0);
            if (fresh) weak.insert(k);
        }
        for (int k : kids) {
            if (!weak.count(k)) continue;
            out.weaklyImportant.push_back(k);
            for (int c : nb.priv) {
                auto inK = meet(t, cliques[sz(c)], k);
                if (!inK.empty()) marked.insert(inK.front());
            }
        }
    }
    out.vertices.assign(marked.begin(), marked.end());
    return out;
}

std::uint64_t signatureCount(int k) {
    std::uint64_t total = 0, choose = 1;
    for (int i = 0; i <= 4 && i <= k; ++i) {
        total += choose << i;
        choose = choose * static_cast<std::uint64_t>(k - i) / static_cast<std::uint64_t>(i + 1);
    }
    return total;
}

KernelBounds kernelBounds(int k) {
    KernelBounds b;
    const auto kk = static_cast<std::uint64_t>(k);
    // introductions, merges and branchings each make at most k nodes important
    b.importantNodes = 3 * kk;
    b.weaklyImportant = b.importantNodes * (kk + signatureCount(k));
    b.vertices = 4 * kk + b.weaklyImportant * kk;
    return b;
}

namespace {

using Words = std::pair<std::vector<Letter>, std::vector<Letter>>;

void append(std::vector<Letter>& to, const std::vector<Letter>& from) { to.insert(to.end(), from.begin(), from.end()); }

class ReductBuilder {
public:
    ReductBuilder(const PqmTree& t, const std::vector<int>& keep) : t_(t), keep_(sz(t.vertexCount()), 0) {
        for (int v : keep) {
            if (v < 0 || v >= t.vertexCount()) throw std::invalid_argument("reduct: vertex out of range");
            keep_[sz(v)] = 1;
        }
        taken_.insert(t.reference().names.begin(), t.reference().names.end());
        out_.fromOriginal.assign(sz(t.vertexCount()), -1);
        for (int v = 0; v < t.vertexCount(); ++v)
            if (keep_[sz(v)]) {
                out_.fromOriginal[sz(v)] = out_.model.size();
                out_.model.names.push_back(t.reference().names[sz(v)]);
            }
        ref_ = t.referenceChoice();
    }

    Reduct build() {
        if (std::none_of(keep_.begin(), keep_.end(), [](char c) { return c != 0; })) return std::move(out_);
        const int root = t_.componentOf(0);
        const auto items = importantItems(root, -1);
        std::vector<Letter> word;
        if (items.size() == 1 && items.front().node) {
            word = emitP(items.front().id, root);
        } else if (t_.rootCase() == RootCase::Serial) {
            for (const auto& it : items) append(word, slotWord(it.id));
        } else {
            word = generalQ(root, items);
        }
        out_.model.word = std::move(word);
        std::vector<int> seen(sz(out_.model.size()), 0);
        for (Letter l : out_.model.word) ++seen[sz(vertexOf(l))];
        if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 2; }))
            throw std::logic_error("reduct word does not hold every chord twice");
        return std::move(out_);
    }

private:
    int fresh() {
        std::string name;
        do name = "_r" + std::to_string(counter_++);
        while (taken_.count(name));
        taken_.insert(name);
        out_.model.names.push_back(name);
        return out_.model.size() - 1;
    }

    Letter mapped(Letter l) const { return letterOf(out_.fromOriginal[sz(vertexOf(l))], endOf(l)); }

    // Two chords with disjoint arcs, as the slot words of a node.
    Words gadget() {
        const int f = fresh(), b = fresh();
        return {{letterOf(b, 1), letterOf(f, 0)}, {letterOf(f, 1), letterOf(b, 0)}};
    }

    // One chord, as the two slot words of a CA-module.
    Words chord() {
        const int x = fresh();
        return {{letterOf(x, 0)}, {letterOf(x, 1)}};
    }

    bool keptIn(const std::vector<int>& vs) const {
        return std::any_of(vs.begin(), vs.end(), [&](int v) { return keep_[sz(v)] != 0; });
    }

    Words reduceM(int id) {
        const auto& nd = t_.mnode(id);
        if (nd.type == ModuleType::Leaf) {
            const int u = nd.vertices.front();
            const int v = fresh();
            const Letter u0 = mapped(t_.slotLetter(u, 0)), u1 = mapped(t_.slotLetter(u, 1));
            if (t_.forward(u)) return {{letterOf(v, 1), u0}, {u1, letterOf(v, 0)}};
            return {{u0, letterOf(v, 0)}, {letterOf(v, 1), u1}};
        }
        auto [first, second] = t_.childOrders(id, ref_);
        std::vector<int> imp;
        for (int k : first)
            if (keptIn(t_.mnode(k).vertices)) imp.push_back(k);
        if (imp.size() == 1) return reduceM(imp.front());
        std::map<int, Words> red;
        for (int k : imp) red[k] = reduceM(k);
        Words w;
        if (nd.type == ModuleType::Prime) {
            const std::size_t k = imp.size();
            std::vector<Words> l(k), m(k);
            for (std::size_t i = 0; i < k; ++i) {
                l[i] = gadget();
                m[i] = gadget();
            }
            const Words mm = gadget();
            for (std::size_t i = 0; i < k; ++i) {
                append(w.first, l[i].first);
                append(w.first, red[imp[i]].first);
            }
            append(w.first, mm.first);
            for (std::size_t i = 0; i < k; ++i) append(w.first, m[i].first);
            append(w.second, mm.second);
            for (std::size_t i = k; i-- > 0;) {
                append(w.second, l[i].second);
                append(w.second, m[i].second);
            }
            for (int c : second)
                if (red.count(c)) append(w.second, red[c].second);
            return w;
        }
        const Words e1 = gadget(), e2 = gadget(), e3 = gadget();
        append(w.first, e1.first);
        append(w.first, e2.first);
        append(w.first, e3.first);
        for (int c : first)
            if (red.count(c)) append(w.first, red[c].first);
        append(w.second, e3.second);
        append(w.second, e1.second);
        for (int c : second)
            if (red.count(c)) append(w.second, red[c].second);
        append(w.second, e2.second);
        return w;
    }

    const std::vector<Letter>& slotWord(int slot) {
        const int module = slotModule(slot);
        auto it = modules_.find(module);
        if (it == modules_.end()) it = modules_.emplace(module, reduceM(t_.modules()[sz(module)].mroot)).first;
        return slotSide(slot) == 0 ? it->second.first : it->second.second;
    }

    bool keptBelowQ(int q, int fromP) const {
        if (keptIn(t_.qnodes()[sz(q)].vertices)) return true;
        for (int p : t_.qnodes()[sz(q)].pnodes)
            if (p != fromP && keptBelowP(p, q)) return true;
        return false;
    }

    bool keptBelowP(int p, int fromQ) const {
        for (int q : t_.pnodes()[sz(p)].qnodes)
            if (q != fromQ && keptBelowQ(q, p)) return true;
        return false;
    }

    // Items around q after its parent, keeping important slots and P-nodes.
    std::vector<PqItem> importantItems(int q, int fromP) const {
        auto around = t_.qnodes()[sz(q)].around;
        if (fromP >= 0) {
            auto it = std::find(around.begin(), around.end(), PqItem{true, fromP});
            std::rotate(around.begin(), it, around.end());
            around.erase(around.begin());
        }
        std::vector<PqItem> out;
        for (const auto& it : around) {
            bool keep = it.node ? keptBelowP(it.id, q) : keptIn(t_.modules()[sz(slotModule(it.id))].vertices);
            if (keep) out.push_back(it);
        }
        return out;
    }

    std::vector<int> importantQChildren(int p, int fromQ) const {
        auto order = t_.pnodes()[sz(p)].around;
        auto it = std::find(order.begin(), order.end(), fromQ);
        std::rotate(order.begin(), it, order.end());
        std::vector<int> out;
        for (std::size_t i = 1; i < order.size(); ++i)
            if (keptBelowQ(order[i], p)) out.push_back(order[i]);
        return out;
    }

    std::vector<Letter> emitP(int p, int fromQ) {
        const auto qs = importantQChildren(p, fromQ);
        if (qs.size() == 1) {
            const auto inner = importantItems(qs.front(), p);
            if (inner.size() == 1 && inner.front().node) return emitP(inner.front().id, qs.front());
        }
        std::vector<Letter> out;
        for (int q : qs) append(out, emitQ(q, p));
        return out;
    }

    std::vector<Letter> emitQ(int q, int fromP) {
        const auto items = importantItems(q, fromP);
        if (items.size() == 1 && items.front().node) {
            const auto qs = importantQChildren(items.front().id, q);
            if (qs.size() == 1) return emitQ(qs.front(), items.front().id);
        }
        return generalQ(q, items);
    }

    // R L1^0 r1 ... Lk^0 rk Lk^1 M1^0 ... L1^1 Mk^0 M^0 Mk^1 ... M1^1 M^1, without R.
    std::vector<Letter> generalQ(int q, const std::vector<PqItem>& items) {
        const std::size_t k = items.size();
        std::vector<std::vector<Letter>> r;
        for (const auto& it : items) r.push_back(it.node ? emitP(it.id, q) : slotWord(it.id));
        std::vector<Words> l(k), m(k);
        for (std::size_t i = 0; i < k; ++i) {
            l[i] = chord();
            m[i] = chord();
        }
        const Words mm = chord();
        std::vector<Letter> out;
        for (std::size_t i = 0; i < k; ++i) {
            append(out, l[i].first);
            append(out, r[i]);
        }
        for (std::size_t i = 0; i < k; ++i) {
            append(out, l[k - 1 - i].second);
            append(out, m[i].first);
        }
        append(out, mm.first);
        for (std::size_t i = k; i-- > 0;) append(out, m[i].second);
        append(out, mm.second);
        return out;
    }

    const PqmTree& t_;
    std::vector<char> keep_;
    std::set<std::string> taken_;
    int counter_ = 0;
    ModelChoice ref_;
    Reduct out_;
    std::map<int, Words> modules_;
};

}  // namespace

Reduct reduct(const ChordModel& m, const std::vector<int>& keep) {
    PqmTree t(m);
    return ReductBuilder(t, keep).build();
}

KernelResult kernelize(const Instance& inst, const KernelOptions& options) {
    KernelResult res;
    PqmTree t(inst.model);
    std::vector<CliqueAnalysis> amb;
    for (std::size_t i = 0; i < inst.cliques.size(); ++i) {
        auto a = analyzeClique(t, inst.cliques[i]);
        if (a.type == CliqueType::AlwaysNonHelly) {
            res.rejected = true;
            res.reason = "clique " + std::to_string(i + 1) + " is non-Helly in every model";
            res.kernel = fixedNoInstance();
            return res;
        }
        if (a.type == CliqueType::Ambiguous) amb.push_back(std::move(a));
    }
    res.ambiguous = static_cast<int>(amb.size());
    if (amb.empty()) return res;  // empty kernel, a YES instance
    auto blocks = computeBlocks(t, amb);
    if (blocks.rejected) {
        res.rejected = true;
        res.reason = blocks.reason;
        res.kernel = fixedNoInstance();
        return res;
    }
    auto marks = markImportant(t, amb, blocks);
    res.important = marks.vertices;
    res.importantNodes = marks.importantNodes.size();
    res.weaklyImportant = marks.weaklyImportant.size();
    if (!options.alwaysReduce && 12 * res.important.size() >= static_cast<std::size_t>(inst.model.size())) {
        res.unchanged = true;
        res.kernel = inst;
        return res;
    }
    auto red = reduct(inst.model, res.important);
    res.kernel.model = std::move(red.model);
    for (const auto& a : amb) {
        std::vector<int> c;
        for (int v : a.cleaned)
            if (red.fromOriginal[sz(v)] >= 0) c.push_back(red.fromOriginal[sz(v)]);
        std::sort(c.begin(), c.end());
        res.kernel.cliques.push_back(std::move(c));
    }
    return res;
}

}  // namespace hca
