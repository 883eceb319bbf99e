#include "hellyca/solver.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void setQFlip(const PqmTree& t, ModelChoice& c, int q, int f) {
    if (t.rootCase() == RootCase::Prime) c.flipRoot = f;
    else c.flipQ[sz(q)] = f;
}

std::vector<std::vector<int>> cleanedOf(const std::vector<CliqueAnalysis>& as) {
    std::vector<std::vector<int>> out;
    for (const auto& a : as) out.push_back(a.cleaned);
    return out;
}

// Positions of the cliques that still need a decision.
std::vector<int> ambiguousOnes(const std::vector<CliqueAnalysis>& as) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(as.size()); ++i)
        if (as[sz(i)].type == CliqueType::Ambiguous) out.push_back(i);
    return out;
}

}  // namespace

void NodeOrders::add(const SlotRequirement& r) {
    if (!r.fixedOk) ok = false;
    for (auto [n, f] : r.flips) {
        auto [it, fresh] = flips.emplace(n, f);
        if (!fresh && it->second != f) ok = false;
    }
    for (const auto& e : r.edges) edges[e[0]].emplace(e[1], e[2]);
}

bool NodeOrders::applyTo(const PqmTree& t, ModelChoice& c) const {
    if (!ok) return false;
    for (auto [n, f] : flips) c.flipM[sz(n)] = f;
    for (const auto& [n, es] : edges) {
        const auto& ref = c.orderM[sz(n)];
        const int k = static_cast<int>(ref.size());
        auto pos = [&](int child) { return static_cast<int>(std::find(ref.begin(), ref.end(), child) - ref.begin()); };
        std::vector<std::vector<int>> next(sz(k));
        std::vector<int> indeg(sz(k), 0);
        for (auto [a, b] : es) {
            next[sz(pos(a))].push_back(pos(b));
            ++indeg[sz(pos(b))];
        }
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int i = 0; i < k; ++i)
            if (indeg[sz(i)] == 0) ready.push(i);
        std::vector<int> order;
        while (!ready.empty()) {
            int i = ready.top();
            ready.pop();
            order.push_back(ref[sz(i)]);
            for (int j : next[sz(i)])
                if (--indeg[sz(j)] == 0) ready.push(j);
        }
        if (static_cast<int>(order.size()) != k) return false;
        c.orderM[sz(n)] = std::move(order);
    }
    (void)t;
    return true;
}

std::optional<Witness> verifyWitness(const PqmTree& t, const std::vector<Letter>& word,
                                     const std::vector<std::vector<int>>& cliques) {
    Witness w;
    w.model = ChordModel{t.reference().names, word};
    if (!validateAgainst(w.model, t.relations()).ok) return std::nullopt;
    for (const auto& c : cliques) {
        auto gaps = commonGaps(t.vertexCount(), word, c);
        if (!c.empty() && gaps.empty()) return std::nullopt;
        w.gaps.push_back(gaps.empty() ? 0 : gaps.front());
    }
    return w;
}

SolveResult solveHellyCliques(const PqmTree& t, const std::vector<std::vector<int>>& cliques) {
    std::vector<CliqueAnalysis> analyses;
    for (const auto& c : cliques) analyses.push_back(analyzeClique(t, c));
    for (std::size_t i = 0; i < analyses.size(); ++i)
        if (analyses[i].type == CliqueType::AlwaysNonHelly) {
            SolveResult r;
            r.analyses = std::move(analyses);
            r.reason = "clique " + std::to_string(i + 1) + " is non-Helly in every model (" +
                       cliqueStageName(r.analyses[i].stage) + ")";
            return r;
        }
    if (ambiguousOnes(analyses).empty()) {
        SolveResult r;
        r.analyses = analyses;
        r.witness = verifyWitness(t, t.reference().word, cliques);
        if (!r.witness) throw std::logic_error("always-Helly cliques failed in the reference model");
        r.helly = true;
        return r;
    }
    if (t.rootCase() == RootCase::Serial) return solveSerial(t, cliques, analyses);
    return solvePrimeParallel(t, cliques, analyses);
}

SolveResult solvePrimeParallel(const PqmTree& t, const std::vector<std::vector<int>>& cliques,
                               const std::vector<CliqueAnalysis>& analyses) {
    SolveResult r;
    r.analyses = analyses;
    const auto amb = ambiguousOnes(analyses);
    const int k = static_cast<int>(amb.size());
    if (k > 30) throw std::invalid_argument("too many ambiguous cliques for slot enumeration");
    const ModelChoice base = t.referenceChoice();

    // Model for one slot side per ambiguous clique, or nothing.
    auto attempt = [&](std::int64_t mask) -> std::optional<ModelChoice> {
        NodeOrders orders;
        std::map<int, int> allowed;  // component -> bitmask of Q flips
        for (int i = 0; i < k; ++i) {
            const auto& a = analyses[sz(amb[sz(i)])];
            const auto& req = a.slots[static_cast<std::size_t>(mask >> i & 1)];
            orders.add(req);
            int bits = (req.qOrdering[0] ? 1 : 0) | (req.qOrdering[1] ? 2 : 0);
            auto [it, fresh] = allowed.emplace(a.component, bits);
            if (!fresh) it->second &= bits;
        }
        ModelChoice c = base;
        if (!orders.applyTo(t, c)) return std::nullopt;
        for (auto [q, bits] : allowed) {
            if (bits == 0) return std::nullopt;
            setQFlip(t, c, q, bits & 1 ? 0 : 1);
        }
        return c;
    };

    const std::int64_t total = std::int64_t{1} << k;
    std::atomic<std::int64_t> best{total};
    std::atomic<std::uint64_t> tried{0}, rejected{0};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t mask = 0; mask < total; ++mask) {
        if (mask >= best.load()) continue;
        ++tried;
        auto c = attempt(mask);
        if (!c) continue;
        if (!verifyWitness(t, t.generate(*c), cliques)) {
            ++rejected;
            continue;
        }
        std::int64_t cur = best.load();
        while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
        }
    }
    r.candidates = tried.load();
    r.rejectedWitnesses = rejected.load();
    if (best.load() == total) {
        r.reason = "no slot side assignment for the " + std::to_string(k) + " ambiguous cliques is consistent";
        return r;
    }
    r.helly = true;
    r.witness = verifyWitness(t, t.generate(*attempt(best.load())), cliques);
    return r;
}

std::optional<Skeleton> buildSkeleton(const std::vector<int>& privateModule, const std::vector<int>& lineA,
                                      const std::vector<int>& lineB) {
    Skeleton s;
    s.lineA = lineA;
    s.lineB = lineB;
    s.line.assign(privateModule.size(), -1);
    s.point.assign(privateModule.size(), Rational(0));
    auto place = [&](const std::vector<int>& seq, int line) {
        std::vector<int> group(seq.size());
        std::set<int> closed;
        int g = -1;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            int m = privateModule[sz(seq[i])];
            bool joins = i > 0 && m >= 0 && privateModule[sz(seq[i - 1])] == m;
            if (!joins) {
                if (m >= 0 && !closed.insert(m).second) return false;  // split group
                ++g;
            }
            group[i] = g;
        }
        const int groups = g + 1;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            s.line[sz(seq[i])] = line;
            s.point[sz(seq[i])] = line == 0 ? group[i] + 1 : groups - group[i];
        }
        return true;
    };
    if (!place(lineA, 0) || !place(lineB, 1)) return std::nullopt;
    return s;
}

SpannedTrapezoid buildTrapezoid(const PqmTree& t, const Skeleton& skel, const std::vector<std::vector<int>>& cleaned,
                                const std::vector<int>& privateModule, int module, int x) {
    SpannedTrapezoid tr{Interval::all(), Interval::all()};
    for (std::size_t i = 0; i < cleaned.size(); ++i) {
        if (skel.line[i] < 0) continue;
        Interval& side = skel.line[i] == 0 ? tr.top : tr.bottom;
        const Rational& p = skel.point[i];
        if (privateModule[i] == module) {
            side = side.meet(Interval::point(p));
            continue;
        }
        auto it = std::find_if(cleaned[i].begin(), cleaned[i].end(), [&](int v) { return t.moduleOf(v) == module; });
        if (it == cleaned[i].end()) continue;
        // the clique point must lie on the left side of S's chord
        bool right = t.forward(*it) == (x == 0);
        side = side.meet(right ? Interval{Bound::unbounded(), Bound::at(p, true)}
                               : Interval{Bound::at(p, true), Bound::unbounded()});
    }
    return tr;
}

std::optional<NodeOrders> admissibleModelForSides(const PqmTree& t, int module, const std::vector<int>& tauA,
                                                  const std::vector<int>& tauB, int x,
                                                  const std::vector<std::vector<int>>& cleaned,
                                                  const std::vector<CliqueAnalysis>& analyses) {
    NodeOrders orders;
    auto inModule = [&](int i) {
        std::vector<int> out;
        for (int v : cleaned[sz(i)])
            if (t.moduleOf(v) == module) out.push_back(v);
        return out;
    };
    auto slotSideFor = [&](const std::vector<int>& tau, int j) {
        for (std::size_t a = 0; a < tau.size(); ++a) {
            orders.add(analyses[sz(tau[a])].slots[sz(j)]);
            auto first = startsAndEnds(t, inModule(tau[a]), j).first;
            for (std::size_t b = a + 1; b < tau.size(); ++b)
                orders.add(slotPrecedence(t, first, startsAndEnds(t, inModule(tau[b]), j).second, j));
        }
    };
    slotSideFor(tauA, x);
    slotSideFor(tauB, 1 - x);
    ModelChoice probe = t.referenceChoice();
    if (!orders.applyTo(t, probe)) return std::nullopt;
    return orders;
}

SolveResult solveSerial(const PqmTree& t, const std::vector<std::vector<int>>& cliques,
                        const std::vector<CliqueAnalysis>& analyses) {
    SolveResult r;
    r.analyses = analyses;
    const auto amb = ambiguousOnes(analyses);
    const int k = static_cast<int>(amb.size());
    if (k > 10) throw std::invalid_argument("too many ambiguous cliques for circular order enumeration");
    const int modules = static_cast<int>(t.modules().size());
    const auto allCleaned = cleanedOf(analyses);
    std::vector<std::vector<int>> cleaned;
    std::vector<CliqueAnalysis> local;
    std::vector<int> privateModule;
    for (int i : amb) {
        cleaned.push_back(allCleaned[sz(i)]);
        local.push_back(analyses[sz(i)]);
        privateModule.push_back(analyses[sz(i)].stage == CliqueStage::Private ? analyses[sz(i)].module : -1);
    }

    // Candidate skeleton words: circular order (first clique fixed), start and length of line A.
    std::vector<std::vector<int>> orders;
    std::vector<int> rest(sz(k - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<int> o{0};
        o.insert(o.end(), rest.begin(), rest.end());
        orders.push_back(std::move(o));
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::vector<std::array<int, 3>> candidates;  // order, start, length
    for (int o = 0; o < static_cast<int>(orders.size()); ++o)
        for (int len = 0; len <= k; ++len)
            for (int start = 0; start < ((len == 0 || len == k) ? 1 : k); ++start) candidates.push_back({o, start, len});

    auto attempt = [&](const std::array<int, 3>& cand, bool& rejectedModel) -> std::optional<std::vector<Letter>> {
        const auto& o = orders[sz(cand[0])];
        std::vector<int> lineA, lineB;
        for (int i = 0; i < k; ++i) (i < cand[2] ? lineA : lineB).push_back(o[sz((cand[1] + i) % k)]);
        auto skel = buildSkeleton(privateModule, lineA, lineB);
        if (!skel) return std::nullopt;
        std::vector<std::array<SpannedTrapezoid, 2>> traps(sz(modules));
        std::vector<std::array<std::optional<NodeOrders>, 2>> adm(sz(modules));
        TwoSatFormula phi(modules);
        for (int s = 0; s < modules; ++s) {
            std::vector<int> tauA, tauB;
            for (int i : lineA)
                if (privateModule[sz(i)] == s) tauA.push_back(i);
            for (int i : lineB)
                if (privateModule[sz(i)] == s) tauB.push_back(i);
            for (int x = 0; x < 2; ++x) {
                traps[sz(s)][sz(x)] = buildTrapezoid(t, *skel, cleaned, privateModule, s, x);
                adm[sz(s)][sz(x)] = admissibleModelForSides(t, s, tauA, tauB, x, cleaned, local);
                if (traps[sz(s)][sz(x)].empty() || !adm[sz(s)][sz(x)]) phi.require({s, x != 0});
            }
        }
        for (int s1 = 0; s1 < modules; ++s1)
            for (int s2 = s1 + 1; s2 < modules; ++s2)
                for (int x1 = 0; x1 < 2; ++x1)
                    for (int x2 = 0; x2 < 2; ++x2)
                        if (!nicelyIntersect(traps[sz(s1)][sz(x1)], traps[sz(s2)][sz(x2)]))
                            phi.forbid({s1, x1 == 0}, {s2, x2 == 0});
        auto alpha = solveTwoSat(phi);
        if (!alpha) return std::nullopt;

        std::vector<SpannedTrapezoid> chosen;
        std::vector<int> above(sz(modules));
        for (int s = 0; s < modules; ++s) {
            above[sz(s)] = (*alpha)[sz(s)] ? 0 : 1;
            chosen.push_back(traps[sz(s)][sz(above[sz(s)])]);
        }
        auto segs = pickSegments(chosen);
        if (!segs.ok()) {
            rejectedModel = true;
            return std::nullopt;
        }
        std::vector<int> byTop(sz(modules)), byBottom(sz(modules));
        std::iota(byTop.begin(), byTop.end(), 0);
        std::iota(byBottom.begin(), byBottom.end(), 0);
        std::sort(byTop.begin(), byTop.end(), [&](int a, int b) { return segs.segments[sz(a)].top < segs.segments[sz(b)].top; });
        std::sort(byBottom.begin(), byBottom.end(), [&](int a, int b) { return segs.segments[sz(a)].bottom > segs.segments[sz(b)].bottom; });
        ModelChoice c = t.referenceChoice();
        c.slotOrder.clear();
        for (int s : byTop) c.slotOrder.push_back(slotOf(s, above[sz(s)]));
        for (int s : byBottom) c.slotOrder.push_back(slotOf(s, 1 - above[sz(s)]));
        for (int s = 0; s < modules; ++s) adm[sz(s)][sz(above[sz(s)])]->applyTo(t, c);
        auto word = t.generate(c);
        if (!verifyWitness(t, word, cliques)) {
            rejectedModel = true;
            return std::nullopt;
        }
        return word;
    };

    const auto total = static_cast<std::int64_t>(candidates.size());
    std::atomic<std::int64_t> best{total};
    std::atomic<std::uint64_t> tried{0}, rejected{0};
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i) {
        if (i >= best.load()) continue;
        ++tried;
        bool bad = false;
        auto word = attempt(candidates[sz(static_cast<int>(i))], bad);
        if (bad) ++rejected;
        if (!word) continue;
        std::int64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
    }
    r.candidates = tried.load();
    r.rejectedWitnesses = rejected.load();
    if (best.load() == total) {
        r.reason = "no circular order of the " + std::to_string(k) + " ambiguous cliques admits a skeleton";
        return r;
    }
    bool bad = false;
    r.witness = verifyWitness(t, *attempt(candidates[sz(static_cast<int>(best.load()))], bad), cliques);
    r.helly = true;
    return r;
}

}  // namespace hca
