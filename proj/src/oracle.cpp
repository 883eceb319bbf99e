#include "hellyca/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <optional>

namespace hca {

namespace {

struct Search {
    const RelationTable& rel;
    int n;
    std::vector<Letter> word;
    std::vector<int> pos;  // per letter, -1 when unplaced
    std::vector<char> used;

    explicit Search(const RelationTable& r) : rel(r), n(r.size()), pos(static_cast<std::size_t>(2 * r.size()), -1),
                                              used(static_cast<std::size_t>(2 * r.size()), 0) {}

    // Missing endpoints lie after everything placed so far; `late` says
    // which of two missing endpoints comes last.
    int at(Letter l, Letter late) const {
        int p = pos[static_cast<std::size_t>(l)];
        if (p >= 0) return p;
        return l == late ? 2 * n + 1 : 2 * n;
    }
    bool placed(Letter l) const { return pos[static_cast<std::size_t>(l)] >= 0; }

    PairRelation relation(int v, int u, Letter late) const {
        auto onArc = [&](int x, int p) {
            int a = at(letterOf(x, 0), late), b = at(letterOf(x, 1), late);
            return a <= b ? (p >= a && p <= b) : (p >= a || p <= b);
        };
        bool u0 = onArc(v, at(letterOf(u, 0), late));
        bool u1 = onArc(v, at(letterOf(u, 1), late));
        bool v0 = onArc(u, at(letterOf(v, 0), late));
        bool v1 = onArc(u, at(letterOf(v, 1), late));
        if (u0 != u1) return PairRelation::Overlap;
        if (u0 && v0 && v1) return PairRelation::CoverCircle;
        if (u0) return PairRelation::Contains;
        if (v0 && v1) return PairRelation::ContainedIn;
        return PairRelation::Disjoint;
    }

    Letter missing(int v) const { return placed(letterOf(v, 0)) ? letterOf(v, 1) : letterOf(v, 0); }

    bool consistentAfterPlacing(Letter l) const {
        const int x = vertexOf(l);
        const bool complete = placed(partner(l));
        for (int u = 0; u < n; ++u) {
            if (u == x) continue;
            bool uComplete = placed(letterOf(u, 0)) && placed(letterOf(u, 1));
            bool uStarted = placed(letterOf(u, 0)) || placed(letterOf(u, 1));
            if (!uStarted) continue;
            const auto want = rel.at(x, u);
            if (complete || uComplete) {
                if (relation(x, u, -1) != want) return false;
            } else if (relation(x, u, missing(x)) != want && relation(x, u, missing(u)) != want) {
                return false;
            }
        }
        return true;
    }

    template <class Emit>
    void run(Emit&& emit) {
        const int len = 2 * n;
        if (static_cast<int>(word.size()) == len) {
            emit(word);
            return;
        }
        const int p = static_cast<int>(word.size());
        for (Letter l = 0; l < len; ++l) {
            if (used[static_cast<std::size_t>(l)]) continue;
            used[static_cast<std::size_t>(l)] = 1;
            pos[static_cast<std::size_t>(l)] = p;
            word.push_back(l);
            bool ok = consistentAfterPlacing(l);
            if (ok) run(emit);
            word.pop_back();
            pos[static_cast<std::size_t>(l)] = -1;
            used[static_cast<std::size_t>(l)] = 0;
        }
    }

    void place(Letter l) {
        used[static_cast<std::size_t>(l)] = 1;
        pos[static_cast<std::size_t>(l)] = static_cast<int>(word.size());
        word.push_back(l);
    }
};

}  // namespace

WordSet enumerateByFilterSerial(const RelationTable& rel, std::uint64_t cap) {
    WordSet out;
    if (rel.size() == 0) {
        out.insert({});
        return out;
    }
    Search s(rel);
    s.place(0);
    s.run([&](const std::vector<Letter>& w) {
        out.insert(canonicalLetters(w));
        if (out.size() > cap) throw OracleCapExceeded("oracle enumeration exceeds cap");
    });
    return out;
}

WordSet enumerateByFilter(const RelationTable& rel, std::uint64_t cap) {
    const int n = rel.size();
    if (n <= 2) return enumerateByFilterSerial(rel, cap);
    // one task per choice of the second letter
    const int len = 2 * n;
    std::vector<WordSet> parts(static_cast<std::size_t>(len));
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic)
    for (int second = 1; second < len; ++second) {
        if (overflow.load()) continue;
        Search s(rel);
        s.place(0);
        s.place(second);
        if (!s.consistentAfterPlacing(second)) continue;
        auto& part = parts[static_cast<std::size_t>(second)];
        s.run([&](const std::vector<Letter>& w) {
            if (overflow.load()) return;
            part.insert(canonicalLetters(w));
            if (part.size() > cap) overflow.store(true);
        });
    }
    if (overflow.load()) throw OracleCapExceeded("oracle enumeration exceeds cap");
    WordSet out;
    for (auto& p : parts) out.merge(p);
    if (out.size() > cap) throw OracleCapExceeded("oracle enumeration exceeds cap");
    return out;
}

WordSet enumerateByFilter(const Graph& g, std::uint64_t cap) {
    return enumerateByFilter(relationsFromGraph(g), cap);
}

bool hellyInWord(int n, const std::vector<Letter>& word, const std::vector<int>& clique) {
    Geometry geo(n, word);
    for (int p = 0; p < geo.length(); ++p)
        if (std::all_of(clique.begin(), clique.end(), [&](int v) { return geo.gapOnArc(v, p); })) return true;
    return clique.empty();
}

CliqueType oracleCliqueType(int n, const WordSet& models, const std::vector<int>& clique) {
    bool some = false, all = true;
    for (const auto& w : models) {
        bool h = hellyInWord(n, w, clique);
        some |= h;
        all &= h;
    }
    if (all) return CliqueType::AlwaysHelly;
    if (!some) return CliqueType::AlwaysNonHelly;
    return CliqueType::Ambiguous;
}

std::optional<std::vector<Letter>> oracleHellyCliques(int n, const WordSet& models,
                                                      const std::vector<std::vector<int>>& cliques) {
    for (const auto& w : models)
        if (std::all_of(cliques.begin(), cliques.end(), [&](const auto& c) { return hellyInWord(n, w, c); })) return w;
    return std::nullopt;
}

}  // namespace hca
