#include "hellyca/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hca {

namespace {

std::string padded(const std::string& prefix, int i, int width) {
    std::string s = std::to_string(i);
    return prefix + std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

int digits(int n) { return static_cast<int>(std::to_string(n).size()); }

// Word over named chords, letters given as (name, end); indices follow the
// sorted names.
ChordModel assemble(const std::vector<std::pair<std::string, int>>& seq) {
    std::vector<Token> toks;
    for (const auto& [name, end] : seq) toks.push_back(end == 0 ? tail(name) : head(name));
    return ChordModel::fromWord(CircularWord(std::move(toks)));
}

}  // namespace

std::vector<std::string> defaultNames(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : padded("v", i, digits(n - 1)));
    return names;
}

ChordModel matchingComplement(int n) {
    if (n < 1) throw std::invalid_argument("matchingComplement needs n >= 1");
    const int w = digits(n);
    std::vector<std::pair<std::string, int>> seq;
    // first slot: v_i^1 u_i^0 pairs, second slot: u_i^1 v_i^0 pairs
    for (int i = 1; i <= n; ++i) {
        seq.emplace_back(padded("v", i, w), 1);
        seq.emplace_back(padded("u", i, w), 0);
    }
    for (int i = 1; i <= n; ++i) {
        seq.emplace_back(padded("u", i, w), 1);
        seq.emplace_back(padded("v", i, w), 0);
    }
    return assemble(seq);
}

Instance fromTotalOrdering(int n, const std::vector<Triple>& triples) {
    if (n < 1) throw std::invalid_argument("fromTotalOrdering needs n >= 1");
    for (const auto& t : triples) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw std::invalid_argument("triple with repeated elements");
        for (int x : t)
            if (x < 1 || x > n) throw std::invalid_argument("triple element outside 1..n");
    }
    // The pairs {u_i, v_i} must sit under one serial node of a single
    // CA-module; alone they split into n CA-modules whose slots can
    // interleave freely. Four ring chords w, x, y, z close the module into
    // an overlap 5-cycle, which is prime and has no pendant chord (a pendant
    // chord would be forced inside its neighbour).
    const int w = digits(n);
    std::vector<std::pair<std::string, int>> seq;
    auto module = [&](bool first) {
        for (int i = 1; i <= n; ++i) {
            seq.emplace_back(padded(first ? "v" : "u", i, w), 1);
            seq.emplace_back(padded(first ? "u" : "v", i, w), 0);
        }
    };
    module(true);
    seq.emplace_back("z", 1);
    seq.emplace_back("w", 0);
    module(false);
    for (auto [name, end] : std::vector<std::pair<const char*, int>>{{"x", 0}, {"w", 1}, {"y", 0}, {"x", 1}, {"z", 0}, {"y", 1}})
        seq.emplace_back(name, end);

    Instance inst;
    inst.model = assemble(seq);
    auto id = [&](const char* p, int i) {
        std::string name = padded(p, i, w);
        return static_cast<int>(std::find(inst.model.names.begin(), inst.model.names.end(), name) - inst.model.names.begin());
    };
    auto sorted = [](std::vector<int> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    for (const auto& [x, y, z] : triples) {
        inst.cliques.push_back(sorted({id("v", x), id("u", y), id("u", z)}));
        inst.cliques.push_back(sorted({id("v", z), id("u", x), id("u", y)}));
    }
    return inst;
}

bool totalOrderingSatisfiable(int n, const std::vector<Triple>& triples) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<int> rank(static_cast<std::size_t>(n + 1));
    do {
        for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        bool ok = std::all_of(triples.begin(), triples.end(), [&](const Triple& t) {
            int a = rank[static_cast<std::size_t>(t[0])], b = rank[static_cast<std::size_t>(t[1])], c = rank[static_cast<std::size_t>(t[2])];
            return (a < b && b < c) || (a > b && b > c);
        });
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

namespace {

int severity(PairRelation r) {
    switch (r) {
    case PairRelation::CoverCircle: return 0;
    case PairRelation::Contains:
    case PairRelation::ContainedIn: return 1;
    default: return 2;
    }
}

// Moves one end of x so that position of letter e becomes covered, taking
// the shorter of the two extensions.
void extendToCover(std::vector<Letter>& word, int x, Letter e) {
    const int len = static_cast<int>(word.size());
    auto posOf = [&](Letter l) { return static_cast<int>(std::find(word.begin(), word.end(), l) - word.begin()); };
    int p0 = posOf(letterOf(x, 0)), p1 = posOf(letterOf(x, 1)), pe = posOf(e);
    int forward = (pe - p1 + len) % len;   // letters passed moving the head
    int backward = (p0 - pe + len) % len;  // letters passed moving the tail
    Letter moved = forward <= backward ? letterOf(x, 1) : letterOf(x, 0);
    word.erase(word.begin() + posOf(moved));
    int at = posOf(e);
    word.insert(word.begin() + (moved == letterOf(x, 1) ? at + 1 : at), moved);
}

// One repair step for a pair whose geometry differs from the forced relation.
// Returns false when extension cannot help.
bool repair(std::vector<Letter>& word, int n, int v, int u, PairRelation want) {
    Geometry geo(n, word);
    auto covers = [&](int x, Letter l) { return geo.onArc(x, geo.pos(l)); };
    auto coverAll = [&](int x, int y) {
        for (int e = 0; e < 2; ++e)
            if (!covers(x, letterOf(y, e))) {
                extendToCover(word, x, letterOf(y, e));
                return true;
            }
        return false;
    };
    switch (want) {
    case PairRelation::CoverCircle:
        return coverAll(v, u) || coverAll(u, v);
    case PairRelation::Contains:
        return coverAll(v, u);
    case PairRelation::ContainedIn:
        return coverAll(u, v);
    case PairRelation::Overlap: {
        auto have = geometricRelation(geo, v, u);
        int inner = have == PairRelation::Contains ? u : have == PairRelation::ContainedIn ? v : -1;
        if (inner < 0) return false;
        int outer = inner == u ? v : u;
        // push the inner arc past the nearer end of the outer one
        Letter target = letterOf(outer, 1);
        int len = static_cast<int>(word.size());
        int toHead = (geo.pos(letterOf(outer, 1)) - geo.pos(letterOf(inner, 1)) + len) % len;
        int toTail = (geo.pos(letterOf(inner, 0)) - geo.pos(letterOf(outer, 0)) + len) % len;
        if (toTail < toHead) target = letterOf(outer, 0);
        extendToCover(word, inner, target);
        return true;
    }
    case PairRelation::Disjoint: return false;
    }
    return false;
}

}  // namespace

ChordModel normalize(const ChordModel& m, const Graph& g) {
    const int n = m.size();
    if (validateConformal(m, g).ok) return m;
    auto meetsOk = [&](const std::vector<Letter>& word) {
        Geometry geo(n, word);
        for (int v = 0; v < n; ++v)
            for (int u = v + 1; u < n; ++u)
                if ((geometricRelation(geo, v, u) != PairRelation::Disjoint) != g.adjacent(v, u)) return false;
        return true;
    };
    if (!meetsOk(m.word)) throw NormalizationFailed("word is not an intersection model of the graph");

    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (g.adjacent(v, u) && !g.isUniversal(v) && !g.isUniversal(u) && !g.areTwins(v, u)) pairs.emplace_back(v, u);
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
        return severity(forcedRelation(g, a.first, a.second)) < severity(forcedRelation(g, b.first, b.second));
    });

    std::vector<Letter> word = m.word;
    const int rounds = std::max(1, n * n);
    for (int round = 0; round < rounds; ++round) {
        bool changed = false;
        for (auto [v, u] : pairs) {
            auto want = forcedRelation(g, v, u);
            // a pair may need several endpoint moves
            for (int step = 0; step < 4; ++step) {
                if (geometricRelation(Geometry(n, word), v, u) == want) break;
                if (!repair(word, n, v, u, want)) throw NormalizationFailed("pair cannot be repaired by extension");
                if (!meetsOk(word)) throw NormalizationFailed("extension changed the intersection graph");
                changed = true;
            }
        }
        if (!changed) break;
    }
    ChordModel out{m.names, word};
    if (!validateConformal(out, g).ok) throw NormalizationFailed("no fixpoint within the round limit");
    return out;
}

namespace {

std::vector<Letter> shuffledLetters(int n, std::mt19937_64& rng) {
    std::vector<Letter> word;
    for (Letter l = 0; l < 2 * n; ++l) word.push_back(l);
    std::shuffle(word.begin(), word.end(), rng);
    return word;
}

std::vector<Letter> longArcLetters(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> start(0.0, 1.0), span(0.3, 0.8);
    std::vector<std::pair<double, Letter>> ends;
    for (int v = 0; v < n; ++v) {
        double a = start(rng);
        ends.emplace_back(a, letterOf(v, 0));
        ends.emplace_back(std::fmod(a + span(rng), 1.0), letterOf(v, 1));
    }
    std::sort(ends.begin(), ends.end());
    std::vector<Letter> word;
    for (auto [x, l] : ends) word.push_back(l);
    return word;
}

template <class Source, class Accept>
ChordModel sampleUntil(int n, std::uint64_t seed, Source source, Accept accept) {
    if (n < 1) throw std::invalid_argument("randomModel needs n >= 1");
    std::mt19937_64 rng(seed);
    auto names = defaultNames(n);
    for (;;) {
        ChordModel m{names, source(n, rng)};
        // fix the rotation so the output only depends on the arrangement
        m.word = canonicalLetters(m.word);
        if (!accept(m)) continue;
        try {
            return ChordModel{names, canonicalLetters(normalize(m, graphFromModel(m)).word)};
        } catch (const NormalizationFailed&) {
        }
    }
}

}  // namespace

ChordModel randomModel(int n, std::uint64_t seed) {
    return sampleUntil(n, seed, shuffledLetters, [](const ChordModel&) { return true; });
}

ChordModel randomReducedModel(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("a reduced model needs n >= 2");
    return sampleUntil(n, seed, shuffledLetters, [](const ChordModel& m) { return !graphFromModel(m).hasTwinsOrUniversal(); });
}

ChordModel randomDenseModel(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("a reduced model needs n >= 2");
    return sampleUntil(n, seed, longArcLetters, [](const ChordModel& m) { return !graphFromModel(m).hasTwinsOrUniversal(); });
}

}  // namespace hca
