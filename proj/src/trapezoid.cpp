#include "hellyca/trapezoid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// lo < hi as bounds (some x in lo-side below some y in hi-side)
bool lowBelowHigh(const Bound& lo, const Bound& hi) { return lo.infinite || hi.infinite || lo.value < hi.value; }

// Points of the line split into atoms: the open gaps between the finite
// bound values and the values themselves. Atom 2k + 1 is value k, atom 2k
// the gap just below it (atom 2m is the gap above the last value).
class Atoms {
public:
    explicit Atoms(const std::vector<Interval>& ivs) {
        for (const auto& iv : ivs)
            for (const Bound* b : {&iv.lo, &iv.hi})
                if (!b->infinite) values_.push_back(b->value);
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }

    int count() const { return 2 * static_cast<int>(values_.size()) + 1; }
    static bool shareable(int atom) { return atom % 2 == 0; }

    std::pair<int, int> range(const Interval& iv) const {
        int lo = 0, hi = count() - 1;
        if (!iv.lo.infinite) lo = 2 * index(iv.lo.value) + (iv.lo.open ? 2 : 1);
        if (!iv.hi.infinite) hi = 2 * index(iv.hi.value) + (iv.hi.open ? 0 : 1);
        return {lo, hi};
    }

    // `k` distinct increasing coordinates inside the atom.
    std::vector<Rational> spread(int atom, int k) const {
        if (atom % 2 == 1) return {values_[sz(atom / 2)]};
        const int g = atom / 2, m = static_cast<int>(values_.size());
        Rational lo = -1, hi = 1;
        if (m > 0) {
            lo = g > 0 ? values_[sz(g - 1)] : values_.front() - 1;
            hi = g < m ? values_[sz(g)] : values_.back() + 1;
        }
        std::vector<Rational> out;
        for (int i = 1; i <= k; ++i) out.push_back(lo + (hi - lo) * i / (k + 1));
        return out;
    }

private:
    int index(const Rational& v) const {
        return static_cast<int>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
    }
    std::vector<Rational> values_;
};

// Strictly increasing choice along `order`, greedy from the left; atoms per item.
std::optional<std::vector<int>> increasingAtoms(const std::vector<std::pair<int, int>>& ranges,
                                                const std::vector<int>& order) {
    std::vector<int> pick(ranges.size(), -1);
    int prev = -1;
    for (int i : order) {
        auto [lo, hi] = ranges[sz(i)];
        int a = std::max(lo, prev < 0 ? 0 : (Atoms::shareable(prev) ? prev : prev + 1));
        if (a > hi) return std::nullopt;
        pick[sz(i)] = prev = a;
    }
    return pick;
}

// Coordinates from atoms; items sharing a gap atom keep the order given.
std::vector<Rational> realize(const Atoms& atoms, const std::vector<int>& pick, const std::vector<int>& order) {
    std::map<int, std::vector<int>> byAtom;
    for (int i : order) byAtom[pick[sz(i)]].push_back(i);
    std::vector<Rational> out(pick.size());
    for (const auto& [atom, items] : byAtom) {
        auto xs = atoms.spread(atom, static_cast<int>(items.size()));
        for (std::size_t k = 0; k < items.size(); ++k) out[sz(items[k])] = xs[k];
    }
    return out;
}

Interval negated(const Interval& iv) { return {{iv.hi.infinite, -iv.hi.value, iv.hi.open}, {iv.lo.infinite, -iv.lo.value, iv.lo.open}}; }

}  // namespace

bool Interval::empty() const {
    if (lo.infinite || hi.infinite) return false;
    if (lo.value != hi.value) return lo.value > hi.value;
    return lo.open || hi.open;
}

bool Interval::contains(const Rational& x) const {
    bool aboveLo = lo.infinite || (lo.open ? x > lo.value : x >= lo.value);
    bool belowHi = hi.infinite || (hi.open ? x < hi.value : x <= hi.value);
    return aboveLo && belowHi;
}

Interval Interval::meet(const Interval& o) const {
    Interval r = *this;
    if (!o.lo.infinite && (r.lo.infinite || o.lo.value > r.lo.value || (o.lo.value == r.lo.value && o.lo.open))) r.lo = o.lo;
    if (!o.hi.infinite && (r.hi.infinite || o.hi.value < r.hi.value || (o.hi.value == r.hi.value && o.hi.open))) r.hi = o.hi;
    return r;
}

bool nicelyIntersect(const SpannedTrapezoid& t1, const SpannedTrapezoid& t2) {
    if (t1.empty() || t2.empty()) return false;
    bool leftCross = lowBelowHigh(t1.top.lo, t2.top.hi) && lowBelowHigh(t2.bottom.lo, t1.bottom.hi);
    bool rightCross = lowBelowHigh(t2.top.lo, t1.top.hi) && lowBelowHigh(t1.bottom.lo, t2.bottom.hi);
    return leftCross || rightCross;
}

SegmentPick pickSegments(const std::vector<SpannedTrapezoid>& ts) {
    SegmentPick out;
    const int t = static_cast<int>(ts.size());
    for (int i = 0; i < t; ++i) {
        if (ts[sz(i)].empty()) {
            out.conflict = std::pair{i, i};
            return out;
        }
        for (int j = i + 1; j < t; ++j)
            if (!nicelyIntersect(ts[sz(i)], ts[sz(j)])) {
                out.conflict = std::pair{i, j};
                return out;
            }
    }
    // i before j: top of i ends where top of j starts, or bottom of i starts
    // where bottom of j ends.
    auto notAfter = [](const Bound& hi, const Bound& lo) { return !hi.infinite && !lo.infinite && hi.value <= lo.value; };
    std::vector<std::vector<int>> next(sz(t));
    std::vector<int> indeg(sz(t), 0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            const auto &a = ts[sz(i)], &b = ts[sz(j)];
            if (notAfter(a.top.hi, b.top.lo) || notAfter(b.bottom.hi, a.bottom.lo)) {
                next[sz(i)].push_back(j);
                ++indeg[sz(j)];
            }
        }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < t; ++i)
        if (indeg[sz(i)] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        order.push_back(i);
        for (int j : next[sz(i)])
            if (--indeg[sz(j)] == 0) ready.push(j);
    }
    if (static_cast<int>(order.size()) != t) throw std::logic_error("pickSegments: corner relations are cyclic");

    std::vector<Interval> tops, bottoms;
    for (const auto& tr : ts) {
        tops.push_back(tr.top);
        bottoms.push_back(negated(tr.bottom));  // decreasing bottoms = increasing negated
    }
    Atoms topAtoms(tops), bottomAtoms(bottoms);
    std::vector<std::pair<int, int>> topRanges, bottomRanges;
    for (int i = 0; i < t; ++i) {
        topRanges.push_back(topAtoms.range(tops[sz(i)]));
        bottomRanges.push_back(bottomAtoms.range(bottoms[sz(i)]));
    }
    auto topPick = increasingAtoms(topRanges, order);
    auto bottomPick = increasingAtoms(bottomRanges, order);
    if (!topPick || !bottomPick) throw std::logic_error("pickSegments: no segments along the corner order");
    auto xs = realize(topAtoms, *topPick, order);
    auto ys = realize(bottomAtoms, *bottomPick, order);
    for (int i = 0; i < t; ++i) out.segments.push_back({xs[sz(i)], -ys[sz(i)]});
    return out;
}

}  // namespace hca
