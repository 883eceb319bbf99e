#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace hca {

using Rational = boost::multiprecision::cpp_rational;

struct Bound {
    bool infinite = true;
    Rational value = 0;
    bool open = false;

    static Bound at(Rational v, bool open = false) { return {false, std::move(v), open}; }
    static Bound unbounded() { return {}; }
};

// Interval on a horizontal line; an infinite bound is open on that side.
struct Interval {
    Bound lo, hi;

    static Interval all() { return {}; }
    static Interval point(const Rational& v) { return {Bound::at(v), Bound::at(v)}; }
    static Interval closed(const Rational& a, const Rational& b) { return {Bound::at(a), Bound::at(b)}; }

    bool empty() const;
    bool contains(const Rational& x) const;
    // Intersection with another interval.
    Interval meet(const Interval& other) const;
};

// Region between line A (top) and line B (bottom) swept by segments with
// top endpoint in `top` and bottom endpoint in `bottom`.
struct SpannedTrapezoid {
    Interval top, bottom;
    bool empty() const { return top.empty() || bottom.empty(); }
};

struct SpannedSegment {
    Rational top, bottom;
};

// Segments inside T1 and T2 cross with pairwise distinct endpoints.
bool nicelyIntersect(const SpannedTrapezoid& t1, const SpannedTrapezoid& t2);

struct SegmentPick {
    std::vector<SpannedSegment> segments;         // one per trapezoid when found
    std::optional<std::pair<int, int>> conflict;  // a pair that does not nicely intersect
    bool ok() const { return !conflict; }
};

// Pairwise crossing segments with distinct endpoints, one inside each
// trapezoid, or a pair that rules them out.
SegmentPick pickSegments(const std::vector<SpannedTrapezoid>& ts);

}  // namespace hca
