#include "hellyca/trapezoid.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hca;

namespace {

SpannedTrapezoid box(int a0, int a1, int b0, int b1) {
    return {Interval::closed(a0, a1), Interval::closed(b0, b1)};
}

bool validPick(const std::vector<SpannedTrapezoid>& ts, const std::vector<SpannedSegment>& segs) {
    if (segs.size() != ts.size()) return false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!ts[i].top.contains(segs[i].top) || !ts[i].bottom.contains(segs[i].bottom)) return false;
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (segs[i].top == segs[j].top || segs[i].bottom == segs[j].bottom) return false;
            if ((segs[i].top < segs[j].top) == (segs[i].bottom < segs[j].bottom)) return false;
        }
    }
    return true;
}

Bound randomBound(std::mt19937& rng) {
    if (rng() % 6 == 0) return Bound::unbounded();
    return Bound::at(static_cast<int>(rng() % 7), rng() % 3 == 0);
}

Interval randomInterval(std::mt19937& rng) {
    Interval iv{randomBound(rng), randomBound(rng)};
    if (!iv.lo.infinite && !iv.hi.infinite && iv.lo.value > iv.hi.value) std::swap(iv.lo, iv.hi);
    return iv;
}

}  // namespace

TEST_CASE("nice intersection examples") {
    CHECK_FALSE(nicelyIntersect(box(0, 1, 0, 1), box(2, 3, 2, 3)));
    CHECK(nicelyIntersect(box(0, 1, 2, 3), box(2, 3, 0, 1)));
    CHECK(nicelyIntersect(box(0, 1, 0, 1), box(0, 1, 0, 1)));
    // single points cannot cross themselves
    CHECK_FALSE(nicelyIntersect(box(0, 0, 0, 0), box(0, 0, 0, 0)));
    // touching only at an open end
    SpannedTrapezoid open{{Bound::at(1, true), Bound::at(2)}, Interval::closed(0, 5)};
    CHECK(nicelyIntersect(open, box(0, 1, 0, 5)));
    CHECK(nicelyIntersect(open, {Interval::closed(0, 1), Interval::point(5)}));
    // tops can only be ordered one way and bottoms not at all
    SpannedTrapezoid low{{Bound::at(1, true), Bound::at(2)}, Interval::point(0)};
    CHECK_FALSE(nicelyIntersect(low, {Interval::closed(0, 1), Interval::point(0)}));
    // tops share only the open end 1
    SpannedTrapezoid right{{Bound::at(1, true), Bound::at(2)}, Interval::closed(0, 1)};
    CHECK(nicelyIntersect(right, {Interval::closed(0, 1), Interval::closed(0, 1)}));
    CHECK_FALSE(nicelyIntersect(right, {Interval::closed(0, 1), Interval::point(0)}));
}

TEST_CASE("segment picking on fixed cases") {
    auto one = pickSegments({box(0, 1, 0, 1)});
    REQUIRE(one.ok());
    CHECK(validPick({box(0, 1, 0, 1)}, one.segments));

    std::vector<SpannedTrapezoid> two{box(0, 1, 2, 3), box(2, 3, 0, 1)};
    auto p = pickSegments(two);
    REQUIRE(p.ok());
    CHECK(validPick(two, p.segments));

    auto bad = pickSegments({box(0, 1, 0, 1), box(2, 3, 2, 3)});
    REQUIRE(bad.conflict);
    CHECK(*bad.conflict == std::pair{0, 1});
}

TEST_CASE("segment picking on random families") {
    std::mt19937 rng(51);
    int found = 0, refused = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int t = 1 + trial % 10;
        std::vector<SpannedTrapezoid> ts;
        for (int i = 0; i < t; ++i) {
            // keep tops and bottoms loosely anti-correlated so many families succeed
            SpannedTrapezoid tr{randomInterval(rng), randomInterval(rng)};
            ts.push_back(tr);
        }
        bool allNice = true;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) allNice = allNice && nicelyIntersect(ts[static_cast<std::size_t>(i)], ts[static_cast<std::size_t>(j)]);
        for (const auto& tr : ts) allNice = allNice && !tr.empty();
        auto p = pickSegments(ts);
        CHECK(p.ok() == allNice);
        if (p.ok()) {
            CHECK(validPick(ts, p.segments));
            ++found;
        } else {
            ++refused;
        }
    }
    MESSAGE("found " << found << " refused " << refused);
    CHECK(found > 100);
}
