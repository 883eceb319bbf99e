#include "hellyca/circular_word.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hca;

namespace {
CircularWord W(const char* s) { return CircularWord::parse(s); }
}

TEST_CASE("reflect reverses and swaps ends") {
    CHECK(reflect(W("a^0 b^1 c^0 a^1 b^0 c^1")).str() == "c^0 b^1 a^0 c^1 b^0 a^1");
    CHECK(reflect(W("a^0 a^1")) == W("a^0 a^1"));
    CHECK(reflect(W("a^0 x b^0 a^1 b^1")).str() == "b^0 a^0 b^1 x a^1");
    CHECK(reflect(CircularWord{}).empty());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Token> t;
        for (int v = 0; v < 4; ++v) {
            t.push_back(tail("v" + std::to_string(v)));
            t.push_back(head("v" + std::to_string(v)));
        }
        std::shuffle(t.begin(), t.end(), rng);
        CircularWord w(t);
        CHECK(reflect(reflect(w)) == w);
    }
}

TEST_CASE("restrict keeps cyclic order") {
    auto w = W("a^0 b^1 c^0 a^1 b^0 c^1");
    CHECK(restrict(w, {tail("a"), head("a")}).str() == "a^0 a^1");
    CHECK(restrict(w, {tail("b"), head("b"), tail("c"), head("c")}) == W("b^1 c^0 b^0 c^1"));
    std::set<Token> all(w.tokens().begin(), w.tokens().end());
    CHECK(restrict(w, all) == w);
    for (std::size_t r = 0; r < w.size(); ++r)
        CHECK(restrict(w.rotated(r), {tail("b"), tail("c"), head("a")}) == restrict(w, {tail("b"), tail("c"), head("a")}));
}

TEST_CASE("canonical rotation") {
    auto c = canonicalRotation(W("b^0 a^0"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == tail("a"));
    CHECK(c[1] == tail("b"));
    CHECK(CircularWord(canonicalRotation(W("c^1 a^0 b^1"))).str() == "a^0 b^1 c^1");
    auto w = W("a^0 b^1 c^0 a^1 b^0 c^1");
    for (std::size_t r = 0; r < w.size(); ++r) CHECK(canonicalRotation(w.rotated(r)) == canonicalRotation(w));
}

TEST_CASE("least rotation agrees with naive search on all short sequences") {
    // every sequence over a 3-letter alphabet up to length 8
    for (int len = 1; len <= 8; ++len) {
        int total = 1;
        for (int i = 0; i < len; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
            std::vector<int> s;
            for (int i = 0, x = code; i < len; ++i, x /= 3) s.push_back(x % 3);
            std::vector<int> best = s;
            for (int r = 1; r < len; ++r) {
                std::vector<int> rot(s.begin() + r, s.end());
                rot.insert(rot.end(), s.begin(), s.begin() + r);
                best = std::min(best, rot);
            }
            auto k = leastRotation(std::span<const int>(s), std::less<int>{});
            std::vector<int> got(s.begin() + static_cast<long>(k), s.end());
            got.insert(got.end(), s.begin(), s.begin() + static_cast<long>(k));
            REQUIRE(got == best);
        }
    }
}

TEST_CASE("rotation equality is exact on short words") {
    // words of distinct tokens: equal canonical form iff rotations
    std::vector<Token> base{tail("a"), head("a"), tail("b"), head("b")};
    std::vector<Token> perm = base;
    std::sort(perm.begin(), perm.end());
    std::vector<std::vector<Token>> all;
    do all.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& x : all)
        for (const auto& y : all) {
            bool rotation = false;
            for (std::size_t r = 0; r < x.size(); ++r) {
                std::vector<Token> rx(x.begin() + static_cast<long>(r), x.end());
                rx.insert(rx.end(), x.begin(), x.begin() + static_cast<long>(r));
                rotation |= rx == y;
            }
            CHECK((canonicalRotation(CircularWord(x)) == canonicalRotation(CircularWord(y))) == rotation);
        }
}

TEST_CASE("contiguity") {
    auto w = W("a^0 b^0 a^1 b^1");
    CHECK(isContiguous(w, {tail("a"), tail("b")}));
    CHECK_FALSE(isContiguous(w, {tail("a"), head("a")}));
    CHECK(isContiguous(w, {tail("a"), tail("b"), head("a"), head("b")}));
    CHECK(isContiguous(w, {head("b"), tail("a")}));  // wraps around
}

TEST_CASE("parsing rejects malformed text") {
    CHECK_THROWS_AS(W("a^0 a^0"), ParseError);
    CHECK_THROWS_AS(W("a^2"), ParseError);
    CHECK_THROWS_AS(W("1a^0"), ParseError);
    CHECK(W("p a^0 a^1").size() == 3);
}
