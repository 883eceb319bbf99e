#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hca {

enum class TokenKind : unsigned char { Tail = 0, Head = 1, Point = 2 };

struct Token {
    std::string name;
    TokenKind kind = TokenKind::Point;

    auto operator<=>(const Token&) const = default;

    bool isEndpoint() const { return kind != TokenKind::Point; }
    std::string str() const;
};

Token tail(std::string name);
Token head(std::string name);
Token point(std::string name);

// Parses "a^0", "a^1" or a bare point letter.
Token parseToken(std::string_view text);

bool isIdentifier(std::string_view s);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Clockwise sequence of tokens, compared up to rotation.
class CircularWord {
public:
    CircularWord() = default;
    explicit CircularWord(std::vector<Token> tokens);

    static CircularWord parse(std::string_view text);

    std::span<const Token> tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    const Token& operator[](std::size_t i) const { return tokens_[i]; }

    CircularWord rotated(std::size_t shift) const;
    std::string str() const;

    // Rotation-invariant equality.
    friend bool operator==(const CircularWord& a, const CircularWord& b);

private:
    std::vector<Token> tokens_;
};

CircularWord reflect(const CircularWord& w);
CircularWord restrict(const CircularWord& w, const std::set<Token>& keep);
std::vector<Token> canonicalRotation(const CircularWord& w);
bool isContiguous(const CircularWord& w, const std::set<Token>& subset);

// Index of the least rotation of a sequence under `less` (Booth).
template <class T, class Less>
std::size_t leastRotation(std::span<const T> s, Less less) {
    const long n = static_cast<long>(s.size());
    if (n == 0) return 0;
    std::vector<long> f(static_cast<std::size_t>(2 * n), -1);
    long k = 0;
    auto at = [&](long i) -> const T& { return s[static_cast<std::size_t>(i % n)]; };
    auto eq = [&](const T& a, const T& b) { return !less(a, b) && !less(b, a); };
    for (long j = 1; j < 2 * n; ++j) {
        const T& sj = at(j);
        long i = f[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && !eq(sj, at(k + i + 1))) {
            if (less(sj, at(k + i + 1))) k = j - i - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (!eq(sj, at(k + i + 1))) {
            if (less(sj, at(k))) k = j;
            f[static_cast<std::size_t>(j - k)] = -1;
        } else {
            f[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    return static_cast<std::size_t>(k % n);
}

}  // namespace hca
