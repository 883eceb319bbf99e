#include "hellyca/circular_word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hca {

std::string Token::str() const {
    switch (kind) {
    case TokenKind::Tail: return name + "^0";
    case TokenKind::Head: return name + "^1";
    case TokenKind::Point: return name;
    }
    return name;
}

Token tail(std::string name) { return {std::move(name), TokenKind::Tail}; }
Token head(std::string name) { return {std::move(name), TokenKind::Head}; }
Token point(std::string name) { return {std::move(name), TokenKind::Point}; }

bool isIdentifier(std::string_view s) {
    if (s.empty()) return false;
    auto first = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(first) || s[0] == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Token parseToken(std::string_view text) {
    auto caret = text.find('^');
    if (caret == std::string_view::npos) {
        if (!isIdentifier(text)) throw ParseError("bad token '" + std::string(text) + "'");
        return point(std::string(text));
    }
    auto name = text.substr(0, caret);
    auto sup = text.substr(caret + 1);
    if (!isIdentifier(name) || (sup != "0" && sup != "1"))
        throw ParseError("bad token '" + std::string(text) + "'");
    return sup == "0" ? tail(std::string(name)) : head(std::string(name));
}

CircularWord::CircularWord(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    std::set<Token> seen;
    for (const auto& t : tokens_) {
        if (!isIdentifier(t.name)) throw ParseError("bad token name '" + t.name + "'");
        if (!seen.insert(t).second) throw ParseError("token '" + t.str() + "' occurs twice");
    }
}

CircularWord CircularWord::parse(std::string_view text) {
    std::vector<Token> tokens;
    std::istringstream in{std::string(text)};
    std::string item;
    while (in >> item) tokens.push_back(parseToken(item));
    return CircularWord(std::move(tokens));
}

CircularWord CircularWord::rotated(std::size_t shift) const {
    if (tokens_.empty()) return *this;
    auto t = tokens_;
    std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(shift % t.size()), t.end());
    CircularWord w;
    w.tokens_ = std::move(t);
    return w;
}

std::string CircularWord::str() const {
    std::string out;
    for (const auto& t : tokens_) {
        if (!out.empty()) out += ' ';
        out += t.str();
    }
    return out;
}

bool operator==(const CircularWord& a, const CircularWord& b) {
    return a.size() == b.size() && canonicalRotation(a) == canonicalRotation(b);
}

CircularWord reflect(const CircularWord& w) {
    std::vector<Token> out(w.tokens().rbegin(), w.tokens().rend());
    for (auto& t : out) {
        if (t.kind == TokenKind::Tail) t.kind = TokenKind::Head;
        else if (t.kind == TokenKind::Head) t.kind = TokenKind::Tail;
    }
    return CircularWord(std::move(out));
}

CircularWord restrict(const CircularWord& w, const std::set<Token>& keep) {
    std::vector<Token> out;
    for (const auto& t : w.tokens())
        if (keep.count(t)) out.push_back(t);
    return CircularWord(std::move(out));
}

std::vector<Token> canonicalRotation(const CircularWord& w) {
    auto k = leastRotation(w.tokens(), std::less<Token>{});
    auto r = w.rotated(k);
    return {r.tokens().begin(), r.tokens().end()};
}

bool isContiguous(const CircularWord& w, const std::set<Token>& subset) {
    const std::size_t n = w.size();
    std::size_t inside = 0;
    std::size_t starts = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool in = subset.count(w[i]) > 0;
        bool prevIn = subset.count(w[(i + n - 1) % n]) > 0;
        inside += in;
        if (in && !prevIn) ++starts;
    }
    return inside == 0 || inside == n || starts == 1;
}

}  // namespace hca
