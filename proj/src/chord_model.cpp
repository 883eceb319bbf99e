#include "hellyca/chord_model.hpp"

#include <algorithm>
#include <map>

namespace hca {

ChordModel ChordModel::fromWord(const CircularWord& w) {
    std::map<std::string, int> seen;
    for (const auto& t : w.tokens()) {
        if (!t.isEndpoint()) throw MalformedModel("point letter '" + t.name + "' inside a model");
        seen[t.name] |= (t.kind == TokenKind::Tail ? 1 : 2);
    }
    ChordModel m;
    std::map<std::string, int> index;
    for (const auto& [name, mask] : seen) {
        if (mask != 3) throw MalformedModel("vertex '" + name + "' lacks an endpoint");
        index[name] = static_cast<int>(m.names.size());
        m.names.push_back(name);
    }
    for (const auto& t : w.tokens())
        m.word.push_back(letterOf(index[t.name], t.kind == TokenKind::Tail ? 0 : 1));
    return m;
}

CircularWord ChordModel::toWord() const {
    std::vector<Token> tokens;
    tokens.reserve(word.size());
    for (Letter l : word) {
        const auto& name = names[static_cast<std::size_t>(vertexOf(l))];
        tokens.push_back(endOf(l) == 0 ? tail(name) : head(name));
    }
    return CircularWord(std::move(tokens));
}

std::vector<int> ChordModel::positions() const {
    std::vector<int> p(2 * names.size(), -1);
    for (std::size_t i = 0; i < word.size(); ++i) p[static_cast<std::size_t>(word[i])] = static_cast<int>(i);
    return p;
}

std::vector<Letter> canonicalLetters(const std::vector<Letter>& w) {
    auto k = leastRotation(std::span<const Letter>(w), std::less<Letter>{});
    std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

std::vector<Letter> ChordModel::canonicalWord() const { return canonicalLetters(word); }

bool ChordModel::sameAs(const ChordModel& other) const {
    return names == other.names && canonicalWord() == other.canonicalWord();
}

std::vector<Letter> reflectLetters(const std::vector<Letter>& w) {
    std::vector<Letter> out(w.rbegin(), w.rend());
    for (auto& l : out) l = partner(l);
    return out;
}

Geometry::Geometry(const ChordModel& m) : Geometry(m.size(), m.word) {}

Geometry::Geometry(int n, const std::vector<Letter>& word)
    : len_(static_cast<int>(word.size())), pos_(static_cast<std::size_t>(2 * n), -1) {
    for (int i = 0; i < len_; ++i) pos_[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])] = i;
}

bool Geometry::onArc(int v, int p) const {
    int a = pos(letterOf(v, 0));
    int b = pos(letterOf(v, 1));
    return (p - a + len_) % len_ <= (b - a + len_) % len_;
}

bool Geometry::crosses(int v, int u) const {
    return onArc(v, pos(letterOf(u, 0))) != onArc(v, pos(letterOf(u, 1)));
}

bool Geometry::leftOf(int v, int u) const {
    return onArc(v, pos(letterOf(u, 0))) && onArc(v, pos(letterOf(u, 1)));
}

bool Geometry::gapOnArc(int v, int p) const {
    // The gap after p is on the arc iff p is on the arc and p is not the head.
    return onArc(v, p) && p != pos(letterOf(v, 1));
}

}  // namespace hca
