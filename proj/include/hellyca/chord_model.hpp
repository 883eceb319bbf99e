#pragma once

#include "hellyca/circular_word.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hca {

// Endpoint letter of vertex v: 2v is v^0 (tail), 2v+1 is v^1 (head).
using Letter = int;

constexpr int vertexOf(Letter l) { return l >> 1; }
constexpr int endOf(Letter l) { return l & 1; }
constexpr Letter letterOf(int v, int end) { return 2 * v + end; }
constexpr Letter partner(Letter l) { return l ^ 1; }

class MalformedModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Oriented chords on vertices 0..n-1 listed clockwise; the arc of v runs
// clockwise from v^0 to v^1 and lies on the left side of the chord.
struct ChordModel {
    std::vector<std::string> names;
    std::vector<Letter> word;

    int size() const { return static_cast<int>(names.size()); }

    // Vertex indices follow the sorted order of names.
    static ChordModel fromWord(const CircularWord& w);
    CircularWord toWord() const;
    std::string str() const { return toWord().str(); }

    // positions()[letter] = index of that letter in word.
    std::vector<int> positions() const;

    // Same names, same word up to rotation.
    bool sameAs(const ChordModel& other) const;
    std::vector<Letter> canonicalWord() const;
};

// Letter-level reflection: reverse and swap ends.
std::vector<Letter> reflectLetters(const std::vector<Letter>& w);
std::vector<Letter> canonicalLetters(const std::vector<Letter>& w);

// Position arithmetic on a fixed model.
class Geometry {
public:
    explicit Geometry(const ChordModel& m);
    Geometry(int n, const std::vector<Letter>& word);

    int length() const { return len_; }
    int pos(Letter l) const { return pos_[static_cast<std::size_t>(l)]; }
    // Is position p on the arc of v (clockwise v^0..v^1, inclusive)?
    bool onArc(int v, int p) const;
    bool crosses(int v, int u) const;
    // Both endpoints of u lie on the arc of v.
    bool leftOf(int v, int u) const;
    // The gap just after position p lies on the arc of v.
    bool gapOnArc(int v, int p) const;

private:
    int len_ = 0;
    std::vector<int> pos_;
};

}  // namespace hca
