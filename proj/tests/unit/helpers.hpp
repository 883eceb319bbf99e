#pragma once

#include "hellyca/chord_model.hpp"
#include "hellyca/graph.hpp"

#include <random>
#include <string>

namespace testing_helpers {

inline hca::ChordModel model(const std::string& text) {
    return hca::ChordModel::fromWord(hca::CircularWord::parse(text));
}

inline int vid(const hca::ChordModel& m, const std::string& name) {
    for (int v = 0; v < m.size(); ++v)
        if (m.names[static_cast<std::size_t>(v)] == name) return v;
    return -1;
}

// Random arrangement of n chords named v0..v{n-1}.
inline hca::ChordModel randomWord(int n, std::mt19937& rng) {
    hca::ChordModel m;
    for (int v = 0; v < n; ++v) m.names.push_back("v" + std::to_string(v));
    for (int l = 0; l < 2 * n; ++l) m.word.push_back(l);
    std::shuffle(m.word.begin(), m.word.end(), rng);
    return m;
}

}  // namespace testing_helpers
