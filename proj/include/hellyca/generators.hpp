#pragma once

#include "hellyca/graph.hpp"
#include "hellyca/instance.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hca {

class NormalizationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Triple = std::array<int, 3>;

// Betweenness instance on {1..n}: chords u_i, v_i under one serial node of
// one CA-module (plus a ring of four chords w, x, y, z holding it there), two triangles
// per triple.
Instance fromTotalOrdering(int n, const std::vector<Triple>& triples);
// Brute force over all orders of {1..n}.
bool totalOrderingSatisfiable(int n, const std::vector<Triple>& triples);

// K_{2n} minus a perfect matching {u_i, v_i}.
ChordModel matchingComplement(int n);

// Extend arcs until every non-degenerate pair has the relation forced by
// the neighbourhoods. The word must be an intersection model of g.
ChordModel normalize(const ChordModel& m, const Graph& g);

// Random arrangement repaired by normalize; resampled on failure.
ChordModel randomModel(int n, std::uint64_t seed);
// Same, but also free of twins and universal chords, so its relations are
// exactly the forced ones.
ChordModel randomReducedModel(int n, std::uint64_t seed);
// Reduced model whose arcs each span 30 to 80 percent of the circle, so
// large cliques and owners are common.
ChordModel randomDenseModel(int n, std::uint64_t seed);

std::vector<std::string> defaultNames(int n);

}  // namespace hca
